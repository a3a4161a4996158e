#!/usr/bin/env python3
"""Run the full check registry and write a TSV report.

Usage: python scripts/run_verification.py [report.tsv]
"""

import sys

from weylkit import checks
from weylkit.cli import SuiteConfig


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "report.tsv"
    rows = checks.run_checks(SuiteConfig())
    lines = ["\t".join(("check_id", "anchor", "status", "witness"))]
    lines += ["\t".join(str(x) for x in row) for row in rows]
    text = "\n".join(lines) + "\n"
    with open(out_path, "w", encoding="utf-8") as handle:
        handle.write(text)
    sys.stdout.write(text)
    failures = [r for r in rows if r[2] != "PASS"]
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
