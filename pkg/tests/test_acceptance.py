"""End-to-end acceptance gate: every registered check must pass at its
stated (exact) tolerance under the default configuration."""

import pytest

from weylkit import checks
from weylkit.cli import SuiteConfig

CONFIG = SuiteConfig()

_BY_ID = {c.check_id: c for c in checks.REGISTRY}


@pytest.mark.parametrize("check_id", sorted(_BY_ID, key=lambda s: int(s[1:])))
def test_acceptance(check_id):
    check = _BY_ID[check_id]
    witness = check.run(CONFIG)
    assert isinstance(witness, str) and witness


def test_full_registry_report_is_all_pass():
    rows = checks.run_checks(CONFIG)
    assert [r[0] for r in rows] == [f"C{i}" for i in range(1, 12)]
    failures = [r for r in rows if r[2] != "PASS"]
    assert failures == []
