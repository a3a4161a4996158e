#!/usr/bin/env python3
"""Enumerate the certified self-dual isotropic lattice points at small
sizes and report the two counting routes side by side.

Usage: python scripts/enumerate_lattices.py [p ...]   (default: 3 5)
"""

import sys

from weylkit import lattices


def main():
    primes = [int(x) for x in sys.argv[1:]] or [3, 5]
    n = 1
    for p in primes:
        points, direct = lattices.enumerate_X_n(p, n)
        print(f"p={p} n={n}: certified={len(points)} direct={direct}")
        for z in points:
            rows = ";".join(",".join(str(x) for x in row) for row in z.basis)
            d = lattices.d_invariant(z)
            lie = lattices.is_lie_closed(z)
            print(f"  basis={rows} d={d} lie_closed={lie}")
        print(f"  borel fiber count at q={p}: {lattices.borel_fiber_count(p)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
