#!/usr/bin/env python3
"""Scan the rational grid on the rank-1 fundamental domain: cell labels,
torus point orders, stabilizer lift checks, and induced-module norms.

Usage: python scripts/scan_torus_grid.py [max_denominator]
"""

import sys

from weylkit import alcove, reps
from weylkit.cartan import cartan_datum


def main():
    denom = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    datum = cartan_datum("A1")
    geo = alcove.geometry(datum, ())
    print("point\tcell\torder\tlift_ok\tmodules\tnorms")
    for d in alcove.sample_grid(datum, (), denom):
        cell = alcove.cell_of(d)
        t = alcove.p_J(datum, (), d)
        lift = alcove.torus_stabilizer(datum, (), t, S=cell.S).lift_ok
        letters = [k for k in geo.jcheck if k not in set(cell.S)]
        norms = []
        for rho in reps.lift_characters(geo, letters):
            rep = reps.build_irreducible(datum, (), cell.S, d, rho)
            norms.append(reps.character_norm(rep, t.order).render())
        point = " ".join(str(c[0]) for c in d.coords)
        cell_str = "{" + ",".join(str(s) for s in cell.S) + "}"
        print(f"{point}\t{cell_str}\t{t.order}\t{lift}"
              f"\t{len(norms)}\t{' '.join(norms)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
