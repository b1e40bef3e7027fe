"""Sweep words, build A^I, and record determinant, defects and oracle agreement.

    python3 scripts/freeness_probe.py --types A2 B2 G2 --max-length 4 -K 3

Row reduction obstructions are reported, never raised.
"""

import argparse
import time
from itertools import product

from bsassign.assignmod import RREFObstruction, assignment_basis, basis_determinant, defect_report
from bsassign.oracle import completeness_table
from bsassign.rootsys import RootSystem


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--types", nargs="+", default=["A2", "B2", "G2"])
    ap.add_argument("--max-length", type=int, default=4)
    ap.add_argument("-K", type=int, default=3, help="oracle degree bound (0 skips the oracle)")
    args = ap.parse_args()

    print("type word       det_deg defects oracle seconds")
    obstructions = 0
    for name in args.types:
        rs = RootSystem.parse(name)
        for d in range(args.max_length + 1):
            for word in product(range(1, rs.rank + 1), repeat=d):
                t0 = time.perf_counter()
                label = ",".join(map(str, word)) or "-"
                try:
                    A = assignment_basis(rs, word)
                except RREFObstruction as exc:
                    obstructions += 1
                    print(f"{name:4} {label:10} obstruction: {exc}")
                    continue
                det = basis_determinant(A)
                ndef = len(defect_report(rs, word).defects)
                oracle = "-"
                if args.K:
                    oracle = "ok" if all(r.agrees for r in completeness_table(rs, word, args.K)) else "MISMATCH"
                deg = det.degree() if det else "zero"
                print(f"{name:4} {label:10} {deg!s:>7} {ndef:>7} {oracle:>6} {time.perf_counter() - t0:7.2f}")
    print(f"obstructions: {obstructions}")


if __name__ == "__main__":
    main()
