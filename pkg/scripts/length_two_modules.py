"""Koszul-up-to-N report for the length-two modules A/(A(mu x - lam y) + k yx) over rem_4_2.

The module only depends on the point (lam : mu) of the projective line, so over
GF(p) the script runs through (1 : mu) for every mu in GF(p) and then (0 : 1).
"""

from __future__ import annotations

import argparse

from shortlocal import report
from shortlocal.presets import length_two_module, preset
from shortlocal.resolution import is_koszul_up_to


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--format", choices=("text", "csv"), default="text")
    args = ap.parse_args(argv)
    alg = preset("rem_4_2", args.p).algebra
    points = [(1, mu) for mu in range(args.p)] + [(0, 1)]
    rows = []
    for lam, mu in points:
        rep = is_koszul_up_to(length_two_module(alg, lam, mu), args.n)
        rows.append({"lam": lam, "mu": mu, "koszul_up_to_N": rep.koszul_up_to_N,
                     "first_failure": rep.first_failure,
                     "dims": " ".join(f"{t}/{j}" for t, j in rep.actual)})
    cols = ("lam", "mu", "koszul_up_to_N", "first_failure", "dims")
    print(report.to_csv(rows, cols) if args.format == "csv" else report.to_table(rows, cols), end="")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
