"""Write plot-ready CSVs: the spectral radius sweep and the integer pairs (a, small, big)."""

from __future__ import annotations

import argparse
import os

from shortlocal import report
from shortlocal.spectral import rho_sweep, theorem3_points


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--e", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--out", default="figure_data")
    args = ap.parse_args(argv)
    os.makedirs(args.out, exist_ok=True)
    for e in args.e:
        for stem, text in ((f"rho_e{e}.csv", report.sweep_csv(rho_sweep(e))),
                           (f"pairs_e{e}.csv", report.theorem3_csv(theorem3_points(e)))):
            path = os.path.join(args.out, stem)
            with open(path, "w") as fh:
                fh.write(text)
            print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
