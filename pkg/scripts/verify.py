"""Run the acceptance criteria and print one line per criterion."""

from __future__ import annotations

import argparse

from shortlocal.acceptance import run_all


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", nargs="*", help="criterion keys, e.g. 1 4 G")
    args = ap.parse_args(argv)
    results = run_all(args.only)
    for res in results:
        print(res.line() + f"  ({res.seconds:.2f}s)")
    failed = [r.key for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} passed" + (f"; failing: {failed}" if failed else ""))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
