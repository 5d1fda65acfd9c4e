"""Compute g(n) for odd n, or a bracket when the budget runs out.

    python3 scripts/g_values.py 5 7 9 --total-seconds 600
"""
import argparse
import json
import time

from rainbowcycles.monoid import theorem_thresholds
from rainbowcycles.search.table import g_exact


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("n", type=int, nargs="*", default=[5, 7, 9])
    p.add_argument("--total-seconds", type=float, default=600.0, help="per n")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    a = p.parse_args()

    for n in a.n:
        t0 = time.perf_counter()
        g = g_exact(n, total_seconds=a.total_seconds, workers=a.workers)
        dt = time.perf_counter() - t0
        thr = theorem_thresholds(n)
        scan = " ".join(f"{m}:{s or '-'}" for m, s in sorted(g.cells.items()))
        if a.json:
            print(json.dumps({"n": n, "lower": g.lower, "upper": g.upper, "exact": g.exact,
                              "seconds": round(dt, 2), "cells": {str(m): s for m, s in g.cells.items()},
                              "proved_upper": thr.exact_from_lemmas}))
        else:
            print(f"g({n}) = {g}  ({dt:.1f} s; proved upper bound {thr.exact_from_lemmas})")
            print(f"  scan {scan}")


if __name__ == "__main__":
    main()
