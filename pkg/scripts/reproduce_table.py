"""Rebuild the (n, m) table as CSV.

    python3 scripts/reproduce_table.py --max-n 9 --max-m 21 --max-seconds 120
"""
import argparse
import sys
import time

from rainbowcycles.search import Budget
from rainbowcycles.search.table import build_table, table_csv


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--max-m", type=int, default=14)
    p.add_argument("--max-seconds", type=float, default=60.0, help="per cell")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="-")
    a = p.parse_args()

    t0 = time.perf_counter()

    def progress(n, m, sym):
        print(f"[{time.perf_counter() - t0:7.1f} s] n={n} m={m} {sym or '-'}", file=sys.stderr, flush=True)

    cells = build_table(a.max_n, a.max_m, Budget(max_seconds=a.max_seconds),
                        workers=a.workers, progress=progress)
    text = table_csv(cells, a.max_n, a.max_m)
    if a.out == "-":
        sys.stdout.write(text)
    else:
        with open(a.out, "w") as fh:
            fh.write(text)
    blanks = sum(1 for s in cells.values() if s == "")
    print(f"{len(cells)} cells, {blanks} undecided, {time.perf_counter() - t0:.1f} s", file=sys.stderr)


if __name__ == "__main__":
    main()
