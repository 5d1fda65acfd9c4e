"""Table of (n, m) cells and the threshold g(n).

Cell symbols:

* ``o``  a known construction has a rainbow m-cycle and no rainbow n-cycle;
* ``O``  the search found such a coloring;
* ``x``  m is forced absent by composing lengths already known absent;
* ``X``  the search proved no such coloring exists;
* ``""`` no result within budget.
"""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from typing import Mapping, Optional

from ..monoid import close_lengths, lemma_lengths
from .engine import MAX_COLORS, Budget, Verdict, exists_coloring

ABSENT = ("x", "X")


def construction_cell(n: int, m: int) -> bool:
    """True when the even or mod-4 coloring already separates n from m."""
    if n % 2 == 0 and m % 2 == 1:
        return True
    return n % 4 == 2 and m % 4 != 2


def known_absent(n: int, known: Mapping[tuple[int, int], str]) -> set[int]:
    return {n} | {mm for (nn, mm), s in known.items() if nn == n and s in ABSENT}


def implied_absent(m: int, absent: set[int]) -> bool:
    """Is ``m`` in the o-closure of ``absent``?"""
    return m in absent or (m - 2) in close_lengths(absent, m)


def table_cell(
    n: int,
    m: int,
    known: Optional[Mapping[tuple[int, int], str]] = None,
    budget: Optional[Budget] = None,
    *,
    workers: int = 1,
) -> str:
    """Symbol for the question "no rainbow n-cycle, yet a rainbow m-cycle?".

    ``known`` maps earlier ``(n, m')`` cells to their symbols; only the ones
    in ``ABSENT`` matter.
    """
    if not 3 <= n < m:
        raise ValueError(f"need 3 <= n < m, got n={n}, m={m}")
    if construction_cell(n, m):
        return "o"
    if implied_absent(m, known_absent(n, known or {})):
        return "x"
    out = exists_coloring(n, m, budget, workers=workers)
    return {Verdict.SAT: "O", Verdict.UNSAT: "X", Verdict.TIMEOUT: ""}[out.verdict]


def build_table(max_n: int, max_m: int, budget: Optional[Budget] = None, *, workers: int = 1,
                min_n: int = 3, progress=None) -> dict[tuple[int, int], str]:
    """All cells with ``min_n <= n < m <= max_m``, ``n <= max_n``, column by column."""
    if min_n < 3 or max_n < min_n or max_m <= min_n:
        raise ValueError("need 3 <= min_n <= max_n and max_m > min_n")
    cells: dict[tuple[int, int], str] = {}
    for n in range(min_n, max_n + 1):
        for m in range(n + 1, max_m + 1):
            cells[n, m] = table_cell(n, m, cells, budget, workers=workers)
            if progress is not None:
                progress(n, m, cells[n, m])
    return cells


def table_csv(cells: Mapping[tuple[int, int], str], max_n: int, max_m: int, min_n: int = 3) -> str:
    """Header row of m values, one row per n; cells outside ``n < m`` are empty."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    ms = list(range(min_n + 1, max_m + 1))
    w.writerow(["n\\m"] + ms)
    for n in range(min_n, max_n + 1):
        w.writerow([n] + [cells.get((n, m), "") for m in ms])
    return buf.getvalue()


@dataclass
class GValue:
    """``lower <= g(n) <= upper``; exact when the two agree."""

    n: int
    lower: int
    upper: int
    cells: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    def __str__(self) -> str:
        return str(self.lower) if self.exact else f"[{self.lower}, {self.upper}]"


def g_exact(
    n: int,
    budget: Optional[Budget] = None,
    *,
    total_seconds: Optional[float] = None,
    use_lemmas: bool = False,
    workers: int = 1,
    progress=None,
) -> GValue:
    """Least M such that no rainbow n-cycle rules out rainbow m-cycles for all m >= M.

    Scans m = n+1, n+2, ...  Each m is either implied absent by composition or
    decided by search.  Once n-2 consecutive lengths are absent, composing with
    n (which adds n-2) covers everything beyond, so the scan stops.  Lengths
    from 2n^2 on are absent for every odd n >= 5, which caps the scan.
    ``budget`` applies per search; ``total_seconds`` bounds the scan.  Without
    a certified tail the answer is a bracket whose upper end is the smallest
    known bound.
    ``use_lemmas`` seeds the absent set with lengths the odd-n lemmas force.
    """
    if n < 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 5, got {n}")
    t0 = time.perf_counter()
    absent = set(lemma_lengths(n)) if use_lemmas else {n}
    absent.add(n)
    cells: dict[int, str] = {}
    max_sat = n - 1  # m < n always has an example
    max_open = n - 1  # largest m not yet known absent
    run = 0
    m = n + 1
    cap = 2 * n * n
    while run < n - 2 and m < cap:
        if total_seconds is not None and time.perf_counter() - t0 >= total_seconds:
            break
        if implied_absent(m, absent):
            sym = "x"
        elif m > MAX_COLORS:
            sym = ""
        else:
            b = budget
            if total_seconds is not None:
                left = max(total_seconds - (time.perf_counter() - t0), 1e-3)
                b = Budget(budget.max_nodes if budget else None,
                           min(left, budget.max_seconds) if budget and budget.max_seconds else left)
            verdict = exists_coloring(n, m, b, workers=workers).verdict
            sym = {Verdict.SAT: "O", Verdict.UNSAT: "X", Verdict.TIMEOUT: ""}[verdict]
        cells[m] = sym
        if progress is not None:
            progress(n, m, sym)
        if sym in ABSENT:
            absent.add(m)
            run += 1
        else:
            run = 0
            max_open = m
            if sym == "O":
                max_sat = m
        m += 1
    lower = max_sat + 1
    if run >= n - 2:
        return GValue(n, lower, max_open + 1, cells)
    # the closure of what we know absent, capped by the quadratic bound
    c = close_lengths(absent, cap + n).length_conductor
    upper = cap if c is None else min(cap, c)
    return GValue(n, lower, max(upper, max_open + 1), cells)
