"""The constraint set "no rainbow n-cycle" on K_m."""
from __future__ import annotations

from math import comb, factorial
from typing import Optional

import numpy as np

from ..coloring import num_edges
from . import kernel

EAGER_LIMIT = 10**7


def cycle_count(m: int, n: int) -> int:
    """Number of n-cycles in K_m, up to rotation and reflection."""
    if n > m:
        return 0
    return comb(m, n) * factorial(n - 1) // 2


class ConstraintIndex:
    """Every n-cycle of K_m as a row of edge ids, plus edge -> cycle lists.

    Above ``eager_limit`` cycles nothing is materialized (``lazy``); the kernel
    then finds cycles through an edge by walking paths instead.
    """

    def __init__(self, n: int, m: int, *, lazy: Optional[bool] = None, eager_limit: int = EAGER_LIMIT):
        if n < 3 or m < n:
            raise ValueError(f"need 3 <= n <= m, got n={n}, m={m}")
        self.n, self.m = n, m
        self.count = cycle_count(m, n)
        self.lazy = self.count > eager_limit if lazy is None else lazy
        E = num_edges(m)
        if self.lazy:
            self.cycles = np.zeros((0, n), np.int32)
            self.ptr = np.zeros(E + 1, np.int64)
            self.idx = np.zeros(0, np.int32)
        else:
            self.cycles = kernel.enumerate_cycles(m, n)
            self.ptr, self.idx = kernel.build_reverse_index(self.cycles, E)

    @property
    def num_edges(self) -> int:
        return num_edges(self.m)

    def cycles_through(self, e: int) -> np.ndarray:
        """Rows of ``cycles`` that use edge ``e`` (eager indices only)."""
        if self.lazy:
            raise ValueError("lazy index has no materialized cycles")
        return self.cycles[self.idx[self.ptr[e]:self.ptr[e + 1]]]

    def __repr__(self) -> str:
        mode = "lazy" if self.lazy else "eager"
        return f"ConstraintIndex(n={self.n}, m={self.m}, cycles={self.count}, {mode})"
