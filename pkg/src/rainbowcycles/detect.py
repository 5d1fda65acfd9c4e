"""Rainbow cycle detection on finite colorings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .coloring import CycleWitness, EdgeColoring


@dataclass(frozen=True)
class SpectrumPrefix:
    """Absent rainbow-cycle lengths of a coloring, restricted to ``[2, bound]``."""

    bound: int
    absent: frozenset

    def __post_init__(self) -> None:
        if self.bound < 2:
            raise ValueError("bound must be at least 2")
        if 2 not in self.absent:
            raise ValueError("2 is always absent")
        if any(not 2 <= x <= self.bound for x in self.absent):
            raise ValueError("absent lengths must lie in [2, bound]")

    @property
    def present(self) -> frozenset:
        return frozenset(range(2, self.bound + 1)) - self.absent


def _check_cycle(c: EdgeColoring, cycle: Sequence[int]) -> tuple[int, ...]:
    vs = tuple(cycle)
    if len(vs) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(vs)) != len(vs):
        raise ValueError(f"repeated vertex in {vs}")
    for x in vs:
        if not 0 <= x < c.vertex_count:
            raise ValueError(f"vertex {x} out of range for K_{c.vertex_count}")
    return vs


def is_rainbow(c: EdgeColoring, cycle: Sequence[int]) -> bool:
    vs = _check_cycle(c, cycle)
    k = len(vs)
    cols = {c.color(vs[t], vs[(t + 1) % k]) for t in range(k)}
    return len(cols) == k


def _dense_matrix(c: EdgeColoring) -> list[list[int]]:
    """Adjacency matrix of color bitmasks (colors renumbered densely)."""
    v = c.vertex_count
    ids: dict[int, int] = {}
    mat = [[0] * v for _ in range(v)]
    for i in range(v):
        for j in range(i):
            b = 1 << ids.setdefault(c.color(i, j), len(ids))
            mat[i][j] = mat[j][i] = b
    return mat


def find_rainbow_cycle(c: EdgeColoring, k: int) -> Optional[CycleWitness]:
    """Return a rainbow ``k``-cycle of ``c`` or ``None``.

    Depth-first over paths from the smallest anchor vertex upward.  The anchor
    is the minimum vertex of the cycle and the second vertex is smaller than
    the last, so every cycle is visited exactly once and the first hit is
    deterministic.
    """
    v = c.vertex_count
    if not 3 <= k <= v:
        raise ValueError(f"k must lie in [3, {v}], got {k}")
    mat = _dense_matrix(c)
    path = [0] * k

    def extend(depth: int, used_v: int, used_c: int) -> bool:
        a, cur = path[0], path[depth - 1]
        row = mat[cur]
        if depth == k:
            if path[1] < cur and not (row[a] & used_c):
                return True
            return False
        for w in range(a + 1, v):
            if used_v >> w & 1:
                continue
            b = row[w]
            if b & used_c:
                continue
            # the closing neighbor must exceed path[1]
            if depth == k - 1 and w < path[1]:
                continue
            path[depth] = w
            if extend(depth + 1, used_v | (1 << w), used_c | b):
                return True
        return False

    for a in range(v - k + 1):
        path[0] = a
        if extend(1, 1 << a, 0):
            return CycleWitness.on(c, path)
    return None


def spectrum_up_to(c: EdgeColoring, bound: int) -> SpectrumPrefix:
    """Lengths in ``[2, bound]`` with no rainbow cycle; lengths above ``v`` are absent."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    v = c.vertex_count
    absent = {2}
    for k in range(3, bound + 1):
        if k > v or find_rainbow_cycle(c, k) is None:
            absent.add(k)
    return SpectrumPrefix(bound, frozenset(absent))
