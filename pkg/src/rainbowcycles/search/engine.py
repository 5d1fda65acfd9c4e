"""Exhaustive search: can K_m carry a rainbow Hamiltonian cycle but no rainbow n-cycle?

The Hamiltonian cycle is fixed to ``(0, 1, ..., m-1)`` with edge ``(i, i+1)``
colored ``i``; any solution can be renamed into this form.  Only chords are
searched.  By default chords draw from the ``m`` cycle colors alone: a color
used only on chords can be merged into any cycle color without creating a
rainbow cycle, so this palette loses no solutions.  The ``fresh`` and
``full`` palettes exist to check that claim on small instances.
"""
from __future__ import annotations

import enum
import logging
import multiprocessing as mp
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..coloring import EdgeColoring, PartialColoring, canonical_partial, edge_index, num_edges
from ..detect import find_rainbow_cycle, is_rainbow
from . import kernel
from .index import ConstraintIndex

log = logging.getLogger(__name__)

MAX_COLORS = 62


class Verdict(str, enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    TIMEOUT = "Timeout"


@dataclass(frozen=True)
class Budget:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    def __post_init__(self) -> None:
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    propagations: int = 0
    millis: float = 0.0


@dataclass
class SearchOutcome:
    n: int
    m: int
    verdict: Verdict
    witness: Optional[EdgeColoring] = None
    stats: SearchStats = field(default_factory=SearchStats)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "verdict": self.verdict.value,
            "nodes": self.stats.nodes,
            "millis": round(self.stats.millis, 3),
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


class KernelSearch:
    """A resumable search over one :class:`PartialColoring`."""

    def __init__(self, index: ConstraintIndex, state: PartialColoring, *, tiebreak: bool = True):
        m, E = index.m, index.num_edges
        if state.vertex_count != m:
            raise ValueError("state and index disagree on m")
        if state.palette_size > MAX_COLORS:
            raise ValueError(f"palette of {state.palette_size} colors exceeds {MAX_COLORS}")
        self.index = index
        self.palette = state.palette
        self.reg = np.zeros(kernel.NREG + 1, np.int64)
        reg = self.reg
        reg[kernel.M], reg[kernel.N] = m, index.n
        reg[kernel.LAZY] = int(index.lazy)
        reg[kernel.PALETTE_FRESH] = int(state.palette == "fresh")
        reg[kernel.TIEBREAK] = int(tiebreak)
        reg[kernel.FRESH] = state.fresh_high_water
        reg[kernel.PC] = kernel.PC_INIT
        self.color = np.array([-1 if a is None else a for a in state.assignment], np.int64)
        self.dom = np.array(state.domains, np.int64)
        cap = E * (MAX_COLORS + 4) + 16
        self.trail_e = np.zeros(cap, np.int32)
        self.trail_old = np.zeros(cap, np.int64)
        self.trail_kind = np.zeros(cap, np.int8)
        self.st_e = np.zeros(E + 1, np.int32)
        self.st_vals = np.zeros(E + 1, np.int64)
        self.st_mark = np.zeros(E + 1, np.int64)
        self.queue = np.zeros(E + 1, np.int32)
        self.scratch_v = np.zeros(m, np.bool_)
        self.scratch_i = np.zeros((5, index.n + 1), np.int64)

    def _args(self):
        ix = self.index
        return (self.reg, ix.cycles, ix.ptr, ix.idx, self.color, self.dom, self.trail_e, self.trail_old,
                self.trail_kind)

    def advance(self, node_limit: int) -> int:
        return kernel.run(*self._args(), self.st_e, self.st_vals, self.st_mark, self.queue,
                          self.scratch_v, self.scratch_i, node_limit)

    def propagate(self) -> bool:
        return bool(kernel.propagate_all(*self._args(), self.queue, self.scratch_v, self.scratch_i))

    def pick(self) -> int:
        return int(kernel.pick_edge(*self._args(), self.queue, self.scratch_v, self.scratch_i))

    @property
    def nodes(self) -> int:
        return int(self.reg[kernel.NODES])

    @property
    def propagations(self) -> int:
        return int(self.reg[kernel.PROPS])

    def write_back(self, state: PartialColoring) -> None:
        state.assignment = [None if c < 0 else int(c) for c in self.color]
        state.domains = [int(d) for d in self.dom]
        state.fresh_high_water = int(self.reg[kernel.FRESH])

    def coloring(self) -> EdgeColoring:
        return EdgeColoring(self.index.m, tuple(int(c) for c in self.color))

    def solve(self, budget: Optional[Budget] = None, stop=None) -> tuple[Verdict, SearchStats]:
        """Run to completion or until the budget (or ``stop()``) says otherwise."""
        budget = budget or Budget()
        t0 = time.perf_counter()
        chunk = 64
        while True:
            limit = self.nodes + chunk
            if budget.max_nodes is not None:
                limit = min(limit, budget.max_nodes)
            c0 = time.perf_counter()
            status = self.advance(limit)
            elapsed = time.perf_counter() - t0
            stats = SearchStats(self.nodes, self.propagations, elapsed * 1000.0)
            if status == kernel.SAT:
                return Verdict.SAT, stats
            if status == kernel.UNSAT:
                return Verdict.UNSAT, stats
            if budget.max_nodes is not None and self.nodes >= budget.max_nodes:
                return Verdict.TIMEOUT, stats
            if budget.max_seconds is not None and elapsed >= budget.max_seconds:
                return Verdict.TIMEOUT, stats
            if stop is not None and stop():
                return Verdict.TIMEOUT, stats
            if time.perf_counter() - c0 < 0.05:
                chunk = min(chunk * 2, 1 << 20)


def propagate(state: PartialColoring, index: ConstraintIndex) -> bool:
    """Propagate "no rainbow n-cycle" to a fixpoint; False on conflict.

    A cycle whose edges are all assigned with distinct colors is a conflict.
    A cycle with one open edge and distinct assigned colors restricts the
    open edge to those colors.  Singleton domains count as assignments.
    On conflict ``state`` is left unchanged.
    """
    ks = KernelSearch(index, state)
    if not ks.propagate():
        return False
    ks.write_back(state)
    return True


def pick_edge(state: PartialColoring, index: Optional[ConstraintIndex] = None) -> int:
    """The open edge with the smallest domain.

    Ties go to the edge lying on more live n-cycles that have exactly one
    other open edge (only when ``index`` is given), then to the lowest id.
    """
    if index is None:
        open_edges = state.unassigned()
        if not open_edges:
            raise ValueError("no unassigned edge")
        allowed = _allowed_mask(state)
        return min(open_edges, key=lambda e: (bin(state.domains[e] & allowed).count("1"), e))
    ks = KernelSearch(index, state)
    e = ks.pick()
    if e < 0:
        raise ValueError("no unassigned edge")
    return e


def _allowed_mask(state: PartialColoring) -> int:
    if state.palette == "fresh":
        return (1 << (state.vertex_count + state.fresh_high_water + 1)) - 1
    return -1


def verify_witness(c: EdgeColoring, n: int) -> bool:
    """Independent re-check: rainbow Hamiltonian ``(0..m-1)`` and no rainbow n-cycle."""
    m = c.vertex_count
    if not is_rainbow(c, range(m)):
        return False
    return n > m or find_rainbow_cycle(c, n) is None


def _degenerate(n: int, m: int) -> Optional[SearchOutcome]:
    if m < n:
        # no n-cycles exist; one spare color on every chord
        w = EdgeColoring.from_function(
            m, lambda i, j: min(i, j) if i - j == 1 else (m - 1 if (i, j) == (m - 1, 0) else m))
        assert verify_witness(w, n)
        return SearchOutcome(n, m, Verdict.SAT, w)
    if m == n:
        return SearchOutcome(n, m, Verdict.UNSAT)
    return None


# workers inherit the index through fork instead of pickling it
_WORKER_INDEX: Optional[ConstraintIndex] = None
_WORKER_STOP = None


def _worker(state: PartialColoring, budget: Optional[Budget], tiebreak: bool):
    ks = KernelSearch(_WORKER_INDEX, state, tiebreak=tiebreak)
    verdict, stats = ks.solve(budget, stop=lambda: _WORKER_STOP.is_set())
    if verdict is Verdict.SAT:
        _WORKER_STOP.set()
        return verdict, stats, ks.coloring()
    return verdict, stats, None


def _split(index: ConstraintIndex, root: PartialColoring, tiebreak: bool) -> list[PartialColoring]:
    """Root propagation, then one subproblem per value of the first branching edge."""
    state = root.copy()
    ks = KernelSearch(index, state, tiebreak=tiebreak)
    if not ks.propagate():
        return []
    ks.write_back(state)
    if state.is_total():
        return [state]
    e = ks.pick()
    subs = []
    for v in state.domain_colors(e):
        if state.palette == "fresh" and v > state.vertex_count + state.fresh_high_water:
            continue
        sub = state.copy()
        sub.assign(e, v)
        subs.append(sub)
    return subs


def exists_coloring(
    n: int,
    m: int,
    budget: Optional[Budget] = None,
    *,
    palette: str = "hamiltonian",
    workers: int = 1,
    tiebreak: bool = True,
    index: Optional[ConstraintIndex] = None,
    lazy: Optional[bool] = None,
) -> SearchOutcome:
    """Decide whether K_m has a coloring with a rainbow m-cycle and no rainbow n-cycle.

    With ``workers > 1`` the first branching edge's values are farmed out to
    processes.  The verdict does not depend on the worker count; statistics
    and the witness can.
    """
    if n < 3 or m < 3:
        raise ValueError("n and m must be at least 3")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    t0 = time.perf_counter()
    short = _degenerate(n, m)
    if short is not None:
        short.stats.millis = (time.perf_counter() - t0) * 1000.0
        return short
    if index is None:
        index = ConstraintIndex(n, m, lazy=lazy)
    elif (index.n, index.m) != (n, m):
        raise ValueError("index built for a different (n, m)")
    root = canonical_partial(m, palette)

    if workers == 1:
        ks = KernelSearch(index, root, tiebreak=tiebreak)
        verdict, stats = ks.solve(budget)
        witness = ks.coloring() if verdict is Verdict.SAT else None
    else:
        verdict, stats, witness = _parallel(index, root, budget, workers, tiebreak)
    stats.millis = (time.perf_counter() - t0) * 1000.0
    if witness is not None and not verify_witness(witness, n):
        raise RuntimeError(f"search produced an invalid witness for n={n}, m={m}")
    log.info("n=%d m=%d %s nodes=%d %.0fms", n, m, verdict.value, stats.nodes, stats.millis)
    return SearchOutcome(n, m, verdict, witness, stats)


def _parallel(index, root, budget, workers, tiebreak):
    global _WORKER_INDEX, _WORKER_STOP
    subs = _split(index, root, tiebreak)
    if not subs:
        return Verdict.UNSAT, SearchStats(), None
    ctx = mp.get_context("fork")
    _WORKER_INDEX, _WORKER_STOP = index, ctx.Event()
    total = SearchStats()
    witness = None
    timed_out = False
    try:
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            pending = {pool.submit(_worker, s, budget, tiebreak) for s in subs}
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    if fut.cancelled():
                        continue
                    verdict, stats, w = fut.result()
                    total.nodes += stats.nodes
                    total.propagations += stats.propagations
                    if verdict is Verdict.SAT and witness is None:
                        witness = w
                        for p in pending:
                            p.cancel()
                    elif verdict is Verdict.TIMEOUT:
                        timed_out = True
    finally:
        _WORKER_INDEX, _WORKER_STOP = None, None
    if witness is not None:
        return Verdict.SAT, total, witness
    return (Verdict.TIMEOUT if timed_out else Verdict.UNSAT), total, None
