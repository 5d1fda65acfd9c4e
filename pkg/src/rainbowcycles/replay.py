"""Extract a rainbow n-cycle from a coloring of K_m with a rainbow Hamiltonian cycle.

Two cases are covered, both with n = 2k+1:

* ``hard``:   m = k(2k+1)
* ``harder``: m = 3n - 6 = 6k - 3

Each case has a short list of template n-cycles on Z/m.  Every template is
tried under all translations ``v -> v + t`` and reflections ``v -> t - v``;
the first rainbow one is returned.  For colorings where ``(0, 1, ..., m-1)``
is rainbow some such cycle is always rainbow, so running out of candidates
raises :class:`InternalContradiction`.

Only rainbowness matters, so the cycle colors need not be ``0..m-1``; any
coloring whose cycle ``(0, ..., m-1)`` is rainbow is accepted.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .coloring import CycleWitness, EdgeColoring, canonical_cycle, edge_index, num_edges
from .detect import is_rainbow

KINDS = ("hard", "harder")


class InternalContradiction(RuntimeError):
    """No candidate cycle was rainbow; either a bug or a counterexample."""


@dataclass(frozen=True)
class CycleFamily:
    label: str
    cycles: tuple[tuple[int, ...], ...]


def _up(a: int, b: int) -> list[int]:
    return list(range(a, b + 1))


def _down(a: int, b: int) -> list[int]:
    return list(range(a, b - 1, -1))


def _sizes(kind: str, k: int) -> tuple[int, int]:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    n = 2 * k + 1
    return n, (k * n if kind == "hard" else 3 * n - 6)


def _hard_families(k: int) -> list[CycleFamily]:
    n, m = 2 * k + 1, k * (2 * k + 1)
    rows = tuple(tuple(x % m for x in _up(i * 2 * k, (i + 1) * 2 * k)) for i in range(k + 1))
    spokes = [i * 2 * k for i in range(k + 1)]
    mixed = (tuple(spokes + _down(k, 1)),)
    # the k+1 even multiples of k, then the k odd ones
    star = (tuple((j * k) % m for j in list(range(0, 2 * k + 1, 2)) + list(range(1, 2 * k, 2))),)
    return [CycleFamily("rows", rows), CycleFamily("mixed", mixed), CycleFamily("star", star)]


def _harder_families(k: int) -> list[CycleFamily]:
    n = 2 * k + 1
    m = 3 * n - 6
    d = (n - 3) // 2

    def mod(vs):
        return tuple(v % m for v in vs)

    center = (
        mod(_up(0, n - 1)),
        mod(_down(1, -(n - 2))),
        mod([1, 0] + _up(n - 1, 2 * n - 4)),
    )
    pin = (
        mod(_up(0, d) + _down(d + n - 1, n - 2)),
        mod(_up(0, d + 1) + _down(d + 2 * n - 4, 2 * n - 3) + [n - 2]),
        mod([0] + _up(n - 1, d + n - 2) + _down(d + 2 * n - 3, 2 * n - 3) + [n - 2]),
    )
    final = (
        mod([n - 2] + _up(2 * n - 4, m)),
        mod(_up(0, d) + _up(d + n - 1, 2 * n - 4) + [n - 2]),
    )
    return [CycleFamily("center", center), CycleFamily("pin", pin), CycleFamily("final", final)]


def enumerate_families(kind: str, k: int) -> list[CycleFamily]:
    """Template cycles in the order they are tried; translates are generated on demand."""
    _sizes(kind, k)
    return _hard_families(k) if kind == "hard" else _harder_families(k)


def _images(cycle: tuple[int, ...], m: int) -> Iterator[tuple[int, ...]]:
    for t in range(m):
        yield tuple((v + t) % m for v in cycle)
    for t in range(m):
        yield tuple((t - v) % m for v in cycle)


def _check_input(c: EdgeColoring, kind: str, k: int) -> tuple[int, int]:
    n, m = _sizes(kind, k)
    if c.vertex_count != m:
        raise ValueError(f"{kind} replay with k={k} needs K_{m}, got K_{c.vertex_count}")
    if not is_rainbow(c, range(m)):
        raise ValueError("the cycle (0, 1, ..., m-1) is not rainbow")
    return n, m


def replay_trace(c: EdgeColoring, kind: str, k: int) -> tuple[str, CycleWitness]:
    """Like :func:`replay_hard` / :func:`replay_harder`, also naming the family that fired."""
    n, m = _check_input(c, kind, k)
    colors = c.colors
    for fam in enumerate_families(kind, k):
        for base in fam.cycles:
            for cyc in _images(base, m):
                seen = {colors[edge_index(cyc[i], cyc[(i + 1) % n])] for i in range(n)}
                if len(seen) == n:
                    w = CycleWitness.on(c, canonical_cycle(cyc))
                    assert w.rainbow
                    return fam.label, w
    raise InternalContradiction(f"no rainbow {n}-cycle among the {kind} families for k={k}")


def replay_hard(c: EdgeColoring, k: int) -> CycleWitness:
    """A rainbow (2k+1)-cycle in a coloring of K_{k(2k+1)} whose cycle (0..m-1) is rainbow."""
    return replay_trace(c, "hard", k)[1]


def replay_harder(c: EdgeColoring, k: int) -> CycleWitness:
    """A rainbow (2k+1)-cycle in a coloring of K_{6k-3} whose cycle (0..m-1) is rainbow."""
    return replay_trace(c, "harder", k)[1]


# -- fuzzing -----------------------------------------------------------------------

FUZZ_MODES = ("uniform", "local", "adversarial")


def random_coloring(m: int, rng: random.Random, mode: str = "uniform",
                    palette: Optional[int] = None) -> EdgeColoring:
    """Edge (i, i+1) gets color i; chords are random.

    ``uniform`` draws chords from ``0..palette-1`` (default ``m + 1``, so one
    spare color).  ``local`` copies the color of a cycle edge at or next to
    an endpoint, which makes the late proof steps fire far more often.
    """
    if mode not in FUZZ_MODES or mode == "adversarial":
        raise ValueError(f"mode must be 'uniform' or 'local', got {mode!r}")
    palette = m + 1 if palette is None else palette
    if palette < m:
        raise ValueError("palette must include the m cycle colors")
    colors = [0] * num_edges(m)
    for i in range(m):
        for j in range(i):
            if i - j == 1:
                col = j
            elif (i, j) == (m - 1, 0):
                col = m - 1
            elif mode == "uniform":
                col = rng.randrange(palette)
            else:
                u = rng.choice((i, j))
                col = (u + rng.choice((-1, 0))) % m
            colors[edge_index(i, j)] = col
    return EdgeColoring(m, tuple(colors))


def adversarial_coloring(kind: str, k: int, rng: random.Random, steps: Optional[int] = None) -> EdgeColoring:
    """Hill-climb chords to kill rainbow images of all but the last family.

    Starts from a ``local`` coloring and accepts a chord recoloring when it
    does not increase the number of rainbow images in the earlier families,
    so that replay has to reach deeper into the list.
    """
    n, m = _sizes(kind, k)
    fams = enumerate_families(kind, k)
    images = [[tuple(edge_index(cyc[i], cyc[(i + 1) % n]) for i in range(n)) for cyc in _images(b, m)]
              for f in fams[:-1] for b in f.cycles]
    flat = [img for group in images for img in group]
    through: dict[int, list[int]] = {}
    for t, img in enumerate(flat):
        for e in img:
            through.setdefault(e, []).append(t)
    colors = list(random_coloring(m, rng, "local").colors)
    chords = [edge_index(i, j) for i in range(m) for j in range(i) if i - j != 1 and (i, j) != (m - 1, 0)]

    def rainbow_count(idxs):
        return sum(len({colors[e] for e in flat[t]}) == n for t in idxs)

    for _ in range(steps if steps is not None else 20 * len(chords)):
        e = rng.choice(chords)
        idxs = through.get(e, [])
        before, old = rainbow_count(idxs), colors[e]
        colors[e] = rng.randrange(m)
        if rainbow_count(idxs) > before:
            colors[e] = old
    return EdgeColoring(m, tuple(colors))


@dataclass
class FuzzReport:
    kind: str
    k: int
    seed: int
    trials: int = 0
    successes: int = 0
    fired: Counter = field(default_factory=Counter)
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failure is None and self.successes == self.trials

    def to_dict(self) -> dict:
        return {"kind": self.kind, "k": self.k, "seed": self.seed, "trials": self.trials,
                "successes": self.successes, "fired": dict(self.fired), "failure": self.failure}


def fuzz(kind: str, k: int, trials: int, seed: int, mode: str = "uniform") -> FuzzReport:
    """Replay on ``trials`` random colorings; stops at the first failure."""
    _, m = _sizes(kind, k)
    rng = random.Random(seed)
    rep = FuzzReport(kind, k, seed)
    if mode not in FUZZ_MODES:
        raise ValueError(f"mode must be one of {FUZZ_MODES}")
    for t in range(trials):
        c = adversarial_coloring(kind, k, rng) if mode == "adversarial" else random_coloring(m, rng, mode)
        rep.trials += 1
        try:
            label, w = replay_trace(c, kind, k)
        except InternalContradiction as exc:
            rep.failure = f"trial {t} (seed {seed}): {exc}"
            break
        if not (w.length == 2 * k + 1 and w.rainbow and w.validate(c) and is_rainbow(c, w.vertices)):
            rep.failure = f"trial {t} (seed {seed}): invalid witness {w.vertices}"
            break
        rep.successes += 1
        rep.fired[label] += 1
    return rep
