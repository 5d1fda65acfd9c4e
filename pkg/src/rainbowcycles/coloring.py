"""Edge-colorings of complete graphs.

Vertices are dense integers ``0..v-1``.  An edge ``{i, j}`` with ``i > j`` is
stored at the lower-triangular index ``i*(i-1)//2 + j``; this layout is also
the on-disk JSON layout, so ``colors`` round-trips bit-exactly.

The two infinite constructions (``even_coloring`` and ``mod4_coloring``) are
defined on positive integer vertices.  The generators truncate them to
``1..v`` and store vertex ``x`` at index ``x - 1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


def edge_index(i: int, j: int) -> int:
    """Lower-triangular index of the unordered pair ``{i, j}``."""
    if i == j:
        raise ValueError(f"no edge joins vertex {i} to itself")
    if i < j:
        i, j = j, i
    return i * (i - 1) // 2 + j


def edge_endpoints(e: int) -> tuple[int, int]:
    """Inverse of :func:`edge_index`; returns ``(i, j)`` with ``i > j``."""
    i = 1
    while (i + 1) * i // 2 <= e:
        i += 1
    return i, e - i * (i - 1) // 2


def num_edges(v: int) -> int:
    return v * (v - 1) // 2


@dataclass(frozen=True)
class EdgeColoring:
    """A total color assignment on the edges of ``K_v``.

    Colors are nonnegative ints compared only for equality.
    """

    vertex_count: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be positive")
        if len(self.colors) != num_edges(self.vertex_count):
            raise ValueError(
                f"expected {num_edges(self.vertex_count)} colors for K_{self.vertex_count}, "
                f"got {len(self.colors)}"
            )
        for c in self.colors:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"colors must be nonnegative integers, got {c!r}")

    @classmethod
    def from_function(cls, v: int, fn) -> "EdgeColoring":
        """Build from ``fn(i, j)`` evaluated once per pair with ``i > j``."""
        return cls(v, tuple(fn(i, j) for i in range(v) for j in range(i)))

    def color(self, i: int, j: int) -> int:
        v = self.vertex_count
        if not (0 <= i < v and 0 <= j < v):
            raise ValueError(f"vertex out of range for K_{v}: ({i}, {j})")
        return self.colors[edge_index(i, j)]

    def induced(self, vertices: Sequence[int]) -> "EdgeColoring":
        return induced_subcoloring(self, vertices)

    def to_json(self) -> str:
        return json.dumps({"vertices": self.vertex_count, "colors": list(self.colors)})

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        return coloring_from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {"vertices": self.vertex_count, "colors": list(self.colors)}


def coloring_from_dict(data: dict) -> EdgeColoring:
    """Parse the ``{"vertices": v, "colors": [...]}`` interchange record."""
    if not isinstance(data, dict) or "vertices" not in data or "colors" not in data:
        raise ValueError("coloring JSON must be an object with 'vertices' and 'colors'")
    v, colors = data["vertices"], data["colors"]
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise ValueError(f"'vertices' must be a positive integer, got {v!r}")
    if not isinstance(colors, list):
        raise ValueError("'colors' must be an array")
    return EdgeColoring(v, tuple(colors))


@dataclass(frozen=True)
class CycleWitness:
    """A cycle ``vertices[0] -> ... -> vertices[k-1] -> vertices[0]`` and its edge colors."""

    vertices: tuple[int, ...]
    edge_colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in cycle {self.vertices}")
        if len(self.edge_colors) != len(self.vertices):
            raise ValueError("need one color per cycle edge")

    @classmethod
    def on(cls, c: EdgeColoring, vertices: Iterable[int]) -> "CycleWitness":
        vs = tuple(vertices)
        k = len(vs)
        return cls(vs, tuple(c.color(vs[t], vs[(t + 1) % k]) for t in range(k)))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def rainbow(self) -> bool:
        return len(set(self.edge_colors)) == len(self.edge_colors)

    def validate(self, c: EdgeColoring) -> bool:
        """True iff the stored colors match ``c`` along the cycle."""
        return CycleWitness.on(c, self.vertices).edge_colors == self.edge_colors

    def to_dict(self) -> dict:
        return {"cycle": list(self.vertices), "colors": list(self.edge_colors)}


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the minimum vertex is first and its smaller neighbor second."""
    vs = list(vertices)
    k = len(vs)
    t = vs.index(min(vs))
    vs = vs[t:] + vs[:t]
    if vs[1] > vs[k - 1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


# -- the two infinite constructions, 1-based ---------------------------------------


def even_color(x: int, y: int) -> int:
    """Color of edge ``{x, y}`` (positive integers) with no even rainbow cycles."""
    if x == y or x < 1 or y < 1:
        raise ValueError(f"need distinct positive vertices, got ({x}, {y})")
    return 0 if (y - x) % 2 == 0 else min(x, y)


def mod4_color(x: int, y: int) -> int:
    """Color of edge ``{x, y}`` with no rainbow cycles of length 2 mod 4."""
    if x == y or x < 1 or y < 1:
        raise ValueError(f"need distinct positive vertices, got ({x}, {y})")
    d = (y - x) % 4
    if d % 2 == 0:
        return 0
    return x if d == 1 else y


def even_coloring(v: int) -> EdgeColoring:
    """Truncation of :func:`even_color` to vertices ``1..v`` (index ``x-1``)."""
    if v < 2:
        raise ValueError("v must be at least 2")
    return EdgeColoring.from_function(v, lambda i, j: even_color(i + 1, j + 1))


def mod4_coloring(v: int) -> EdgeColoring:
    """Truncation of :func:`mod4_color` to vertices ``1..v`` (index ``x-1``)."""
    if v < 2:
        raise ValueError("v must be at least 2")

    def col(i: int, j: int) -> int:
        a = mod4_color(i + 1, j + 1)
        # the formula is symmetric by construction; keep it honest
        assert a == mod4_color(j + 1, i + 1)
        return a

    return EdgeColoring.from_function(v, col)


def induced_subcoloring(c: EdgeColoring, vertices: Sequence[int]) -> EdgeColoring:
    """Restrict ``c`` to ``vertices``, relabelled ``0..k-1`` in the given order."""
    vs = list(vertices)
    if len(vs) < 2:
        raise ValueError("need at least 2 vertices")
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate vertex in {vs}")
    for x in vs:
        if not 0 <= x < c.vertex_count:
            raise ValueError(f"vertex {x} out of range for K_{c.vertex_count}")
    return EdgeColoring.from_function(len(vs), lambda i, j: c.color(vs[i], vs[j]))


# -- search state ------------------------------------------------------------------


PALETTES = ("hamiltonian", "fresh", "full")


@dataclass
class PartialColoring:
    """Mutable search state on ``K_m``.

    ``assignment[e]`` is a color or ``None``; ``domains[e]`` is a bitmask of
    candidate colors (bit ``c`` set means color ``c`` allowed).  An assigned
    edge has the singleton domain of its color.

    ``palette`` decides which colors a chord may take:

    * ``"hamiltonian"``: only the ``m`` cycle colors ``0..m-1``;
    * ``"fresh"``: every color up to ``C(m, 2)``, but a branch may only open
      the next unused fresh color (colors ``>= m``);
    * ``"full"``: every color up to ``C(m, 2)``, no ordering.

    ``fresh_high_water`` counts the fresh colors in use.
    """

    vertex_count: int
    assignment: list
    domains: list
    fresh_high_water: int = 0
    palette: str = "hamiltonian"

    @property
    def m(self) -> int:
        return self.vertex_count

    @property
    def palette_size(self) -> int:
        m = self.vertex_count
        return m if self.palette == "hamiltonian" else num_edges(m)

    def color(self, i: int, j: int):
        return self.assignment[edge_index(i, j)]

    def assign(self, e: int, color: int) -> None:
        self.assignment[e] = color
        self.domains[e] = 1 << color
        if color >= self.vertex_count:
            self.fresh_high_water = max(self.fresh_high_water, color - self.vertex_count + 1)

    def unassigned(self) -> list[int]:
        return [e for e, a in enumerate(self.assignment) if a is None]

    def domain_colors(self, e: int) -> list[int]:
        d, out, c = self.domains[e], [], 0
        while d:
            if d & 1:
                out.append(c)
            d >>= 1
            c += 1
        return out

    def copy(self) -> "PartialColoring":
        return PartialColoring(
            self.vertex_count, list(self.assignment), list(self.domains),
            self.fresh_high_water, self.palette,
        )

    def is_total(self) -> bool:
        return all(a is not None for a in self.assignment)

    def to_coloring(self) -> EdgeColoring:
        if not self.is_total():
            raise ValueError("partial coloring still has unassigned edges")
        return EdgeColoring(self.vertex_count, tuple(self.assignment))


def canonical_partial(m: int, palette: str = "hamiltonian") -> PartialColoring:
    """``K_m`` with edge ``(i, i+1 mod m)`` colored ``i`` and every chord open."""
    if m < 3:
        raise ValueError("m must be at least 3")
    if palette not in PALETTES:
        raise ValueError(f"unknown palette {palette!r}")
    E = num_edges(m)
    state = PartialColoring(m, [None] * E, [0] * E, 0, palette)
    full = (1 << state.palette_size) - 1
    state.domains = [full] * E
    for i in range(m):
        state.assign(edge_index(i, (i + 1) % m), i)
    return state
