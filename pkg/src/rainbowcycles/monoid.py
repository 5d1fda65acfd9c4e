"""Numerical-semigroup arithmetic for absent cycle lengths.

Absent lengths are closed under ``a o b = a + b - 2``.  Shifting by ``-2``
turns ``({2, 3, ...}, o)`` into ``(N, +)``, so everything below works in
"N-coordinates" internally and converts at the boundary.  Functions that take
or return *lengths* say so.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional


class GcdDegenerate(ValueError):
    """The generators share a factor, so no Frobenius number exists."""

    def __init__(self, g: int):
        super().__init__(f"generators have gcd {g}; infinitely many non-members")
        self.gcd = g


def compose(a: int, b: int) -> int:
    if a < 2 or b < 2:
        raise ValueError("lengths must be at least 2")
    return a + b - 2


def corollary_lengths(n: int, bound: int) -> set[int]:
    """Lengths in ``[n, bound]`` congruent to 2 mod ``n - 2``."""
    if n < 3 or bound < n:
        raise ValueError("need n >= 3 and bound >= n")
    step = n - 2
    return {x for x in range(n, bound + 1) if (x - 2) % step == 0}


def additive_closure(generators: Iterable[int], bound: int) -> list[bool]:
    """Membership of ``[0, bound]`` in the additive monoid generated by ``generators``."""
    gens = sorted({g for g in generators if 0 < g <= bound})
    member = [False] * (bound + 1)
    member[0] = True
    for x in range(1, bound + 1):
        for g in gens:
            if g > x:
                break
            if member[x - g]:
                member[x] = True
                break
    return member


@dataclass(frozen=True)
class MonoidTable:
    """Truncated membership table of a submonoid of N (N-coordinates)."""

    bound: int
    member: tuple
    generators: frozenset

    @classmethod
    def generated(cls, generators: Iterable[int], bound: int) -> "MonoidTable":
        gens = frozenset(generators)
        if any(g < 0 for g in gens):
            raise ValueError("generators must be nonnegative")
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        return cls(bound, tuple(additive_closure(gens, bound)), gens)

    def __contains__(self, x: int) -> bool:
        if not 0 <= x <= self.bound:
            raise ValueError(f"{x} outside the table [0, {self.bound}]")
        return self.member[x]

    def members(self) -> set[int]:
        return {x for x, ok in enumerate(self.member) if ok}

    def lengths(self) -> set[int]:
        """Members as cycle lengths (shift by +2)."""
        return {x + 2 for x in self.members()}

    @property
    def conductor(self) -> Optional[int]:
        """Least ``c`` with ``[c, inf)`` inside the monoid, or None if undetermined.

        Reported only when the top window of width max(generator) is solid,
        which certifies that the run continues past ``bound``.
        """
        pos = [g for g in self.generators if g > 0]
        if not pos:
            return None
        w = max(pos)
        if w > self.bound + 1 or not all(self.member[self.bound - w + 1:]):
            return None
        c = self.bound
        while c > 0 and self.member[c - 1]:
            c -= 1
        return c

    @property
    def length_conductor(self) -> Optional[int]:
        c = self.conductor
        return None if c is None else c + 2


def close_lengths(generators: Iterable[int], bound: int) -> MonoidTable:
    """o-closure of the given lengths within ``[2, bound]``, in N-coordinates."""
    gens = set(generators)
    if any(g < 2 for g in gens):
        raise ValueError("lengths must be at least 2")
    if bound < 2:
        raise ValueError("bound must be at least 2")
    return MonoidTable.generated({g - 2 for g in gens}, bound - 2)


def sylvester_threshold(a: int, b: int) -> int:
    """Every integer ``>= (a-1)(b-1)`` is a nonnegative combination of coprime ``a, b``."""
    if a < 2 or b < 2:
        raise ValueError("a and b must be at least 2")
    if gcd(a, b) != 1:
        raise ValueError(f"{a} and {b} are not coprime")
    return (a - 1) * (b - 1)


def three_gen_threshold(a: int, b: int, c: int) -> int:
    """Membership threshold for ``<a, b, c>`` with a odd, b = -2 and c = -1 mod a.

    The largest minimal residue representative is ``b*(a-3)/2 + c``; everything
    above it minus ``a`` is a member.
    """
    if a < 3 or a % 2 == 0:
        raise ValueError("a must be odd and at least 3")
    if not a < b < c:
        raise ValueError("need a < b < c")
    if b % a != a - 2:
        raise ValueError("b must be -2 mod a")
    if c % a != a - 1:
        raise ValueError("c must be -1 mod a")
    return (a - 3) * b // 2 - a + c + 1


def frobenius_brute(generators: Iterable[int], bound: int) -> int:
    """Largest non-member of ``<generators>`` by exhaustive table.

    Returns -1 when every nonnegative integer is a member.  Raises
    :class:`GcdDegenerate` when the generators share a factor, and
    ``ValueError`` when ``bound`` is too small to certify the answer.
    """
    gens = sorted(set(generators))
    if not gens:
        raise ValueError("need at least one generator")
    if gens[0] < 1:
        raise ValueError("generators must be positive")
    if bound < gens[-1]:
        raise ValueError("bound must be at least the largest generator")
    g = reduce(gcd, gens)
    if g != 1:
        raise GcdDegenerate(g)
    member = additive_closure(gens, bound)
    # a solid run of gens[0] members at the top certifies everything beyond bound
    if not all(member[bound - gens[0] + 1:]):
        raise ValueError(f"bound {bound} too small to certify the Frobenius number")
    x = bound
    while x >= 0 and member[x]:
        x -= 1
    return x


@dataclass(frozen=True)
class TheoremThresholds:
    """Length thresholds past which no rainbow cycle survives, for odd ``n``.

    ``weaker`` is the cubic bound from the lengths ``n`` and ``C(n, 2)``;
    ``main`` the quadratic ``2n^2``; ``adhoc`` the three-generator bound
    ``2n^2 - 13n + 23``; ``exact_from_lemmas`` the true conductor of the
    o-monoid generated by ``n``, ``C(n, 2)`` and ``3n - 6``.
    """

    n: int
    weaker: int
    main: int
    adhoc: int
    exact_from_lemmas: int


def _checked_odd(n: int) -> int:
    if n < 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 5, got {n}")
    return (n - 1) // 2


def weaker_threshold(n: int) -> int:
    k = _checked_odd(n)
    return 4 * k**3 - 2 * k**2 - 8 * k + 8


def adhoc_threshold(n: int) -> int:
    """``three_gen_threshold`` on ``n-2``, ``3n-8``, ``C(n,2)-2``, as a length."""
    _checked_odd(n)
    return three_gen_threshold(n - 2, 3 * n - 8, n * (n - 1) // 2 - 2) + 2


def lemma_lengths(n: int) -> tuple[int, int, int]:
    """Lengths known absent once ``n`` is: ``n``, ``C(n, 2)``, ``3n - 6``."""
    _checked_odd(n)
    return n, n * (n - 1) // 2, 3 * n - 6


def theorem_thresholds(n: int) -> TheoremThresholds:
    k = _checked_odd(n)
    main = 2 * n * n
    gens = lemma_lengths(n)
    table = close_lengths(gens, main + max(gens))
    exact = table.length_conductor
    assert exact is not None and exact <= main
    return TheoremThresholds(n, weaker_threshold(n), main, adhoc_threshold(n), exact)


def cubic_bound_dominates(n: int) -> bool:
    """``n^3/2 >= n^3/2 - 2n^2 - 3n/2 + 11``, doubled to stay in integers."""
    return n**3 >= n**3 - 4 * n * n - 3 * n + 22


class SpectrumTag(enum.Enum):
    MOD1 = "Mod1"
    MOD2 = "Mod2"
    MOD4 = "Mod4"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SpectrumClass:
    tag: SpectrumTag
    onset: Optional[int]


_PATTERNS = (
    (SpectrumTag.MOD1, lambda x: True),
    (SpectrumTag.MOD2, lambda x: x % 2 == 0),
    (SpectrumTag.MOD4, lambda x: x % 4 == 2),
)

MIN_SUFFIX = 8


def classify_spectrum(prefix) -> SpectrumClass:
    """Coarsest periodic pattern that the absent set eventually contains.

    ``prefix`` is a :class:`~rainbowcycles.detect.SpectrumPrefix`.  A pattern
    fits when every length of its residue class from the onset up to the bound
    is absent and the suffix spans at least 8 lengths.
    """
    bound = prefix.bound
    if bound < 16:
        raise ValueError("bound must be at least 16 to classify")
    absent = prefix.absent
    for tag, matches in _PATTERNS:
        onset = 2
        for x in range(bound, 1, -1):
            if matches(x) and x not in absent:
                onset = x + 1
                break
        if bound - onset + 1 >= MIN_SUFFIX:
            return SpectrumClass(tag, onset)
    return SpectrumClass(SpectrumTag.UNKNOWN, None)
