"""Slow, independent reference implementations used only by the tests.

Nothing here imports the search package; the cycle enumeration and the
backtracking are written from scratch in plain Python.
"""
from __future__ import annotations

import itertools


def _edge_ids(m):
    eidx = {}
    for i in range(m):
        for j in range(i):
            eidx[(i, j)] = len(eidx)

    def ek(u, v):
        return eidx[(u, v)] if u > v else eidx[(v, u)]

    return ek, len(eidx)


def cycles_as_edges(m, k):
    """Every k-cycle of K_m once, as a tuple of edge ids."""
    ek, _ = _edge_ids(m)
    out = []
    for sub in itertools.combinations(range(m), k):
        for perm in itertools.permutations(sub[1:]):
            if perm[0] < perm[-1]:
                vs = (sub[0],) + perm
                out.append(tuple(ek(vs[t], vs[(t + 1) % k]) for t in range(k)))
    return out


def exists_general(n, m):
    """Any coloring of K_m with a rainbow Hamiltonian cycle and no rainbow n-cycle.

    No vertex normalization: every Hamiltonian cycle is a candidate.  Colors
    are enumerated in restricted-growth order (a coloring up to renaming).
    Edges of the cycle (0, 1, ..., m-1) go first and the newest color is tried
    first; this only orders the search, every coloring is still reachable.
    """
    ek, E = _edge_ids(m)
    ring = [ek(i, (i + 1) % m) for i in range(m)]
    order = ring + [e for e in range(E) if e not in ring]
    rank = {e: t for t, e in enumerate(order)}
    ncyc = cycles_as_edges(m, n) if n <= m else []
    hams = cycles_as_edges(m, m)
    by_last = [[] for _ in range(E)]
    for c in ncyc:
        by_last[max(rank[e] for e in c)].append(c)
    col = [-1] * E

    def ham_possible():
        for h in hams:
            seen = set()
            for e in h:
                c = col[e]
                if c >= 0:
                    if c in seen:
                        break
                    seen.add(c)
            else:
                return True
        return False

    def rec(t, ncolors):
        if ncolors + (E - t) < m or not ham_possible():
            return False
        if t == E:
            return True
        e = order[t]
        for c in range(ncolors, -1, -1):
            col[e] = c
            if all(len({col[f] for f in cyc}) < n for cyc in by_last[t]):
                if rec(t + 1, max(ncolors, c + 1)):
                    return True
        col[e] = -1
        return False

    return rec(0, 0)


def exists_fixed_cycle(n, m):
    """Same question with edge (i, i+1 mod m) colored i and chords free.

    Chords may use any cycle color or a new color, new ones opened in order,
    so no palette restriction is assumed.  Feasible for m <= 7.
    """
    ek, E = _edge_ids(m)
    col = [-1] * E
    for i in range(m):
        col[ek(i, (i + 1) % m)] = i
    chords = [e for e in range(E) if col[e] < 0]
    pos = {e: t for t, e in enumerate(chords)}
    # each n-cycle is checked when its last chord gets a color
    by_last = [[] for _ in chords]
    for c in cycles_as_edges(m, n):
        cs = [pos[e] for e in c if e in pos]
        if not cs:
            if len({col[e] for e in c}) == n:
                return False
            continue
        by_last[max(cs)].append(c)

    def rec(t, ncolors):
        if t == len(chords):
            return True
        e = chords[t]
        for c in range(ncolors + 1):
            col[e] = c
            if all(len({col[f] for f in cyc}) < n for cyc in by_last[t]):
                if rec(t + 1, max(ncolors, c + 1)):
                    return True
        col[e] = -1
        return False

    return rec(0, m)


def rainbow_lengths_brute(color_fn, v):
    """Set of k in [3, v] with a rainbow k-cycle, by permutations."""
    found = set()
    for k in range(3, v + 1):
        for sub in itertools.combinations(range(v), k):
            hit = False
            for perm in itertools.permutations(sub[1:]):
                if perm[0] > perm[-1]:
                    continue
                vs = (sub[0],) + perm
                cols = {color_fn(vs[t], vs[(t + 1) % k]) for t in range(k)}
                if len(cols) == k:
                    hit = True
                    break
            if hit:
                found.add(k)
                break
    return found
