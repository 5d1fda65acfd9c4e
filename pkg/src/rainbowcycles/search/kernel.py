"""Compiled backtracking kernel for the rainbow-cycle existence search.

All state lives in flat numpy arrays so a search can be paused after a fixed
number of nodes and resumed; the Python driver uses that to enforce wall-clock
budgets.  Colors are bits of an int64 mask, so at most 62 colors are supported.

Constraint: no n-cycle is rainbow.  Two ways to find the n-cycles through an
edge are supported:

* eager: a precomputed table ``cyc[C, n]`` of edge ids plus a CSR reverse
  index ``ptr``/``idx`` (edge -> cycles);
* lazy: a depth-first walk over paths closing the cycle, pruned as soon as a
  color repeats or too many edges are open.
"""
from __future__ import annotations

import numba as nb
import numpy as np

# register slots
TP, DEPTH, NODES, PROPS, PC, FRESH, M, N, LAZY, PALETTE_FRESH, TIEBREAK, QT, NREG = range(13)

PC_INIT, PC_PROP, PC_PICK, PC_NEXT = 0, 1, 2, 3

UNSAT, SAT, PAUSED = 0, 1, 3

KIND_DOM, KIND_COLOR, KIND_FRESH = 0, 1, 2


@nb.njit(cache=True, inline="always")
def eid(u, v):
    if u < v:
        u, v = v, u
    return u * (u - 1) // 2 + v


@nb.njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@nb.njit(cache=True)
def lowest_bit(x):
    v = 0
    while (x >> v) & 1 == 0:
        v += 1
    return v


@nb.njit(cache=True)
def count_cycles(m, n):
    # C(m, n) * (n-1)! / 2
    c = 1
    for i in range(n):
        c = c * (m - i) // (i + 1)
    f = 1
    for i in range(2, n):
        f *= i
    return c * f // 2


@nb.njit(cache=True)
def enumerate_cycles(m, n):
    """Every n-cycle of K_m once, as rows of edge ids.

    Anchor = smallest vertex, second vertex < last vertex.
    """
    count = count_cycles(m, n)
    out = np.empty((count, n), np.int32)
    path = np.empty(n, np.int64)
    nxt = np.empty(n + 1, np.int64)
    used = np.zeros(m, np.bool_)
    k = 0
    for a in range(m - n + 1):
        path[0] = a
        used[a] = True
        depth = 1
        nxt[1] = a + 1
        while depth > 0:
            if depth == n:
                if path[1] < path[n - 1]:
                    for t in range(n):
                        out[k, t] = eid(path[t], path[(t + 1) % n])
                    k += 1
                depth -= 1
                used[path[depth]] = False
                continue
            v = nxt[depth]
            while v < m and used[v]:
                v += 1
            if v >= m:
                depth -= 1
                if depth > 0:
                    used[path[depth]] = False
                continue
            nxt[depth] = v + 1
            path[depth] = v
            used[v] = True
            depth += 1
            if depth < n:
                nxt[depth] = a + 1
        used[a] = False
    return out


@nb.njit(cache=True)
def build_reverse_index(cyc, E):
    C, n = cyc.shape
    ptr = np.zeros(E + 1, np.int64)
    for c in range(C):
        for t in range(n):
            ptr[cyc[c, t] + 1] += 1
    for e in range(E):
        ptr[e + 1] += ptr[e]
    idx = np.empty(ptr[E], np.int32)
    fill = ptr[:E].copy()
    for c in range(C):
        for t in range(n):
            e = cyc[c, t]
            idx[fill[e]] = c
            fill[e] += 1
    return ptr, idx


# -- state changes with undo -------------------------------------------------------


@nb.njit(cache=True, inline="always")
def _push(trail_e, trail_old, trail_kind, reg, e, old, kind):
    tp = reg[TP]
    trail_e[tp] = e
    trail_old[tp] = old
    trail_kind[tp] = kind
    reg[TP] = tp + 1


@nb.njit(cache=True)
def _restrict(e, mask, color, dom, trail_e, trail_old, trail_kind, reg, queue, qt):
    """Intersect dom[e] with mask.  Returns (ok, new queue tail)."""
    old = dom[e]
    nd = old & mask
    if nd == old:
        return True, qt
    _push(trail_e, trail_old, trail_kind, reg, e, old, KIND_DOM)
    dom[e] = nd
    reg[PROPS] += 1
    if nd == 0:
        return False, qt
    if (nd & (nd - 1)) == 0 and color[e] < 0:
        _push(trail_e, trail_old, trail_kind, reg, e, 0, KIND_COLOR)
        color[e] = lowest_bit(nd)
        queue[qt] = e
        qt += 1
    return True, qt


@nb.njit(cache=True)
def _scan_eager(e, n, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, reg, queue, qt):
    for p in range(ptr[e], ptr[e + 1]):
        c = idx[p]
        mask = 0
        nfree = 0
        fe = -1
        dup = False
        for t in range(n):
            f = cyc[c, t]
            col = color[f]
            if col < 0:
                nfree += 1
                fe = f
                if nfree > 1:
                    break
            else:
                b = 1 << col
                if mask & b:
                    dup = True
                    break
                mask |= b
        if dup or nfree > 1:
            continue
        if nfree == 0:
            return False, qt
        ok, qt = _restrict(fe, mask, color, dom, trail_e, trail_old, trail_kind, reg, queue, qt)
        if not ok:
            return False, qt
    return True, qt


@nb.njit(cache=True)
def _walk(e, m, n, color, maxfree, mode, dom, trail_e, trail_old, trail_kind, reg, queue, qt, scratch_v, scratch_i):
    """Walk the n-cycles through edge e = {eu, ev} as paths ev -> ... -> eu.

    mode 0: propagate (cycles with <= 1 open edge); returns (ok, qt, 0).
    mode 1: count live cycles with exactly ``maxfree`` open edges; returns (True, qt, count).
    """
    eu = 1
    while (eu + 1) * eu // 2 <= e:
        eu += 1
    ev = e - eu * (eu - 1) // 2
    used = scratch_v
    path = scratch_i[0]
    nxt = scratch_i[1]
    msk = scratch_i[2]
    nfr = scratch_i[3]
    fed = scratch_i[4]
    c0 = color[e]
    used[eu] = True
    used[ev] = True
    path[0] = ev
    nxt[0] = 0
    if c0 < 0:
        msk[0] = 0
        nfr[0] = 1
        fed[0] = e
    else:
        msk[0] = 1 << c0
        nfr[0] = 0
        fed[0] = -1
    count = 0
    ok = True
    d = 0
    while d >= 0 and ok:
        if d == n - 2:
            f = eid(path[d], eu)
            col = color[f]
            mk = msk[d]
            nf = nfr[d]
            fe = fed[d]
            live = True
            if col < 0:
                nf += 1
                fe = f
            else:
                b = 1 << col
                if mk & b:
                    live = False
                mk |= b
            if live and nf <= maxfree:
                if mode == 1:
                    if nf == maxfree:
                        count += 1
                elif nf == 0:
                    ok = False
                else:
                    ok, qt = _restrict(fe, mk, color, dom, trail_e, trail_old, trail_kind, reg, queue, qt)
            if d > 0:
                used[path[d]] = False
            d -= 1
            continue
        w = nxt[d]
        found = False
        while w < m:
            if not used[w]:
                f = eid(path[d], w)
                col = color[f]
                if col < 0:
                    if nfr[d] < maxfree:
                        msk[d + 1] = msk[d]
                        nfr[d + 1] = nfr[d] + 1
                        fed[d + 1] = f
                        found = True
                else:
                    b = 1 << col
                    if (msk[d] & b) == 0:
                        msk[d + 1] = msk[d] | b
                        nfr[d + 1] = nfr[d]
                        fed[d + 1] = fed[d]
                        found = True
                if found:
                    break
            w += 1
        if not found:
            if d > 0:
                used[path[d]] = False
            d -= 1
            continue
        nxt[d] = w + 1
        d += 1
        path[d] = w
        used[w] = True
        nxt[d] = 0
    for x in range(m):
        used[x] = False
    return ok, qt, count


@nb.njit(cache=True)
def _near_count(e, reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, queue, scratch_v, scratch_i):
    """Live n-cycles through open edge e with exactly one other open edge."""
    n = reg[N]
    if reg[LAZY]:
        _, _, cnt = _walk(e, reg[M], n, color, 2, 1, dom, trail_e, trail_old, trail_kind, reg, queue, 0,
                          scratch_v, scratch_i)
        return cnt
    cnt = 0
    for p in range(ptr[e], ptr[e + 1]):
        c = idx[p]
        mask = 0
        nfree = 0
        dup = False
        for t in range(n):
            col = color[cyc[c, t]]
            if col < 0:
                nfree += 1
                if nfree > 2:
                    break
            else:
                b = 1 << col
                if mask & b:
                    dup = True
                    break
                mask |= b
        if not dup and nfree == 2:
            cnt += 1
    return cnt


@nb.njit(cache=True)
def _allowed(reg):
    # colors a branch may take: all, or cycle colors + used fresh + one new fresh
    if reg[PALETTE_FRESH]:
        return (1 << (reg[M] + reg[FRESH] + 1)) - 1
    return -1


@nb.njit(cache=True)
def pick_edge(reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, queue, scratch_v, scratch_i):
    """Open edge with fewest branch values; ties -> most near-complete cycles -> lowest id."""
    allowed = _allowed(reg)
    best = -1
    best_size = 1 << 30
    best_near = -1
    E = color.shape[0]
    for e in range(E):
        if color[e] >= 0:
            continue
        size = popcount(dom[e] & allowed)
        if size < best_size:
            best, best_size = e, size
            if reg[TIEBREAK]:
                best_near = _near_count(e, reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind,
                                        queue, scratch_v, scratch_i)
        elif size == best_size and reg[TIEBREAK]:
            near = _near_count(e, reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind,
                               queue, scratch_v, scratch_i)
            if near > best_near:
                best, best_near = e, near
    return best


@nb.njit(cache=True)
def propagate_queue(reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, queue, qt, scratch_v, scratch_i):
    """Run the queue of freshly assigned edges to a fixpoint.  Returns ok."""
    qh = 0
    m = reg[M]
    n = reg[N]
    while qh < qt:
        e = queue[qh]
        qh += 1
        if reg[LAZY]:
            ok, qt, _ = _walk(e, m, n, color, 1, 0, dom, trail_e, trail_old, trail_kind, reg, queue, qt,
                              scratch_v, scratch_i)
        else:
            ok, qt = _scan_eager(e, n, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, reg, queue, qt)
        if not ok:
            return False
    return True


@nb.njit(cache=True)
def propagate_all(reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, queue, scratch_v, scratch_i):
    """Fixpoint from scratch: every assigned edge is (re)scanned once."""
    qt = 0
    E = color.shape[0]
    for e in range(E):
        if color[e] < 0 and dom[e] != 0 and (dom[e] & (dom[e] - 1)) == 0:
            _push(trail_e, trail_old, trail_kind, reg, e, 0, KIND_COLOR)
            color[e] = lowest_bit(dom[e])
        if color[e] >= 0:
            queue[qt] = e
            qt += 1
        elif dom[e] == 0:
            return False
    return propagate_queue(reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, queue, qt,
                           scratch_v, scratch_i)


@nb.njit(cache=True)
def run(reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, st_e, st_vals, st_mark, queue,
        scratch_v, scratch_i, node_limit):
    """Advance the search until SAT, UNSAT, or ``reg[NODES] >= node_limit`` (PAUSED)."""
    m = reg[M]
    while True:
        pc = reg[PC]
        if pc == PC_INIT or pc == PC_PROP:
            if pc == PC_INIT:
                ok = propagate_all(reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, queue,
                                   scratch_v, scratch_i)
            else:
                ok = propagate_queue(reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, queue,
                                     reg[QT], scratch_v, scratch_i)
            reg[QT] = 0
            reg[PC] = PC_PICK if ok else PC_NEXT
        elif pc == PC_PICK:
            e = pick_edge(reg, cyc, ptr, idx, color, dom, trail_e, trail_old, trail_kind, queue,
                          scratch_v, scratch_i)
            if e < 0:
                return SAT
            d = reg[DEPTH]
            st_e[d] = e
            st_vals[d] = dom[e] & _allowed(reg)
            st_mark[d] = reg[TP]
            reg[DEPTH] = d + 1
            reg[NODES] += 1
            reg[PC] = PC_NEXT
            if reg[NODES] >= node_limit:
                return PAUSED
        else:
            # undo to the deepest open frame and try its next value
            d = reg[DEPTH] - 1
            if d < 0:
                return UNSAT
            mark = st_mark[d]
            tp = reg[TP]
            while tp > mark:
                tp -= 1
                kind = trail_kind[tp]
                if kind == KIND_DOM:
                    dom[trail_e[tp]] = trail_old[tp]
                elif kind == KIND_COLOR:
                    color[trail_e[tp]] = -1
                else:
                    reg[FRESH] -= 1
            reg[TP] = tp
            vals = st_vals[d]
            if vals == 0:
                reg[DEPTH] = d
                continue
            v = lowest_bit(vals)
            st_vals[d] = vals & ~(1 << v)
            e = st_e[d]
            _push(trail_e, trail_old, trail_kind, reg, e, dom[e], KIND_DOM)
            dom[e] = 1 << v
            _push(trail_e, trail_old, trail_kind, reg, e, 0, KIND_COLOR)
            color[e] = v
            if reg[PALETTE_FRESH] and v == m + reg[FRESH]:
                _push(trail_e, trail_old, trail_kind, reg, e, 0, KIND_FRESH)
                reg[FRESH] += 1
            queue[0] = e
            reg[QT] = 1
            reg[PC] = PC_PROP
