import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowcycles.coloring import (
    CycleWitness,
    EdgeColoring,
    canonical_cycle,
    canonical_partial,
    coloring_from_dict,
    edge_endpoints,
    edge_index,
    even_color,
    even_coloring,
    induced_subcoloring,
    mod4_color,
    mod4_coloring,
    num_edges,
)


@st.composite
def colorings(draw, min_v=2, max_v=8, max_color=5):
    v = draw(st.integers(min_v, max_v))
    cols = draw(st.lists(st.integers(0, max_color), min_size=num_edges(v), max_size=num_edges(v)))
    return EdgeColoring(v, tuple(cols))


def test_edge_index_layout():
    assert [edge_index(i, j) for i in range(4) for j in range(i)] == list(range(6))
    assert edge_index(1, 3) == edge_index(3, 1) == 4


@given(st.integers(1, 200), st.data())
def test_edge_endpoints_inverts_index(i, data):
    j = data.draw(st.integers(0, i - 1))
    assert edge_endpoints(edge_index(i, j)) == (i, j)


def test_self_loop_rejected():
    c = even_coloring(4)
    with pytest.raises(ValueError):
        c.color(2, 2)
    with pytest.raises(ValueError):
        c.color(0, 4)


@pytest.mark.parametrize("x,y,col", [(1, 3, 0), (1, 2, 1), (4, 7, 4)])
def test_even_formula(x, y, col):
    assert even_color(x, y) == col == even_color(y, x)
    assert even_coloring(max(x, y)).color(x - 1, y - 1) == col


@pytest.mark.parametrize("x,y,col", [(2, 3, 2), (1, 4, 4), (1, 3, 0)])
def test_mod4_formula(x, y, col):
    assert mod4_color(x, y) == col == mod4_color(y, x)
    assert mod4_coloring(max(x, y)).color(x - 1, y - 1) == col


@pytest.mark.parametrize("gen", [even_coloring, mod4_coloring])
def test_generators_reject_small(gen):
    with pytest.raises(ValueError):
        gen(1)


@given(st.integers(1, 60), st.integers(1, 60))
def test_formulas_symmetric(x, y):
    if x != y:
        assert even_color(x, y) == even_color(y, x)
        assert mod4_color(x, y) == mod4_color(y, x)


@pytest.mark.parametrize("gen", [even_coloring, mod4_coloring])
@given(v=st.integers(2, 14), data=st.data())
def test_prefix_closure(gen, v, data):
    w = data.draw(st.integers(2, v))
    assert induced_subcoloring(gen(v), range(w)) == gen(w)


def test_induced_examples():
    assert even_coloring(9).induced(range(5)) == even_coloring(5)
    assert mod4_coloring(12).induced(range(6)) == mod4_coloring(6)


@given(colorings())
def test_induced_identity(c):
    assert c.induced(range(c.vertex_count)) == c


@given(colorings(min_v=3))
def test_induced_relabels_in_order(c):
    vs = list(range(c.vertex_count))[::-1]
    d = c.induced(vs)
    for i in range(len(vs)):
        for j in range(i):
            assert d.color(i, j) == c.color(vs[i], vs[j])


def test_induced_rejects_bad_subsets():
    c = even_coloring(5)
    with pytest.raises(ValueError):
        c.induced([0, 0, 1])
    with pytest.raises(ValueError):
        c.induced([0, 5])
    with pytest.raises(ValueError):
        c.induced([1])


@given(colorings())
def test_json_round_trip(c):
    text = c.to_json()
    assert EdgeColoring.from_json(text) == c
    assert EdgeColoring.from_json(text).to_json() == text


def test_json_layout_is_lower_triangular():
    c = EdgeColoring.from_function(4, lambda i, j: 10 * i + j)
    assert json.loads(c.to_json()) == {"vertices": 4, "colors": [10, 20, 21, 30, 31, 32]}


@pytest.mark.parametrize("bad", [
    {"vertices": 3, "colors": [0, 1]},
    {"vertices": 3, "colors": [0, 1, -1]},
    {"vertices": 3, "colors": [0, 1, 1.5]},
    {"vertices": 0, "colors": []},
    {"colors": [0]},
    [1, 2, 3],
])
def test_reader_rejects(bad):
    with pytest.raises(ValueError):
        coloring_from_dict(bad)


def test_cycle_witness():
    c = even_coloring(9)
    w = CycleWitness.on(c, [0, 1, 2, 3, 4])
    assert w.edge_colors == (1, 2, 3, 4, 0) and w.rainbow and w.validate(c)
    assert w.to_dict() == {"cycle": [0, 1, 2, 3, 4], "colors": [1, 2, 3, 4, 0]}
    assert not CycleWitness((0, 1, 2), (5, 5, 5)).validate(c)
    with pytest.raises(ValueError):
        CycleWitness((0, 1, 1), (0, 1, 2))
    with pytest.raises(ValueError):
        CycleWitness((0, 1), (0, 1))


@given(st.permutations(range(7)))
def test_canonical_cycle(vs):
    cc = canonical_cycle(vs)
    assert cc[0] == 0 and cc[1] < cc[-1]
    # same cyclic sequence up to rotation/reflection
    doubled = list(vs) * 2
    rev = list(reversed(vs)) * 2
    k = len(vs)
    assert any(tuple(doubled[t:t + k]) == cc for t in range(k)) or any(tuple(rev[t:t + k]) == cc for t in range(k))


@pytest.mark.parametrize("m,chords", [(3, 0), (5, 5), (10, 35)])
def test_canonical_partial(m, chords):
    s = canonical_partial(m)
    assigned = [e for e, a in enumerate(s.assignment) if a is not None]
    assert len(assigned) == m and len(s.unassigned()) == chords
    assert sorted(s.assignment[e] for e in assigned) == list(range(m))
    for i in range(m):
        assert s.color(i, (i + 1) % m) == i


def test_canonical_partial_palettes():
    assert canonical_partial(5).domain_colors(edge_index(2, 0)) == [0, 1, 2, 3, 4]
    assert len(canonical_partial(5, "full").domain_colors(edge_index(2, 0))) == 10
    with pytest.raises(ValueError):
        canonical_partial(2)
    with pytest.raises(ValueError):
        canonical_partial(5, "rainbow")


def test_partial_to_coloring():
    s = canonical_partial(3)
    assert s.is_total() and s.to_coloring() == EdgeColoring(3, (0, 2, 1))
    with pytest.raises(ValueError):
        canonical_partial(4).to_coloring()
