import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rainbow_lengths_brute
from rainbowcycles.coloring import EdgeColoring, even_coloring, mod4_coloring, num_edges
from rainbowcycles.detect import SpectrumPrefix, find_rainbow_cycle, is_rainbow, spectrum_up_to
from rainbowcycles.monoid import compose


@st.composite
def colorings(draw, min_v=3, max_v=7, max_color=6):
    v = draw(st.integers(min_v, max_v))
    cols = draw(st.lists(st.integers(0, max_color), min_size=num_edges(v), max_size=num_edges(v)))
    return EdgeColoring(v, tuple(cols))


def test_is_rainbow_examples():
    assert is_rainbow(even_coloring(9), [0, 1, 2, 3, 4])
    assert is_rainbow(mod4_coloring(8), range(8))
    assert not is_rainbow(EdgeColoring(4, (0,) * 6), [0, 1, 2])


@pytest.mark.parametrize("cycle", [[0, 1], [0, 1, 1], [0, 1, 9]])
def test_is_rainbow_rejects(cycle):
    with pytest.raises(ValueError):
        is_rainbow(even_coloring(5), cycle)


def test_find_examples():
    assert find_rainbow_cycle(even_coloring(9), 4) is None
    assert find_rainbow_cycle(mod4_coloring(10), 6) is None
    w = find_rainbow_cycle(even_coloring(9), 7)
    assert w is not None and w.length == 7 and w.rainbow and w.validate(even_coloring(9))


@pytest.mark.parametrize("k", [2, 6])
def test_find_rejects_bad_k(k):
    with pytest.raises(ValueError):
        find_rainbow_cycle(even_coloring(5), k)


@settings(max_examples=60)
@given(colorings())
def test_find_matches_brute_force(c):
    expected = rainbow_lengths_brute(c.color, c.vertex_count)
    for k in range(3, c.vertex_count + 1):
        w = find_rainbow_cycle(c, k)
        assert (w is not None) == (k in expected)
        if w is not None:
            assert w.length == k and w.rainbow and w.validate(c) and is_rainbow(c, w.vertices)


@given(colorings())
def test_find_is_deterministic(c):
    for k in range(3, c.vertex_count + 1):
        assert find_rainbow_cycle(c, k) == find_rainbow_cycle(c, k)


def test_spectrum_examples():
    assert spectrum_up_to(even_coloring(9), 9).absent == {2, 4, 6, 8}
    assert spectrum_up_to(mod4_coloring(12), 12).absent == {2, 6, 10}
    assert spectrum_up_to(even_coloring(5), 2).absent == {2}


def test_spectrum_lengths_beyond_v_are_absent():
    p = spectrum_up_to(even_coloring(5), 9)
    assert p.absent == {2, 4, 6, 7, 8, 9}
    assert p.present == {3, 5}


@settings(max_examples=60)
@given(colorings(max_v=8))
def test_spectrum_closed_under_composition(c):
    v = c.vertex_count
    p = spectrum_up_to(c, v)
    for a in p.absent:
        for b in p.absent:
            if compose(a, b) <= v:
                assert compose(a, b) in p.absent


def test_prefix_validation():
    with pytest.raises(ValueError):
        SpectrumPrefix(1, frozenset({2}))
    with pytest.raises(ValueError):
        SpectrumPrefix(5, frozenset({3}))
    with pytest.raises(ValueError):
        SpectrumPrefix(5, frozenset({2, 7}))
    with pytest.raises(ValueError):
        spectrum_up_to(even_coloring(4), 1)
