from itertools import combinations
from math import comb

import pytest

from hfree.generators import gen_clique_free
from hfree.graph import max_degree
from hfree.patterns import PatternFamily, cycle_graph, is_free, star_graph
from hfree.ramsey import _EXACT, RamseyBound, degree_cap, ramsey_upper

TRIPLES6 = list(combinations(range(6), 3))
PAIRS6 = list(combinations(range(6), 2))


def _has_mono_triangle(mask: int) -> bool:
    bit = {p: 1 << i for i, p in enumerate(PAIRS6)}
    for a, b, c in TRIPLES6:
        tri = bit[a, b] | bit[a, c] | bit[b, c]
        if mask & tri in (0, tri):
            return True
    return False


def exhaustive_r33_holds() -> bool:
    """Every graph on 6 vertices has a triangle or an independent 3-set."""
    return all(_has_mono_triangle(mask) for mask in range(1 << 15))


def c5_witnesses_r33_above_5() -> bool:
    c5 = cycle_graph(5)
    for tri in combinations(c5.vertices, 3):
        present = sum(c5.has_edge(u, v) for u, v in combinations(tri, 2))
        if present in (0, 3):
            return False
    return True


def test_ramsey_examples():
    assert ramsey_upper(2, 5) == RamseyBound(2, 5, 5, True)
    r = ramsey_upper(3, 3)
    assert r.value == 6 and r.exact
    r = ramsey_upper(5, 5)
    assert r.value == comb(8, 4) == 70 and not r.exact


def test_r33_by_exhaustion():
    assert exhaustive_r33_holds()
    assert c5_witnesses_r33_above_5()


@pytest.mark.parametrize("s", range(1, 8))
@pytest.mark.parametrize("t", range(1, 8))
def test_symmetric_and_below_binomial(s, t):
    a, b = ramsey_upper(s, t), ramsey_upper(t, s)
    assert a.value == b.value and a.exact == b.exact
    assert a.value <= comb(s + t - 2, s - 1)


def test_table_entries_below_binomial():
    for (s, t), v in _EXACT.items():
        assert v <= comb(s + t - 2, s - 1)


def test_small_cases():
    assert ramsey_upper(1, 9).value == 1
    assert ramsey_upper(9, 2).value == 9


def test_ramsey_rejects_nonpositive():
    with pytest.raises(ValueError):
        ramsey_upper(0, 3)


@pytest.mark.parametrize("s, t, cap", [(3, 4, 5), (2, 3, 1), (3, 5, 8)])
def test_degree_cap(s, t, cap):
    assert degree_cap(s, t) == cap


def test_degree_cap_rejects_small_arguments():
    with pytest.raises(ValueError):
        degree_cap(1, 4)


@pytest.mark.parametrize("s, t", [(3, 4), (3, 5), (2, 4)])
def test_generated_star_and_clique_free_graphs_respect_cap(s, t):
    fam = PatternFamily([star_graph(s)])
    cap = degree_cap(s, t)
    samples = seed = 0
    while samples < 500:
        n = 3 + seed % 10
        g = gen_clique_free(n, t, 0.2 + (seed % 7) / 10, seed)
        seed += 1
        if is_free(g, fam):
            samples += 1
            assert max_degree(g) <= cap
