import random

import pytest

from hfree.fileio import ParseError, load_family, parse_graph, parse_graphs, serialize_graph
from hfree.graph import Graph
from hfree.patterns import are_isomorphic, complete_graph, path_graph
from oracles import graph_from_mask


def test_parse_triangle():
    g = parse_graph(b"p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete_graph(3)


def test_parse_isolated_vertices():
    g = parse_graph(b"p edge 2 0\n")
    assert g.vertices == (1, 2) and g.num_edges == 0


def test_parse_skips_comments_and_blank_lines():
    g = parse_graph("c a path\n\np edge 3 2\ne 1 2\nc middle\ne 2 3\n")
    assert g == path_graph(3)


@pytest.mark.parametrize("text, line", [
    ("e 1 2\n", 1),
    ("p edge 3\n", 1),
    ("p edge 3 1\ne 1 4\n", 2),
    ("p edge 3 2\ne 1 2\ne 2 1\n", 3),
    ("p edge 3 1\ne 2 2\n", 2),
    ("p edge 3 1\ne 1 x\n", 2),
    ("p edge 3 2\ne 1 2\n", 1),
    ("p edge 3 1\nq 1 2\n", 2),
    ("", 1),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_serialize_is_canonical():
    g = Graph([1, 2, 3], [(2, 3), (1, 3), (1, 2)])
    assert serialize_graph(g) == b"p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
    assert serialize_graph(Graph()) == b"p edge 0 0\n"


def test_serialize_relabels_in_order():
    g = Graph([10, 20, 30], [(10, 30)])
    assert serialize_graph(g) == b"p edge 3 1\ne 1 3\n"


def test_round_trip_random_graphs():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(0, 12)
        g = graph_from_mask(n, rng.getrandbits(n * (n - 1) // 2) if n > 1 else 0)
        back = parse_graph(serialize_graph(g))
        assert back == g
        assert serialize_graph(back) == serialize_graph(g)


def test_round_trip_relabelled_graph_is_isomorphic():
    g = Graph([5, 9, 11, 40], [(5, 40), (9, 11), (11, 40)])
    assert are_isomorphic(parse_graph(serialize_graph(g)), g)


def test_parse_graphs_multiple_blocks():
    gs = parse_graphs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\np edge 3 2\ne 1 2\ne 2 3\n")
    assert gs == [complete_graph(3), path_graph(3)]
    with pytest.raises(ValueError):
        parse_graph("p edge 1 0\np edge 1 0\n")


def test_load_family(tmp_path):
    fam = load_family("K3,K1,3")
    assert fam.names == ("K3", "K1,3") and fam.star_arity == 3
    path = tmp_path / "fam.txt"
    path.write_bytes(serialize_graph(complete_graph(3)) + serialize_graph(path_graph(4)))
    fam = load_family(f"@{path}")
    assert fam.members == (complete_graph(3), path_graph(4))
    assert fam.max_diameter == 3
