import itertools
import random

import pytest
from hypothesis import given, strategies as st

from thetabarrier.graph_core import (
    Graph,
    GraphParseError,
    VertexCapError,
    bits,
    component_of,
    components,
    delete_vertices,
    enumerate_labeled_graphs,
    mask_of,
    odd_component_count,
    parse_edge_list,
    parse_graph6,
    popcount,
    random_graph_with_edges,
    to_edge_list,
    to_graph6,
)


def star(k):
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


def test_mask_helpers():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([0, 3]) == 0b1001
    assert popcount(0b1011) == 3


def test_edge_list_path():
    G = parse_edge_list("0 1\n1 2")
    assert G.n == 3 and G.edges() == [(0, 1), (1, 2)]


def test_edge_list_empty_and_duplicates():
    assert parse_edge_list("").n == 0
    G = parse_edge_list("0 1\n0 1")
    assert G.n == 2 and G.edge_count == 1


def test_edge_list_labels_comments_and_isolated_vertices():
    G = parse_edge_list("# a comment\nvertices: 4\n1 0\n")
    assert G.n == 4
    G2 = parse_edge_list("hub x\nhub y  # trailing\n")
    assert [G2.label(v) for v in range(3)] == ["hub", "x", "y"]
    assert G2.degree(0) == 2


def test_edge_list_errors():
    with pytest.raises(GraphParseError) as e:
        parse_edge_list("0 1\n2\n")
    assert e.value.line == 2
    with pytest.raises(ValueError):
        parse_edge_list("3 3")
    with pytest.raises(VertexCapError):
        parse_edge_list("\n".join(f"0 {i}" for i in range(1, 30)))


def test_graph6_known_strings():
    assert parse_graph6("A_").edges() == [(0, 1)]
    assert parse_graph6("Bw").edge_count == 3
    assert parse_graph6("?").n == 0


def test_graph6_errors():
    for bad in ["", "A", "A~", "B\x01"]:
        with pytest.raises(GraphParseError):
            parse_graph6(bad)


@given(graphs(max_n=14))
def test_graph6_roundtrip(G):
    H = parse_graph6(to_graph6(G))
    assert H.n == G.n and H.adj == G.adj


@given(graphs())
def test_edge_list_roundtrip(G):
    H = parse_edge_list(to_edge_list(G))
    assert H.n == G.n and H.adj == G.adj


def test_delete_vertices():
    P3 = parse_edge_list("0 1\n1 2")
    H = delete_vertices(P3, 0b010)
    assert H.n == 2 and H.edge_count == 0
    assert delete_vertices(P3, 0).adj == P3.adj
    K13 = star(3)
    H = delete_vertices(K13, 0b0010)
    assert H.n == 3 and sorted(H.degree(v) for v in range(3)) == [1, 1, 2]
    with pytest.raises(ValueError):
        delete_vertices(P3, 0b1000)


def test_components_examples():
    assert components(Graph.from_edges(2, [])) == [0b01, 0b10]
    assert components(parse_edge_list("0 1\n1 2")) == [0b111]
    G = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
    assert sorted(popcount(c) for c in components(G)) == [2, 3]


def test_odd_component_count_examples():
    assert odd_component_count(Graph.from_edges(3, [])) == 3
    assert odd_component_count(Graph.from_edges(2, [(0, 1)])) == 0
    assert odd_component_count(star(3), 0b1110) == 3


@given(graphs())
def test_components_partition_live_set(G):
    cs = components(G)
    total = 0
    for c in cs:
        assert total & c == 0
        total |= c
        assert component_of(G, next(bits(c)), G.full_mask) == c
    assert total == G.full_mask


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_labeled_graphs(n)) for n in (0, 1, 2, 3, 4)] == [1, 1, 2, 8, 64]
    seen = {to_graph6(G) for G in enumerate_labeled_graphs(4)}
    assert len(seen) == 64
    with pytest.raises(ValueError):
        next(enumerate_labeled_graphs(8))


def test_random_enumeration_is_seeded():
    a = [G.adj for G in enumerate_labeled_graphs(10, random_count=5, seed=3)]
    b = [G.adj for G in enumerate_labeled_graphs(10, random_count=5, seed=3)]
    assert a == b and len(a) == 5


def test_random_graph_with_edges():
    G = random_graph_with_edges(8, 11, random.Random(0))
    assert G.n == 8 and G.edge_count == 11


def test_remove_edge():
    P3 = parse_edge_list("0 1\n1 2")
    assert P3.remove_edge(0, 1).edges() == [(1, 2)]
    with pytest.raises(ValueError):
        P3.remove_edge(0, 2)
