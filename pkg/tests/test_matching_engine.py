import itertools
import math
import threading

import pytest
from hypothesis import given, settings, strategies as st

from thetabarrier.exact_poly import IntPoly
from thetabarrier.graph_core import Graph, enumerate_labeled_graphs, parse_edge_list
from thetabarrier.matching_engine import (
    MatchingTable,
    brute_force_matching_polynomial,
    count_matchings,
    matching_polynomial,
    matching_polynomial_induced,
    root_bound_holds,
    verify_identities,
)

P3 = parse_edge_list("0 1\n1 2")
P5 = parse_edge_list("0 1\n1 2\n2 3\n3 4")
K13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
K2 = Graph.from_edges(2, [(0, 1)])
C6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


def test_known_polynomials():
    assert matching_polynomial(Graph.from_edges(4, [])) == IntPoly.from_text("1 0 0 0 0")
    assert matching_polynomial(K2) == IntPoly.from_text("1 0 -1")
    assert matching_polynomial(P5) == IntPoly.from_text("1 0 -4 0 3 0")
    assert matching_polynomial(K13) == IntPoly.from_text("1 0 -3 0 0")
    assert matching_polynomial(Graph.from_edges(0, [])) == IntPoly.const(1)


def test_induced_polynomials():
    T = MatchingTable(P5)
    assert matching_polynomial_induced(T, T.full) == IntPoly.from_text("1 0 -4 0 3 0")
    assert matching_polynomial_induced(T, 0) == IntPoly.const(1)
    assert matching_polynomial_induced(MatchingTable(K13), 0b1110) == IntPoly.from_text("1 0 0 0")
    with pytest.raises(ValueError):
        matching_polynomial_induced(T, 1 << 5)


def test_count_matchings_examples():
    assert count_matchings(P3, 1) == 2
    assert count_matchings(P5, 2) == 3
    assert count_matchings(C6, 3) == 2
    assert count_matchings(P5, 3) == 0


def test_complete_graph_closed_form():
    # p(K_n, r) = n! / (r! (n-2r)! 2^r)
    for n in range(1, 9):
        G = Graph.from_edges(n, itertools.combinations(range(n), 2))
        for r in range(n // 2 + 1):
            assert count_matchings(G, r) == math.factorial(n) // (
                math.factorial(r) * math.factorial(n - 2 * r) * 2 ** r
            )


def test_all_graphs_up_to_five_match_brute_force():
    for n in range(6):
        for G in enumerate_labeled_graphs(n):
            assert matching_polynomial(G) == brute_force_matching_polynomial(G)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_policies_agree_with_oracle(G):
    oracle = brute_force_matching_polynomial(G)
    pre = MatchingTable(G, "precompute")
    lazy = MatchingTable(G, "lazy")
    assert pre.poly() == lazy.poly() == oracle
    for S in range(0, G.full_mask + 1, max(1, G.full_mask // 17)):
        assert pre.counts(S) == lazy.counts(S)


def test_lazy_table_is_thread_safe():
    G = Graph.from_edges(14, [(i, j) for i in range(14) for j in range(i + 1, 14) if (i * j) % 3 != 1])
    T = MatchingTable(G, "lazy")
    results = []

    def work():
        results.append(T.poly())

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1


def test_identities_examples():
    rep = verify_identities(P3)
    assert rep.passed
    assert set(rep.results) == {"union", "edge", "vertex", "derivative"}
    assert verify_identities(K2).passed
    assert verify_identities(Graph.from_edges(5, [(0, 1), (2, 3)])).passed


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_identities_hold(G):
    assert verify_identities(G).passed
    assert root_bound_holds(MatchingTable(G))


def test_coefficients_alternate_and_are_nonnegative_counts():
    mu = matching_polynomial(C6)
    assert mu == IntPoly.from_text("1 0 -6 0 9 0 -2")
    T = MatchingTable(C6)
    assert T.matching_number() == 3
