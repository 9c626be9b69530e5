import json

import pytest

from thetabarrier.exact_poly import ThetaSpec
from thetabarrier.graph_core import Graph, parse_edge_list, to_graph6
from thetabarrier.matching_engine import MatchingTable
from thetabarrier.theorem_suite import (
    CHECKS,
    GROUPS,
    HUNT_TARGETS,
    HuntWitness,
    exhaustive_corpus,
    hunt_counterexamples,
    non_root_probe,
    random_corpus,
    read_graph6_file,
    reverify,
    run_suite,
    sparse_random_corpus,
    thetas_for,
)

P5 = parse_edge_list("0 1\n1 2\n2 3\n3 4")


def test_thetas_for_policies():
    T = MatchingTable(P5)
    texts = [t.to_text() for t in thetas_for(T, "deg2")]
    assert texts[0] == "1 0" and texts[-1] == "1 -6"
    assert set(texts) == {"1 0", "1 -1", "1 1", "1 0 -3", "1 -6"}
    assert [t.to_text() for t in thetas_for(T, "zero")] == ["1 0", "1 -6"]
    assert non_root_probe(5).to_text() == "1 -6"


def test_suite_passes_up_to_five_vertices():
    report = run_suite(exhaustive_corpus(5), "deg2", description="n <= 5")
    assert report.passed, report.to_text()
    assert report.graphs == 1 + 1 + 2 + 8 + 64 + 1024
    assert set(report.checks) == set(CHECKS)
    assert all(s.instances > 0 for s in report.checks.values()), [n for n, s in report.checks.items() if not s.instances]


def test_explicit_theta_list_on_p5():
    report = run_suite([P5], [ThetaSpec.from_text("1 0 -3")], GROUPS)
    assert report.passed
    assert report.checks["critical_graph_deletion_bound"].instances > 0
    assert "explicit" in report.theta_policy


def test_report_serializes():
    report = run_suite(exhaustive_corpus(3), "zero", ("identities",))
    doc = json.loads(report.to_json())
    assert doc["passed"] is True and doc["graphs"] == 1 + 1 + 2 + 8
    assert "identity_union" in report.to_text()


def test_parallel_run_matches_serial():
    a = run_suite(random_corpus(7, 40, seed=5), "deg2")
    b = run_suite(random_corpus(7, 40, seed=5), "deg2", jobs=2)
    assert a.passed and b.passed
    assert {k: v.instances for k, v in a.checks.items()} == {k: v.instances for k, v in b.checks.items()}


def test_sparse_corpus_respects_edge_cap():
    for G in sparse_random_corpus(30, max_edges=12, seed=2):
        assert G.edge_count <= 12


def test_read_graph6_file(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("A_\nBw\n\n")
    assert [G.n for G in read_graph6_file(str(p))] == [2, 3]


def test_unknown_group_rejected():
    with pytest.raises(ValueError):
        run_suite([], "zero", ("nope",))


@pytest.mark.parametrize("target", ["barrier_not_zero_barrier", "extreme_not_barrier", "special_intersection_gap"])
def test_small_hunts_find_and_reverify(target):
    result = hunt_counterexamples(target, 5)
    assert result.success
    assert reverify(target, result.found[0])
    assert json.loads(result.to_json())["status"] == "found"


def test_hunt_without_success_reports_progress():
    result = hunt_counterexamples("special_intersection_gap", 3)
    assert not result.success and result.searched_up_to == 3
    assert result.to_dict()["status"] == "not found up to n=3"


def test_hunt_rejects_bad_arguments():
    with pytest.raises(ValueError):
        hunt_counterexamples("nope", 3)
    with pytest.raises(ValueError):
        hunt_counterexamples(HUNT_TARGETS[0], 9)


def test_reverify_rejects_a_false_claim():
    K2 = Graph.from_edges(2, [(0, 1)])
    fake = HuntWitness(to_graph6(K2), "1 0", "0", {"X": [0]})
    assert not reverify("extreme_not_barrier", fake)
