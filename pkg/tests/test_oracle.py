from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from tightcut.corpus import complete, named_graphs, petersen
from tightcut.elp import is_barrier, is_two_separation
from tightcut.errors import DomainError
from tightcut.graph import Multigraph
from tightcut.matching import enumerate_perfect_matchings, is_bicritical
from tightcut.oracle import (
    all_barriers,
    all_tight_cuts,
    all_two_separations,
    laminar_elp_cut_exists,
    nontrivial_tight_cuts,
    tight_by_enumeration,
    verify_graph,
)
from tightcut.tightcuts import is_tight

from conftest import C4, C6, C10, K4, PATH4, corpus_graphs, mc_graphs


def test_tight_cuts_c6():
    cuts = all_tight_cuts(C6)
    assert sum(c.trivial for c in cuts) == 6
    assert sorted(sorted(c.shore) for c in cuts if not c.trivial) == [[1, 2, 3], [1, 2, 6], [1, 5, 6]]


def test_tight_cuts_small_graphs_are_trivial():
    assert len(all_tight_cuts(K4)) == 4 and not nontrivial_tight_cuts(K4)
    assert len(all_tight_cuts(C4)) == 4 and not nontrivial_tight_cuts(C4)


def test_all_barriers_c6():
    got = {b.members for b in all_barriers(C6, 3)}
    expected = {frozenset({v}) for v in range(1, 7)}
    expected |= {frozenset(p) for p in [(1, 3), (2, 4), (3, 5), (4, 6), (5, 1), (6, 2)]}
    expected |= {frozenset({1, 3, 5}), frozenset({2, 4, 6})}
    assert got == expected and len(got) == 14


def test_all_barriers_k4_and_singletons():
    assert {b.members for b in all_barriers(K4, 4)} == {frozenset({v}) for v in range(1, 5)}
    for g in named_graphs().values():
        assert len(all_barriers(g, 1)) == g.n


def test_all_two_separations_counts():
    assert len(all_two_separations(C6)) == 3
    assert all_two_separations(K4) == []
    assert len(all_two_separations(C10)) == 15


def test_size_bound_enforced():
    with pytest.raises(DomainError):
        all_tight_cuts(complete(16))
    with pytest.raises(DomainError):
        all_tight_cuts(C10, bound=8)


def test_verify_graph_examples():
    report = verify_graph(C6, "C6")
    assert report.passed and report.nontrivial_tight_cuts == 3
    report = verify_graph(K4, "K4")
    assert report.passed and report.nontrivial_tight_cuts == 0
    report = verify_graph(PATH4, "P4")
    assert not report.matching_covered and report.checks == []
    assert report.to_json()["graph_id"] == "P4"


def test_petersen_is_a_brick():
    assert is_bicritical(petersen())
    assert not nontrivial_tight_cuts(petersen())


def _brute_tight(g, shore):
    # definition: every perfect matching meets the cut exactly once
    cut = {i for i, (u, v) in enumerate(g.edges) if (u in shore) != (v in shore)}
    return all(len(cut & set(m.edges)) == 1 for m in enumerate_perfect_matchings(g))


@given(corpus_graphs())
def test_enumeration_matches_definition_and_pairwise_method(g):
    for k in range(1, g.n, 2):
        for shore in combinations(g.vertices, k):
            expected = _brute_tight(g, set(shore))
            assert tight_by_enumeration(g, shore) == expected
    for c in all_tight_cuts(g):
        assert is_tight(g, c)


@given(mc_graphs(max_n=10))
def test_barriers_match_definition(g):
    for b in all_barriers(g, 3):
        assert is_barrier(g, b.members) is not None
    nontrivial = [b for b in all_barriers(g, g.n // 2) if len(b.members) >= 2]
    assert bool(nontrivial) == (not is_bicritical(g))


@given(mc_graphs(max_n=10))
def test_two_separations_match_networkx(g):
    h = nx.Graph(g.edges)
    expected = []
    for u, v in combinations(g.vertices, 2):
        rest = h.subgraph(set(g.vertices) - {u, v})
        parts = list(nx.connected_components(rest))
        if len(parts) > 1 and all(len(p) % 2 == 0 for p in parts):
            expected.append((u, v))
    assert [s.pair for s in all_two_separations(g)] == expected
    assert all(is_two_separation(g, *p) for p in expected)


@given(corpus_graphs())
def test_brute_force_laminar_cut_exists(g):
    for c in nontrivial_tight_cuts(g):
        d = laminar_elp_cut_exists(g, c)
        assert d is not None and not d.trivial


def test_report_json_shape():
    data = verify_graph(C6, "C6").to_json()
    assert {"graph_id", "matching_covered", "nontrivial_tight_cuts", "checks", "passed"} <= data.keys()
    names = {check["name"] for check in data["checks"]}
    assert {"elp-theorem", "decomposition-invariance"} <= names


def test_multigraph_tightness():
    g = Multigraph(4, ((1, 2), (1, 2), (2, 3), (3, 4), (4, 1), (3, 4)))
    assert all(c.trivial for c in all_tight_cuts(g))
