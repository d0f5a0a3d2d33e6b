import pytest
from hypothesis import given

from tightcut.corpus import cube, petersen
from tightcut.elp import (
    Barrier,
    BarrierCut,
    SeparationCut,
    Shelter,
    associated_cuts,
    barrier_cuts,
    find_nontrivial_barrier,
    find_nontrivial_elp_cut,
    find_two_separations,
    hall_barriers,
    is_barrier,
    is_two_separation,
    nontrivial_elp_cuts,
    separation_cut_pair,
    shelter_status,
    vertex_barrier,
)
from tightcut.errors import DomainError
from tightcut.graph import boundary, components, is_independent, laminar
from tightcut.matching import is_bicritical
from tightcut.oracle import all_two_separations, nontrivial_tight_cuts
from tightcut.tightcuts import is_tight

from conftest import C4, C6, C10, K4, corpus_graphs, mc_graphs


def test_is_barrier_examples():
    b = is_barrier(C6, {2, 6})
    assert set(b.components) == {frozenset({1}), frozenset({3, 4, 5})}
    assert is_barrier(C6, {1, 2}) is None
    for v in C6.vertices:
        assert is_barrier(C6, {v}) is not None


def test_is_two_separation_examples():
    s = is_two_separation(C6, 1, 4)
    assert set(s.components) == {frozenset({2, 3}), frozenset({5, 6})}
    assert is_two_separation(C6, 1, 3) is None
    assert all(is_two_separation(K4, u, v) is None for u in range(1, 5) for v in range(u + 1, 5))
    with pytest.raises(DomainError):
        is_two_separation(C6, 2, 2)


def test_find_two_separations_examples():
    assert [s.pair for s in find_two_separations(C6)] == [(1, 4), (2, 5), (3, 6)]
    assert find_two_separations(K4) == []
    assert find_two_separations(cube()) == []


def test_c10_two_separations_are_pairs_at_odd_distance_three_or_five():
    # every pair at distance 3 or 5 splits the 10-cycle into two even paths
    pairs = [s.pair for s in find_two_separations(C10)]
    expected = [(u, v) for u in range(1, 11) for v in range(u + 1, 11) if min(v - u, 10 - v + u) in (3, 5)]
    assert pairs == expected and len(pairs) == 15


def test_find_nontrivial_barrier_examples():
    assert find_nontrivial_barrier(C6).members == {1, 3, 5}
    assert find_nontrivial_barrier(K4) is None
    assert find_nontrivial_barrier(C4).members == {1, 3}


def test_barrier_cuts_examples():
    cuts = barrier_cuts(C6, is_barrier(C6, {2, 6}))
    assert cuts == [boundary(C6, {1}), boundary(C6, {3, 4, 5})]
    assert all(c.trivial for c in barrier_cuts(C4, is_barrier(C4, {1, 3})))
    assert barrier_cuts(C6, is_barrier(C6, {4})) == [boundary(C6, {4})]


def test_separation_cut_pair_examples():
    assert separation_cut_pair(C6, is_two_separation(C6, 1, 4), {2, 3}) == (
        boundary(C6, {1, 2, 3}),
        boundary(C6, {2, 3, 4}),
    )
    assert separation_cut_pair(C6, is_two_separation(C6, 2, 5), {3, 4}) == (
        boundary(C6, {2, 3, 4}),
        boundary(C6, {3, 4, 5}),
    )
    with pytest.raises(DomainError):
        separation_cut_pair(C6, is_two_separation(C6, 1, 4), {2, 3, 5, 6})


def test_find_nontrivial_elp_cut_examples():
    found = find_nontrivial_elp_cut(C6)
    assert isinstance(found, SeparationCut)
    assert found.separation.pair == (1, 4) and found.cut == boundary(C6, {1, 2, 3})
    assert find_nontrivial_elp_cut(K4) is None
    assert find_nontrivial_elp_cut(C4) is None
    assert find_nontrivial_barrier(C4) is not None
    assert find_nontrivial_elp_cut(petersen()) is None and is_bicritical(petersen())


def test_shelter_status_examples():
    c = boundary(C6, {1, 2, 3})
    assert shelter_status(C6, c, is_barrier(C6, {1, 3})).status is Shelter.SHELTERED
    crossing = shelter_status(C6, c, is_barrier(C6, {2, 6}))
    assert crossing.status is Shelter.CROSSING and crossing.witness == boundary(C6, {3, 4, 5})


def test_vertex_barrier_is_maximal():
    # in C6, G-1 leaves a path whose maximum matchings all miss 3 or 5
    b = vertex_barrier(C6, 1)
    assert b.members == {1, 3, 5}
    for v in C6.vertices:
        assert vertex_barrier(C6, v).members >= {v}


def test_hall_barriers_only_for_bipartite():
    assert list(hall_barriers(petersen())) == []
    for b in hall_barriers(C6):
        left, right = C6.bipartition
        assert b.members <= left or b.members <= right


@given(corpus_graphs())
def test_elp_cuts_are_tight_and_structures_valid(g):
    for elp in nontrivial_elp_cuts(g):
        assert not elp.cut.trivial and is_tight(g, elp.cut)
        if isinstance(elp, BarrierCut):
            b = elp.barrier
            assert is_independent(g, b.members)
            parts, odd = components(g, b.members)
            assert odd == len(parts) == len(b.members)
        else:
            assert is_two_separation(g, *elp.separation.pair) is not None


@given(mc_graphs(max_n=10))
def test_elp_cut_exists_iff_tight_cut_exists(g):
    assert (find_nontrivial_elp_cut(g) is not None) == bool(nontrivial_tight_cuts(g))


@given(mc_graphs(max_n=10))
def test_nontrivial_barrier_iff_not_bicritical(g):
    if g.n >= 4:
        assert (find_nontrivial_barrier(g) is None) == is_bicritical(g)


@given(mc_graphs(max_n=10))
def test_two_separations_match_exhaustive_scan(g):
    assert [s.pair for s in find_two_separations(g)] == [s.pair for s in all_two_separations(g)]


@given(corpus_graphs())
def test_sheltered_structures_never_cross(g):
    for c in nontrivial_tight_cuts(g):
        structures = list(find_two_separations(g))
        b = find_nontrivial_barrier(g)
        if b is not None:
            structures.append(b)
        for s in structures:
            members = s.members if isinstance(s, Barrier) else frozenset(s.pair)
            status = shelter_status(g, c, s)
            if members <= c.shore or members <= c.complement:
                assert status.status is Shelter.SHELTERED
                assert all(laminar(d, c) for d in associated_cuts(g, s))
            if status.status is Shelter.CROSSING:
                assert not laminar(status.witness, c)
