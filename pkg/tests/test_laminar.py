import pytest
from hypothesis import given
from hypothesis import strategies as st

from tightcut.elp import Barrier, TwoSeparation, is_barrier, is_two_separation, separation_sides
from tightcut.errors import DomainError, NotTightError
from tightcut.graph import boundary, contract, laminar
from tightcut.laminar import (
    POLICIES,
    LaminarSeparation,
    SepAvoidingT,
    SepThroughT,
    ShelteredBarrier,
    build_good_collection,
    certify,
    check_avoid_outcome,
    classify_components,
    conjecture_cut,
    find_laminar_elp,
    find_structure_avoiding,
    lift_structure,
    restrict_barrier,
)
from tightcut.oracle import all_barriers, all_two_separations, nontrivial_tight_cuts
from tightcut.tightcuts import is_tight

from conftest import C6, C10, K4, corpus_graphs, corpus_mc, edge_list

X = frozenset({1, 2, 3})
CUT = boundary(C6, X)


# -- lifting through a 2-separation cut ---------------------------------------


def test_lift_barrier_through_contracted_vertex():
    con = contract(C6, {4, 5, 6})
    xbar = con.contracted_label
    lifted = lift_structure(C6, con, 4, is_barrier(con.result, {2, xbar}))
    assert isinstance(lifted, Barrier) and lifted.members == {2, 4}


def test_lift_barrier_away_from_contracted_vertex():
    con = contract(C6, {4, 5, 6})
    lifted = lift_structure(C6, con, 4, is_barrier(con.result, {1, 3}))
    assert lifted.members == {1, 3}


def test_lift_two_separation_in_c10():
    con = contract(C10, set(range(6, 11)))
    xbar = con.contracted_label
    s_h = is_two_separation(con.result, 3, xbar)
    lifted = lift_structure(C10, con, 6, s_h)
    assert isinstance(lifted, TwoSeparation) and lifted.pair == (3, 6)
    assert set(lifted.components) == {frozenset({4, 5}), frozenset({7, 8, 9, 10, 1, 2})}


def test_lift_requires_separation_cut():
    con = contract(C6, {3, 4, 5})
    with pytest.raises(DomainError):
        lift_structure(C6, con, 2, is_barrier(con.result, {1}))


def _separation_contractions(g):
    for sep in all_two_separations(g):
        for side in separation_sides(sep):
            for u1, u2 in (sep.pair, sep.pair[::-1]):
                x = side | {u1}
                yield u1, u2, contract(g, g.vertex_set - x)


def test_inheritance_exhaustive():
    lifted = 0
    for _, g in corpus_mc(8):
        for u1, u2, con in _separation_contractions(g):
            h = con.result
            for s_h in all_barriers(h, h.n // 2) + all_two_separations(h):
                s = lift_structure(g, con, u2, s_h, u1=u1)
                assert type(s) is type(s_h)
                lifted += 1
    assert lifted > 1000


# -- restricting a barrier to one shore ---------------------------------------


def test_restrict_barrier_example():
    r = restrict_barrier(C6, X, is_barrier(C6, {2, 4, 6}), {1})
    assert set(r.hx) == {frozenset({1}), frozenset({3})}
    assert r.hx_bar == (frozenset({5}),)
    assert r.sheltered.members == {4, 6} and r.sheltered.nontrivial


def test_restrict_barrier_swapped_shore_violates_adjacency():
    # {5} has no neighbour in B ∩ {1,2,3} = {2}
    with pytest.raises(DomainError):
        restrict_barrier(C6, {4, 5, 6}, is_barrier(C6, {2, 4, 6}), {5})


def test_restrict_barrier_swapped_shore_valid_component():
    r = restrict_barrier(C6, {4, 5, 6}, is_barrier(C6, {1, 3, 5}), {4})
    assert r.sheltered.members == {1, 3}


def test_restrict_barrier_rejects_even_component():
    b = is_barrier(C6, {1, 3, 5})
    with pytest.raises(DomainError):
        restrict_barrier(C6, {1, 2, 3}, b, {4})


def test_barrier_restriction_exhaustive():
    checked = 0
    for _, g in corpus_mc(8):
        cuts = nontrivial_tight_cuts(g)
        if not cuts:
            continue
        barriers = all_barriers(g, g.n // 2)
        for c in cuts:
            for x in c.shores:
                xb = g.vertex_set - x
                for b in barriers:
                    for k in b.components:
                        if len(k & x) % 2 == 0 or not any(g.neighbors[v] & b.members & xb for v in k):
                            continue
                        r = restrict_barrier(g, x, b, k)
                        assert len(b.members & x) == len(r.hx) - 1
                        assert len(b.members & xb) == len(r.hx_bar) + 1
                        assert r.sheltered.members <= xb
                        checked += 1
    assert checked > 1000


# -- component profiles and the good collection -------------------------------


def test_classify_components_unbalanced_pair():
    profiles = classify_components(C6, X, is_two_separation(C6, 2, 5))
    assert {p.component for p in profiles} == {frozenset({3, 4}), frozenset({6, 1})}
    assert not any(p.balanced or p.good for p in profiles)


def test_classify_components_balanced():
    profiles = classify_components(C6, X, is_two_separation(C6, 1, 4))
    assert {p.component for p in profiles} == {frozenset({2, 3}), frozenset({5, 6})}
    assert all(p.balanced and p.good for p in profiles)


def test_balanced_component_is_good_regardless_of_adjacency():
    # 2-separation {1,4} of the 8-cycle with chord 2-8: pair vertex 1 has one
    # neighbour in the balanced component {2,3}
    g = edge_list(8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1), (5, 8)])
    sep = is_two_separation(g, 1, 4)
    profiles = {p.component: p for p in classify_components(g, {1, 2, 3}, sep)}
    assert profiles[frozenset({2, 3})].balanced and profiles[frozenset({2, 3})].good


def test_build_good_collection_c6():
    entries = build_good_collection(C6, X)
    assert {e.separation.pair for e in entries} == {(1, 4), (3, 6)}
    assert len(entries) == 4 and all(e.profile.balanced for e in entries)
    assert entries[0].separation.pair == (1, 4) and entries[0].profile.component == {2, 3}


def test_build_good_collection_empty():
    assert build_good_collection(K4, {1}) == []


# -- the main search ----------------------------------------------------------


def test_find_laminar_elp_c6():
    r = find_laminar_elp(C6, CUT)
    assert isinstance(r, LaminarSeparation)
    assert r.separation.pair == (1, 4) and r.cut == CUT
    assert r.trace == ("0:case3:guard",)


def test_find_laminar_elp_c10_certifies():
    c = boundary(C10, range(1, 6))
    r = find_laminar_elp(C10, c)
    assert certify(C10, c, r).ok
    assert certify(C10, c, ShelteredBarrier(is_barrier(C10, {2, 4}), frozenset(range(1, 6)))).ok


def test_find_laminar_elp_rejects_bad_cuts():
    with pytest.raises(DomainError):
        find_laminar_elp(C6, boundary(C6, {1}))
    with pytest.raises(NotTightError):
        find_laminar_elp(C6, boundary(C6, {1, 2, 4}))
    with pytest.raises(DomainError):
        find_laminar_elp(C6, CUT, policy="other")


def test_certify_rejects_bad_results():
    crossing = LaminarSeparation(is_two_separation(C6, 2, 5), boundary(C6, {2, 3, 4}))
    assert not certify(C6, CUT, crossing).placement_ok
    straddling = ShelteredBarrier(is_barrier(C6, {2, 6}), X)
    assert not certify(C6, CUT, straddling).ok
    trivial = ShelteredBarrier(is_barrier(C6, {2}), X)
    assert not certify(C6, CUT, trivial).nontrivial


def test_conjecture_cut_for_sheltered_barrier():
    r = ShelteredBarrier(is_barrier(C6, {1, 3}), X)
    e = conjecture_cut(C6, CUT, r)
    assert e.cut == boundary(C6, {4, 5, 6}) and laminar(e.cut, CUT)


# regression graphs reaching the deeper branches of the search
CASE_NO_GOOD = (
    edge_list(10, [(1, 2), (1, 3), (1, 7), (2, 5), (3, 4), (3, 5), (4, 9), (5, 7), (6, 7), (6, 8), (6, 9), (7, 10), (8, 10), (9, 10)]),
    {1, 2, 5, 6, 7, 8, 10},
    "case2",
)
CASE_RECURSE = (
    edge_list(12, [(1, 2), (1, 3), (1, 11), (2, 3), (2, 5), (2, 6), (2, 8), (3, 7), (3, 9), (4, 6), (4, 7), (4, 9),
                   (5, 6), (5, 11), (6, 8), (8, 10), (9, 12), (10, 12)]),
    {1, 2, 5, 6, 8, 10, 11},
    "case3:recurse",
)


@pytest.mark.parametrize("g, x, tag", [CASE_NO_GOOD, CASE_RECURSE], ids=["no-good-component", "recursion"])
def test_deep_branches(g, x, tag):
    c = boundary(g, x)
    assert is_tight(g, c)
    r = find_laminar_elp(g, c, fallback=False)
    assert any(tag in step for step in r.trace)
    assert r.divergence is None and certify(g, c, r).ok


@given(corpus_graphs(), st.sampled_from(POLICIES))
def test_every_tight_cut_gets_a_certified_result(g, policy):
    for c in nontrivial_tight_cuts(g):
        r = find_laminar_elp(g, c, fallback=False, policy=policy)
        assert certify(g, c, r).ok and r.divergence is None
        e = conjecture_cut(g, c, r)
        assert not e.cut.trivial and is_tight(g, e.cut) and laminar(e.cut, c)


@given(corpus_graphs())
def test_result_is_label_invariant_in_validity(g):
    perm = list(reversed(g.vertices))
    h = g.relabel({v: perm[v - 1] for v in g.vertices})
    for c in nontrivial_tight_cuts(h):
        assert certify(h, c, find_laminar_elp(h, c, fallback=False)).ok


# -- structures avoiding a vertex ----------------------------------------------


def test_avoid_examples():
    assert find_structure_avoiding(C6, CUT, 5).separation.pair == (1, 4)
    assert find_structure_avoiding(C6, CUT, 4).separation.pair == (2, 5)
    r = find_structure_avoiding(C6, CUT, 5, policy="barrier")
    assert isinstance(r, ShelteredBarrier) and r.barrier.members == {1, 3}


def test_avoid_rejects_t_in_x():
    with pytest.raises(DomainError):
        find_structure_avoiding(C6, CUT, 2, x=X)


AVOID_RECURSE = edge_list(8, [(1, 7), (1, 8), (2, 3), (2, 4), (2, 5), (2, 8), (3, 6), (4, 5), (4, 7), (5, 8), (6, 8)])
AVOID_THROUGH = edge_list(6, [(1, 3), (1, 5), (2, 5), (2, 6), (3, 4), (4, 6)])


def test_avoid_recursion_branch():
    x = {2, 3, 4, 5, 6}
    r = find_structure_avoiding(AVOID_RECURSE, boundary(AVOID_RECURSE, x), 8, x=x)
    assert any("avoid:recurse" in s for s in r.trace)
    assert check_avoid_outcome(AVOID_RECURSE, x, 8, r)


def test_avoid_through_t_branch():
    x = {1, 3, 4}
    r = find_structure_avoiding(AVOID_THROUGH, boundary(AVOID_THROUGH, x), 6, x=x, policy="lemma")
    assert isinstance(r, SepThroughT) and 6 in r.separation.pair
    assert check_avoid_outcome(AVOID_THROUGH, x, 6, r)


def test_check_avoid_outcome_rejects():
    assert not check_avoid_outcome(C6, X, 5, SepAvoidingT(is_two_separation(C6, 2, 5)))
    assert not check_avoid_outcome(C6, X, 5, ShelteredBarrier(is_barrier(C6, {2, 6}), X))


def test_avoid_exhaustive_small():
    runs = 0
    for _, g in corpus_mc(8):
        for c in nontrivial_tight_cuts(g):
            for x in c.shores:
                for t in g.vertex_set - x:
                    for policy in POLICIES:
                        r = find_structure_avoiding(g, c, t, x=x, policy=policy)
                        assert check_avoid_outcome(g, x, t, r), (g, sorted(x), t, policy, r)
                        runs += 1
    assert runs > 10000
