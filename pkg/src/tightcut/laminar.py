"""Constructive laminar ELP structures for a nontrivial tight cut.

Given a matching covered graph ``G`` and a nontrivial tight cut ``C = ∂(X)``,
:func:`find_laminar_elp` returns either a nontrivial barrier contained in one
shore of ``C`` or a 2-separation together with one of its cuts that does not
cross ``C``.  The search recurses on tight-cut contractions, which shrink the
graph by at least two vertices per level.

Every branch that the underlying argument shows to be impossible is turned
into a runtime check: reaching it raises :class:`InvariantError` instead of
returning something unverified.  Every returned structure is re-verified
from scratch before it leaves this module.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, replace
from itertools import combinations

from .elp import (
    Barrier,
    BarrierCut,
    SeparationCut,
    Structure,
    TwoSeparation,
    barrier_from_pair,
    find_nontrivial_barrier,
    find_two_separations,
    is_barrier,
    is_sheltered,
    is_two_separation,
    separation_sides,
)
from .errors import DomainError, InvariantError
from .graph import Contraction, Cut, Multigraph, boundary, contract, laminar, vertex_set
from .matching import is_matching_covered
from .tightcuts import cut_meet_join, is_tight, require_matching_covered, require_tight

log = logging.getLogger(__name__)

FALLBACK_MAX_N = int(os.environ.get("TIGHTCUT_FALLBACK_MAX_N", "14"))
POLICIES = ("separation", "barrier", "lemma")


@dataclass(frozen=True)
class ComponentProfile:
    component: frozenset[int]
    balanced: bool
    good: bool


@dataclass(frozen=True)
class GoodEntry:
    separation: TwoSeparation
    profile: ComponentProfile


@dataclass(frozen=True)
class BarrierRestriction:
    hx: tuple[frozenset[int], ...]
    hx_bar: tuple[frozenset[int], ...]
    sheltered: Barrier


@dataclass(frozen=True)
class ShelteredBarrier:
    barrier: Barrier
    shore: frozenset[int]
    trace: tuple[str, ...] = ()
    divergence: str | None = None


@dataclass(frozen=True)
class LaminarSeparation:
    separation: TwoSeparation
    cut: Cut
    trace: tuple[str, ...] = ()
    divergence: str | None = None


LaminarResult = ShelteredBarrier | LaminarSeparation


@dataclass(frozen=True)
class SepAvoidingT:
    separation: TwoSeparation
    trace: tuple[str, ...] = ()


@dataclass(frozen=True)
class SepThroughT:
    separation: TwoSeparation
    cut: Cut
    shore: frozenset[int]
    trace: tuple[str, ...] = ()


AvoidOutcome = SepAvoidingT | SepThroughT | ShelteredBarrier


@dataclass(frozen=True)
class Certificate:
    structure_valid: bool
    nontrivial: bool
    placement_ok: bool
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.structure_valid and self.nontrivial and self.placement_ok


@dataclass
class _Run:
    policy: str = "separation"
    depth: int = 0
    trace: list[str] = field(default_factory=list)

    def note(self, tag: str) -> None:
        self.trace.append(f"{self.depth}:{tag}")


# -- verification helpers ----------------------------------------------------


def _sheltered_barrier(g: Multigraph, c: Cut, members) -> ShelteredBarrier:
    members = frozenset(members)
    b = is_barrier(g, members) if members else None
    if b is None or len(members) < 2:
        raise InvariantError("expected a nontrivial barrier", {"members": sorted(members)})
    for shore in c.shores:
        if members <= shore:
            return ShelteredBarrier(b, shore)
    raise InvariantError("barrier is not inside a shore", {"members": sorted(members), "shore": sorted(c.shore)})


def _is_side(sep: TwoSeparation, side: frozenset[int]) -> bool:
    inside = [p for p in sep.components if p <= side]
    return bool(side) and sum(map(len, inside)) == len(side) and len(inside) < len(sep.components)


def _sheltered_separation(g: Multigraph, c: Cut, sep: TwoSeparation) -> LaminarSeparation:
    """A separation cut laminar with ``c`` for a separation inside one shore."""
    for side in separation_sides(sep):
        cut = boundary(g, side | {sep.pair[0]})
        if laminar(cut, c):
            return LaminarSeparation(sep, cut)
    raise InvariantError("sheltered 2-separation has no cut laminar with C", {"pair": list(sep.pair)})


def _laminar_separation(g: Multigraph, c: Cut, sep: TwoSeparation, cut: Cut) -> LaminarSeparation:
    result = LaminarSeparation(sep, cut)
    cert = certify(g, c, result)
    if not cert.ok:
        raise InvariantError("separation cut fails its certificate", {"detail": cert.detail})
    return result


def certify(g: Multigraph, c: Cut, result: LaminarResult) -> Certificate:
    """Re-verify a result from scratch against ``g`` and ``c``."""
    if isinstance(result, ShelteredBarrier):
        members = result.barrier.members
        valid = bool(members) and is_barrier(g, members) is not None
        placed = result.shore in c.shores and members <= result.shore
        return Certificate(valid, len(members) >= 2, placed, f"barrier {sorted(members)}")
    sep = result.separation
    valid = is_two_separation(g, *sep.pair) is not None
    shore = result.cut.shore
    inside = [v for v in sep.pair if v in shore]
    if valid and len(inside) == 1:
        checked = is_two_separation(g, *sep.pair)
        valid = _is_side(checked, shore - set(sep.pair))
    else:
        valid = False
    placed = laminar(result.cut, c)
    return Certificate(valid, not result.cut.trivial, placed, f"pair {list(sep.pair)} shore {sorted(shore)}")


def conjecture_cut(g: Multigraph, c: Cut, result: LaminarResult) -> BarrierCut | SeparationCut:
    """A nontrivial ELP cut laminar with ``c`` derived from a result.

    For a barrier inside shore ``Z`` this is the barrier cut of the component
    that contains the other shore.
    """
    if isinstance(result, LaminarSeparation):
        side = result.cut.shore - set(result.separation.pair)
        return SeparationCut(result.separation, side, result.cut)
    other = c.other_shore(result.shore)
    for i, part in enumerate(result.barrier.components):
        if other <= part:
            return BarrierCut(result.barrier, i, boundary(g, part))
    raise InvariantError("no barrier component contains the opposite shore", {"barrier": sorted(result.barrier.members)})


# -- lemmas ------------------------------------------------------------------


def _shore(g: Multigraph, x) -> frozenset[int]:
    """Accept a cut (its canonical shore plays X) or an explicit vertex set."""
    if isinstance(x, Cut):
        return x.shore
    return vertex_set(g, x)


def lift_structure(
    g: Multigraph, con: Contraction, u2: int, s_h: Structure, u1: int | None = None
) -> Structure:
    """Lift a barrier or 2-separation of ``H = G/X̄`` back to ``G``.

    ``∂(X)`` must be a 2-separation cut of ``G`` for ``pair = (u1, u2)`` with
    ``u1 ∈ X`` and ``u2 ∈ X̄`` (the contracted set); ``u1`` is found if not
    given.  The lifted set replaces
    the contracted vertex by ``u2``.  Raises :class:`InvariantError` if the
    lifted set is not a structure of the same kind, or if a component of
    ``H - S_H`` away from ``{u1, x̄}`` is not a component of ``G - S``.
    """
    h = con.result
    xbar = con.contracted_label
    x = g.vertex_set - con.contracted
    if u2 not in con.contracted:
        raise DomainError("u2 must lie in the contracted set")
    candidates = sorted(x) if u1 is None else [u1]
    for cand in candidates:
        sep = is_two_separation(g, cand, u2) if cand in x else None
        if sep is not None and _is_side(sep, x - {cand}):
            u1 = cand
            break
    else:
        raise DomainError("the contracted set is not a shore of a 2-separation cut through u2")
    if isinstance(s_h, Barrier):
        s_h = is_barrier(h, s_h.members)
    else:
        s_h = is_two_separation(h, *s_h.pair)
    if s_h is None:
        raise DomainError("structure is not valid in the contracted graph")

    members = frozenset(con.lift_vertex(v) for v in s_h.members if v != xbar)
    if xbar in s_h.members:
        members |= {u2}
    if isinstance(s_h, Barrier):
        lifted = is_barrier(g, members)
    else:
        lifted = is_two_separation(g, *sorted(members)) if len(members) == 2 else None
    if lifted is None:
        raise InvariantError(
            "lifted set is not a structure of G",
            {"kind": type(s_h).__name__, "members": sorted(members)},
        )
    u1_h = con.image_of[u1]
    touching = [p for p in s_h.components if u1_h in p or xbar in p]
    if len(touching) > 1:
        raise InvariantError("two components meet {u1, x̄}", {"members": sorted(members)})
    g_parts = set(lifted.components)
    for part in s_h.components:
        if part in touching:
            continue
        if con.lift(part) not in g_parts:
            raise InvariantError(
                "component did not transfer to G",
                {"members": sorted(members), "component": sorted(con.lift(part))},
            )
    return lifted


def restrict_barrier(g: Multigraph, x, b: Barrier, k) -> BarrierRestriction:
    """Split the components of ``G - B`` by the shore ``X`` and restrict ``B`` to ``X̄``.

    ``k`` must be a component of ``G - B`` with an odd number of vertices in
    ``X`` and a neighbour in ``B ∩ X̄``; ``∂(X)`` must be tight.  Returns the
    components with odd intersection with ``X`` and with ``X̄`` and the
    barrier ``B ∩ X̄``, after checking the counts
    ``|B∩X| = |H_X| - 1`` and ``|B∩X̄| = |H_X̄| + 1``.
    """
    x = _shore(g, x)
    xb = g.vertex_set - x
    k = frozenset(k)
    checked = is_barrier(g, b.members)
    if checked is None:
        raise DomainError("not a barrier")
    b = checked
    if k not in b.components:
        raise DomainError("k is not a component of G - B")
    if len(k & x) % 2 == 0:
        raise DomainError("k must have an odd number of vertices in X")
    if not any(g.neighbors[v] & b.members & xb for v in k):
        raise DomainError("k has no neighbour in B ∩ X̄")
    c = boundary(g, x)
    if not is_tight(g, c):
        raise DomainError("∂(X) is not tight")
    hx = tuple(p for p in b.components if len(p & x) % 2)
    hxb = tuple(p for p in b.components if len(p & xb) % 2)
    in_x, in_xb = len(b.members & x), len(b.members & xb)
    if in_x != len(hx) - 1 or in_xb != len(hxb) + 1:
        raise InvariantError(
            "barrier accounting failed",
            {"barrier": sorted(b.members), "X": sorted(x), "hx": len(hx), "hxb": len(hxb)},
        )
    for p in hxb:
        if not p <= xb or any(g.neighbors[v] & b.members & x for v in p):
            raise InvariantError("component of H_X̄ leaves X̄ or touches B ∩ X", {"component": sorted(p)})
    sheltered = is_barrier(g, b.members & xb)
    if sheltered is None:
        raise InvariantError("B ∩ X̄ is not a barrier", {"barrier": sorted(b.members), "X": sorted(x)})
    if not c.trivial and b.nontrivial and len(sheltered) < 2:
        crossing = [p for p in b.components if not laminar(boundary(g, p), c)]
        if not crossing:
            raise InvariantError("avoiding nontrivial barrier restricted to a singleton", {"barrier": sorted(b.members)})
    return BarrierRestriction(hx, hxb, sheltered)


def classify_components(g: Multigraph, x, sep: TwoSeparation) -> list[ComponentProfile]:
    """Balanced/good profile of each component of ``G - sep``.

    Also checks that an unbalanced component forces exactly two components,
    both unbalanced, with every edge of ``∂(X)`` inside one of them.
    """
    x = _shore(g, x)
    u, v = sep.pair
    if (u in x) == (v in x):
        raise DomainError("the separation must have one vertex in each shore")
    profiles = []
    for part in sep.components:
        balanced = len(part & x) % 2 == 0
        good = balanced or all(len(g.neighbors[w] & part) >= 2 for w in sep.pair)
        profiles.append(ComponentProfile(part, balanced, good))
    if any(not p.balanced for p in profiles):
        if len(profiles) != 2 or any(p.balanced for p in profiles):
            raise InvariantError("unbalanced 2-separation without exactly two unbalanced parts", {"pair": [u, v]})
        c = boundary(g, x)
        for e in c.edges:
            a, b = g.edges[e]
            if not any(a in p.component and b in p.component for p in profiles):
                raise InvariantError("cut edge not inside a component", {"pair": [u, v], "edge": e})
    return profiles


def build_good_collection(g: Multigraph, x) -> list[GoodEntry]:
    """Good components over all 2-separations.

    Sorted by component size, then separation pair, then smallest vertex.
    """
    x = _shore(g, x)
    xb = g.vertex_set - x
    entries = []
    for sep in find_two_separations(g):
        if sep.members <= x or sep.members <= xb:
            raise DomainError(f"2-separation {list(sep.pair)} lies inside a shore")
        for prof in classify_components(g, x, sep):
            if prof.good:
                entries.append(GoodEntry(sep, prof))
    entries.sort(key=lambda e: (len(e.profile.component), e.separation.pair, min(e.profile.component)))
    return entries


# -- the recursive search ----------------------------------------------------


def _enter(g: Multigraph, x: frozenset[int]) -> Cut:
    c = boundary(g, x)
    if not is_matching_covered(g):
        raise InvariantError("recursive call on a graph that is not matching covered")
    if c.trivial:
        raise InvariantError("recursive call on a trivial cut", {"shore": sorted(x)})
    if not is_tight(g, c):
        raise InvariantError("recursive call on a cut that is not tight", {"shore": sorted(x)})
    return c


def _laminar(g: Multigraph, x: frozenset[int], run: _Run) -> LaminarResult:
    c = _enter(g, x)
    xb = g.vertex_set - x
    seps = find_two_separations(g)
    for sep in seps:
        if sep.members <= x or sep.members <= xb:
            run.note("sheltered-separation")
            return _sheltered_separation(g, c, sep)
    if not seps:
        return _case_no_separation(g, x, run)
    good = build_good_collection(g, x)
    if not good:
        return _case_no_good(g, x, seps[0], run)
    return _case_good(g, x, good[0], run)


def _case_no_separation(g: Multigraph, x: frozenset[int], run: _Run) -> LaminarResult:
    c = boundary(g, x)
    b = find_nontrivial_barrier(g)
    if b is None:
        raise InvariantError("no 2-separation and no nontrivial barrier despite a nontrivial tight cut")
    if is_sheltered(c, b.members):
        run.note("case1:sheltered")
        return _sheltered_barrier(g, c, b.members)
    crossing = [p for p in b.components if not laminar(boundary(g, p), c)]
    if not crossing:
        run.note("case1:avoiding")
        for z in (x, g.vertex_set - x):
            zb = g.vertex_set - z
            for part in b.components:
                if len(part & z) % 2 and any(g.neighbors[v] & b.members & zb for v in part):
                    r = restrict_barrier(g, z, b, part)
                    return _sheltered_barrier(g, c, r.sheltered.members)
        raise InvariantError("avoiding barrier with no component to restrict along", {"barrier": sorted(b.members)})

    y = crossing[0]
    if len(x & y) % 2 == 0:
        x = g.vertex_set - x
    r = restrict_barrier(g, x, b, y)
    if r.sheltered.nontrivial:
        run.note("case1:crossing-restrict")
        return _sheltered_barrier(g, c, r.sheltered.members)
    (u,) = r.sheltered.members
    meet = x & y
    if len(meet) == 1:
        (v,) = meet
        raise InvariantError(
            "trivial meet would make a 2-separation in a graph without any",
            {"pair": sorted((u, v)), "is_two_separation": is_two_separation(g, u, v) is not None},
        )
    cut_meet_join(g, x, y, check=False)
    con = contract(g, g.vertex_set - y)
    h, ybar = con.result, con.contracted_label
    x_h = con.project(meet)
    run.note("case1:recurse")
    run.depth += 1
    outcome = _avoiding(h, x_h, ybar, run)
    run.depth -= 1
    if not isinstance(outcome, ShelteredBarrier):
        members = sorted(con.lift(outcome.separation.members - {ybar}))
        raise InvariantError(
            "contraction has a 2-separation, which would lift to one in G",
            {"outcome": type(outcome).__name__, "members": members},
        )
    b_h = outcome.barrier
    if ybar not in b_h.members:
        run.note("case1:lift-inside")
        return _sheltered_barrier(g, c, con.lift(b_h.members))
    run.note("case1:lift-merge")
    b_g = is_barrier(g, con.lift(b_h.members - {ybar}) | b.members)
    if b_g is None:
        raise InvariantError("merged barrier is not a barrier", {"barrier": sorted(b.members)})
    k_h = next((p for p in b_h.components if x_h <= p), None)
    if k_h is None:
        raise InvariantError("no component of H - B_H contains the meet")
    r2 = restrict_barrier(g, x, b_g, con.lift(k_h))
    return _sheltered_barrier(g, c, r2.sheltered.members)


def _case_no_good(g: Multigraph, x: frozenset[int], sep: TwoSeparation, run: _Run) -> LaminarResult:
    run.note("case2")
    c = boundary(g, x)
    classify_components(g, x, sep)
    l1, l2 = sep.components
    for a in sep.pair:
        for here, there in ((l1, l2), (l2, l1)):
            first = g.neighbors[a] & here
            if len(first) != 1:
                continue
            second = g.neighbors[a] & there
            if len(second) != 1:
                raise InvariantError("pair vertex has one neighbour on one side only", {"pair": list(sep.pair)})
            return _sheltered_barrier(g, c, first | second)
    raise InvariantError("no pair vertex with a single neighbour in a component", {"pair": list(sep.pair)})


def _case_good(g: Multigraph, x: frozenset[int], entry: GoodEntry, run: _Run) -> LaminarResult:
    c = boundary(g, x)
    xb = g.vertex_set - x
    sep, prof = entry.separation, entry.profile
    l1 = prof.component
    a, b = sep.pair
    u1, u2 = (a, b) if len(x & (l1 | {a})) % 2 else (b, a)
    y = l1 | {u1}
    d = boundary(g, y)
    if laminar(d, c):
        run.note("case3:guard")
        return _laminar_separation(g, c, sep, d)
    meet = x & y
    if len(meet) == 1:
        if not prof.balanced:
            raise InvariantError("unbalanced good component with a trivial meet", {"pair": list(sep.pair)})
        run.note("case3:trivial-meet")
        return _laminar_separation(g, c, sep, boundary(g, (xb & y) | {u2}))
    partner = boundary(g, l1 | {u2})
    if laminar(partner, c):
        run.note("case3:partner")
        return _laminar_separation(g, c, sep, partner)

    cut_meet_join(g, x, y, check=False)
    con = contract(g, g.vertex_set - y)
    h, ybar = con.result, con.contracted_label
    x_h = con.project(meet)
    run.note("case3:recurse")
    run.depth += 1
    sub = _laminar(h, x_h, run)
    run.depth -= 1

    if isinstance(sub, ShelteredBarrier):
        s = lift_structure(g, con, u2, sub.barrier, u1)
        if ybar not in sub.barrier.members:
            run.note("case3.1:inside")
            return _sheltered_barrier(g, c, s.members)
        if prof.balanced:
            run.note("case3.1:balanced")
            return _sheltered_barrier(g, c, s.members)
        w_h = next((p for p in sub.barrier.components if x_h <= p), None)
        if w_h is None:
            raise InvariantError("no component of H - S_H contains the meet")
        r = restrict_barrier(g, x, s, con.lift(w_h))
        if r.sheltered.nontrivial:
            run.note("case3.1:restrict")
            return _sheltered_barrier(g, c, r.sheltered.members)
        (v,) = r.sheltered.members
        run.note("case3.1:pair")
        if is_barrier(g, (u1, v)) is not None:
            return _sheltered_barrier(g, c, (u1, v))
        pair_sep = is_two_separation(g, u1, v)
        if pair_sep is not None:
            return _sheltered_separation(g, c, pair_sep)
        raise InvariantError("{u1, v} is neither a barrier nor a 2-separation", {"pair": [u1, v]})

    s_h, d_h = sub.separation, sub.cut
    i_shores = (x_h, h.vertex_set - x_h)
    z_h = next((z for z in d_h.shores if any(z <= s for s in i_shores)), None)
    if z_h is None:
        raise InvariantError("returned separation cut crosses I")
    s = lift_structure(g, con, u2, s_h, u1)
    w_h = z_h - s_h.members
    if ybar not in w_h:
        w = con.lift(w_h)
        if is_sheltered(c, s.members):
            run.note("case3.2:sheltered")
            return _sheltered_separation(g, c, s)
        for shore in (x, xb):
            if w <= shore:
                anchor = next(v for v in s.pair if v in shore)
                run.note("case3.2:inside")
                return _laminar_separation(g, c, s, boundary(g, w | {anchor}))
        raise InvariantError("separation side meets both shores without the contracted vertex")
    if not prof.balanced:
        raise InvariantError("unbalanced minimal component led to a sheltered 2-separation", {"pair": list(s.pair)})
    raise InvariantError("balanced components strictly inside the minimal good component", {"pair": list(s.pair)})


def _quick_sheltered_barrier(g: Multigraph, x: frozenset[int]) -> frozenset[int] | None:
    xb = g.vertex_set - x
    for u, v in combinations(g.vertices, 2):
        b = barrier_from_pair(g, u, v)
        if b is None:
            continue
        for cand in (frozenset((u, v)), b.members, b.members & x, b.members & xb):
            if len(cand) >= 2 and (cand <= x or cand <= xb) and is_barrier(g, cand) is not None:
                return cand
    return None


def _avoiding(g: Multigraph, x: frozenset[int], t: int, run: _Run) -> AvoidOutcome:
    c = _enter(g, x)
    xb = g.vertex_set - x
    if t not in xb:
        raise InvariantError("t must lie in the complement shore", {"t": t})
    if run.policy == "separation":
        for sep in find_two_separations(g):
            if t not in sep.pair:
                run.note("avoid:separation-first")
                return SepAvoidingT(sep)
    elif run.policy == "barrier":
        found = _quick_sheltered_barrier(g, x)
        if found is not None:
            run.note("avoid:barrier-first")
            return _sheltered_barrier(g, c, found)

    res = _laminar(g, x, run)
    if isinstance(res, ShelteredBarrier):
        run.note("avoid:iii")
        return res
    sep, f = res.separation, res.cut
    if t not in sep.pair:
        run.note("avoid:i")
        return SepAvoidingT(sep)
    for z in f.shores:
        if z <= xb:
            run.note("avoid:ii")
            return SepThroughT(sep, f, z)
    z = next((z for z in f.shores if z <= x), None)
    if z is None:
        raise InvariantError("laminar separation cut has no shore inside a shore of C")
    u = sep.pair[0] if sep.pair[1] == t else sep.pair[1]
    if u not in z:
        raise InvariantError("separation cut shore does not hold the other pair vertex")
    z_prime = (z - {u}) | {t}
    con = contract(g, z_prime)
    h, zp = con.result, con.contracted_label
    x_h = con.project((x - z) | {u})
    run.note("avoid:recurse")
    run.depth += 1
    sub = _avoiding(h, x_h, zp, run)
    run.depth -= 1

    if isinstance(sub, SepAvoidingT):
        s = lift_structure(g, con, t, sub.separation, u)
        run.note("avoid:lift-i")
        return SepAvoidingT(s)
    if isinstance(sub, SepThroughT):
        s = lift_structure(g, con, t, sub.separation, u)
        w_h = sub.shore - sub.separation.members
        y = con.lift(w_h) | {t}
        if not (y <= xb and t in s.pair and _is_side(s, y - {t})):
            raise InvariantError("lifted separation cut is not inside X̄", {"shore": sorted(y)})
        run.note("avoid:lift-ii")
        return SepThroughT(s, boundary(g, y), y)
    s = lift_structure(g, con, t, sub.barrier, u)
    run.note("avoid:lift-iii")
    return _sheltered_barrier(g, c, s.members)


# -- public entry points -----------------------------------------------------


def _prepare(g: Multigraph, c: Cut) -> None:
    require_matching_covered(g)
    if c.graph != g:
        raise DomainError("cut belongs to a different graph")
    if c.trivial:
        raise DomainError("the cut must be nontrivial")
    require_tight(g, c)


def find_laminar_elp(
    g: Multigraph, c: Cut, *, fallback: bool | None = None, policy: str = "separation"
) -> LaminarResult:
    """A sheltered nontrivial barrier or a 2-separation cut laminar with ``c``.

    With ``fallback`` (default: on for graphs up to ``FALLBACK_MAX_N``
    vertices) an :class:`InvariantError` from the constructive search is
    logged and an exhaustive search answers instead; the result then carries
    the error text in ``divergence``.
    """
    if policy not in POLICIES:
        raise DomainError(f"unknown policy {policy!r}")
    _prepare(g, c)
    run = _Run(policy)
    try:
        result = _laminar(g, c.shore, run)
    except InvariantError as exc:
        use = g.n <= FALLBACK_MAX_N if fallback is None else fallback
        if not use:
            raise
        from .oracle import exhaustive_laminar

        found = exhaustive_laminar(g, c)
        if found is None:
            raise
        log.warning("constructive search diverged (%s); exhaustive search answered", exc)
        return replace(found, trace=tuple(run.trace) + ("fallback",), divergence=str(exc))
    cert = certify(g, c, result)
    if not cert.ok:
        raise InvariantError("result fails its certificate", {"detail": cert.detail})
    return replace(result, trace=tuple(run.trace))


def find_structure_avoiding(
    g: Multigraph, c: Cut, t: int, *, x=None, policy: str = "separation"
) -> AvoidOutcome:
    """One of: a 2-separation missing ``t``; a 2-separation through ``t`` with a
    cut shore inside the shore ``X̄ ∋ t``; or a sheltered nontrivial barrier.

    ``x`` picks which shore of ``c`` plays ``X`` (default: the one without ``t``).
    ``policy`` chooses the shortcut tried before the recursive construction:
    ``"separation"`` (any 2-separation avoiding ``t``), ``"barrier"`` (a
    sheltered barrier from a failing pair) or ``"lemma"`` (none).
    """
    if policy not in POLICIES:
        raise DomainError(f"unknown policy {policy!r}")
    _prepare(g, c)
    if x is None:
        x = c.complement if t in c.shore else c.shore
    x = vertex_set(g, x)
    if x not in c.shores:
        raise DomainError("x must be a shore of c")
    if t in x:
        raise DomainError("t must lie outside x")
    run = _Run(policy)
    outcome = _avoiding(g, x, t, run)
    return replace(outcome, trace=tuple(run.trace))


def check_avoid_outcome(g: Multigraph, x, t: int, outcome: AvoidOutcome) -> bool:
    """Independent re-verification of a :func:`find_structure_avoiding` outcome."""
    x = vertex_set(g, x)
    xb = g.vertex_set - x
    if isinstance(outcome, SepAvoidingT):
        return t not in outcome.separation.pair and is_two_separation(g, *outcome.separation.pair) is not None
    if isinstance(outcome, SepThroughT):
        sep = is_two_separation(g, *outcome.separation.pair)
        return (
            sep is not None
            and t in sep.pair
            and outcome.shore <= xb
            and outcome.cut.shore in (outcome.shore, g.vertex_set - outcome.shore)
            and len(outcome.shore & sep.members) == 1
            and _is_side(sep, outcome.shore - sep.members)
        )
    members = outcome.barrier.members
    return len(members) >= 2 and (members <= x or members <= xb) and is_barrier(g, members) is not None
