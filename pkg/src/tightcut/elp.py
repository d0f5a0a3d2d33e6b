"""Barriers, 2-separations and the ELP cuts they induce."""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import tightcuts
from .errors import DomainError, InvariantError
from .graph import Cut, Multigraph, boundary, components, is_independent, laminar, vertex_set
from .matching import deficiency_witness, has_perfect_matching


@dataclass(frozen=True)
class Barrier:
    members: frozenset[int]
    components: tuple[frozenset[int], ...]

    @property
    def nontrivial(self) -> bool:
        return len(self.members) >= 2

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class TwoSeparation:
    pair: tuple[int, int]
    components: tuple[frozenset[int], ...]

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.pair)


Structure = Barrier | TwoSeparation


@dataclass(frozen=True)
class BarrierCut:
    barrier: Barrier
    index: int
    cut: Cut

    @property
    def nontrivial(self) -> bool:
        return not self.cut.trivial


@dataclass(frozen=True)
class SeparationCut:
    separation: TwoSeparation
    side: frozenset[int]
    cut: Cut

    @property
    def nontrivial(self) -> bool:
        return not self.cut.trivial


ElpCut = BarrierCut | SeparationCut


def is_barrier(g: Multigraph, s: Iterable[int]) -> Barrier | None:
    s = vertex_set(g, s)
    if not s:
        raise DomainError("a barrier must be nonempty")
    parts, odd = components(g, s)
    if odd != len(s):
        return None
    if odd != len(parts) or not is_independent(g, s):
        # impossible in a matching covered graph
        raise InvariantError(
            "barrier with an even component or an internal edge",
            {"members": sorted(s), "components": [sorted(p) for p in parts]},
        )
    return Barrier(s, tuple(parts))


def is_two_separation(g: Multigraph, u: int, v: int) -> TwoSeparation | None:
    if u == v:
        raise DomainError("a 2-separation needs two distinct vertices")
    vertex_set(g, (u, v))
    parts, odd = components(g, (u, v))
    if len(parts) < 2 or odd:
        return None
    return TwoSeparation((min(u, v), max(u, v)), tuple(parts))


@lru_cache(maxsize=4096)
def _two_separations(g: Multigraph) -> tuple[TwoSeparation, ...]:
    out = []
    for u, v in combinations(g.vertices, 2):
        sep = is_two_separation(g, u, v)
        if sep is not None:
            out.append(sep)
    return tuple(out)


def find_two_separations(g: Multigraph) -> list[TwoSeparation]:
    """All 2-separations, pairs in lexicographic order."""
    return list(_two_separations(g))


def barrier_from_pair(g: Multigraph, u: int, v: int) -> Barrier | None:
    """If ``g - {u, v}`` has no perfect matching, the barrier ``A(g-u-v) + u + v``."""
    if has_perfect_matching(g, (u, v)):
        return None
    witness = deficiency_witness(g, (u, v))
    members = witness.a_set | {u, v}
    barrier = is_barrier(g, members)
    if barrier is None:
        raise InvariantError(
            "Tutte witness of a failing pair is not a barrier",
            {"pair": [u, v], "a_set": sorted(witness.a_set)},
        )
    return barrier


@lru_cache(maxsize=4096)
def _pair_barriers(g: Multigraph) -> tuple[Barrier, ...]:
    return tuple(
        b for b in (barrier_from_pair(g, u, v) for u, v in combinations(g.vertices, 2)) if b is not None
    )


def pair_barriers(g: Multigraph) -> list[Barrier]:
    """Barriers built from every failing pair, in lexicographic pair order."""
    return list(_pair_barriers(g))


def find_nontrivial_barrier(g: Multigraph) -> Barrier | None:
    """First barrier from a failing pair; None exactly when ``g`` is bicritical."""
    for u, v in combinations(g.vertices, 2):
        b = barrier_from_pair(g, u, v)
        if b is not None:
            return b
    return None


def vertex_barrier(g: Multigraph, u: int) -> Barrier:
    """The barrier ``A(g-u) + u``.

    In a graph with a perfect matching this is a maximal barrier, so when
    ``g`` is neither bipartite nor bicritical some such barrier has a
    component with three or more vertices.
    """
    witness = deficiency_witness(g, (u,))
    b = is_barrier(g, witness.a_set | {u})
    if b is None:
        raise InvariantError("A(g-u) + u is not a barrier", {"u": u, "a_set": sorted(witness.a_set)})
    return b


def hall_barriers(g: Multigraph) -> Iterator[Barrier]:
    """Barriers ``N(T)`` of a bipartite graph with ``|N(T)| = |T| + 1``.

    ``T`` is read off the deficient side of ``g - {a1, a2, b1, b2}`` whenever
    that graph has no perfect matching (``a1, a2`` and ``b1, b2`` taken from
    opposite colour classes).  Every component of ``g - N(T)`` outside ``T``
    then has at least three vertices.
    """
    sides = g.bipartition
    if sides is None or g.n < 6:
        return
    left, right = sorted(sides, key=min)
    for a_pair in combinations(sorted(left), 2):
        for b_pair in combinations(sorted(right), 2):
            gone = a_pair + b_pair
            if has_perfect_matching(g, gone):
                continue
            t = deficiency_witness(g, gone).d_set & left
            members = frozenset().union(*(g.neighbors[v] for v in t))
            b = is_barrier(g, members) if members else None
            if b is None or len(members) != len(t) + 1:
                raise InvariantError("Hall violator did not give a barrier", {"removed": list(gone), "t": sorted(t)})
            yield b


def _barrier_elp_cuts(g: Multigraph) -> Iterator[BarrierCut]:
    """Nontrivial barrier cuts: pair barriers first, then vertex barriers,
    then (bipartite graphs) Hall barriers.  Lazy, so later stages only run
    when earlier ones found nothing."""
    done: set[frozenset[int]] = set()

    def cuts_of(b: Barrier) -> Iterator[BarrierCut]:
        if b.members in done or not b.nontrivial:
            return
        done.add(b.members)
        for i, part in enumerate(b.components):
            if len(part) >= 3:
                yield BarrierCut(b, i, boundary(g, part))

    for b in _pair_barriers(g):
        yield from cuts_of(b)
    for u in g.vertices:
        yield from cuts_of(vertex_barrier(g, u))
    for b in hall_barriers(g):
        yield from cuts_of(b)


def barrier_cuts(g: Multigraph, b: Barrier) -> list[Cut]:
    cuts = []
    for part in b.components:
        if len(part) == g.n:
            continue
        cut = boundary(g, part)
        if not tightcuts.is_tight(g, cut):
            raise InvariantError("barrier cut is not tight", {"barrier": sorted(b.members), "component": sorted(part)})
        cuts.append(cut)
    return cuts


def _check_side(sep: TwoSeparation, side: frozenset[int]) -> None:
    chosen = [p for p in sep.components if p <= side]
    if not side or sum(len(p) for p in chosen) != len(side) or len(chosen) == len(sep.components):
        raise DomainError("side must be a nonempty union of some, but not all, components")


def separation_cut_pair(g: Multigraph, sep: TwoSeparation, side: Iterable[int]) -> tuple[Cut, Cut]:
    side = vertex_set(g, side)
    _check_side(sep, side)
    u, v = sep.pair
    cuts = (boundary(g, side | {u}), boundary(g, side | {v}))
    for cut in cuts:
        if not tightcuts.is_tight(g, cut):
            raise InvariantError("2-separation cut is not tight", {"pair": list(sep.pair), "side": sorted(side)})
    return cuts


def separation_sides(sep: TwoSeparation) -> Iterator[frozenset[int]]:
    """Every nonempty proper union of components, in a fixed order."""
    k = len(sep.components)
    for bits in range(1, (1 << k) - 1):
        yield frozenset().union(*(sep.components[i] for i in range(k) if bits >> i & 1))


def associated_cuts(g: Multigraph, s: Structure) -> list[Cut]:
    """All ELP cuts associated with a barrier or a 2-separation."""
    if isinstance(s, Barrier):
        return [boundary(g, p) for p in s.components if len(p) < g.n]
    out: list[Cut] = []
    seen: set[frozenset[int]] = set()
    for side in separation_sides(s):
        for w in s.pair:
            cut = boundary(g, side | {w})
            if cut.shore not in seen:
                seen.add(cut.shore)
                out.append(cut)
    return out


def nontrivial_elp_cuts(g: Multigraph) -> Iterator[ElpCut]:
    """Nontrivial ELP cuts reachable by the module's searches, in search order:
    2-separation cuts first, then barrier cuts."""
    for sep in find_two_separations(g):
        for side in separation_sides(sep):
            yield SeparationCut(sep, side, boundary(g, side | {sep.pair[0]}))
    yield from _barrier_elp_cuts(g)


def find_nontrivial_elp_cut(g: Multigraph) -> ElpCut | None:
    tightcuts.require_matching_covered(g)
    for sep in find_two_separations(g):
        side = sep.components[0]
        cut = boundary(g, side | {sep.pair[0]})
        return SeparationCut(sep, side, cut)
    return next(_barrier_elp_cuts(g), None)


class Shelter(str, enum.Enum):
    SHELTERED = "sheltered"
    AVOIDING = "avoiding"
    CROSSING = "crossing"


@dataclass(frozen=True)
class ShelterStatus:
    status: Shelter
    witness: Cut | None = None


def _revalidate(g: Multigraph, s: Structure) -> Structure:
    if isinstance(s, Barrier):
        checked = is_barrier(g, s.members)
    else:
        checked = is_two_separation(g, *s.pair)
    if checked is None:
        raise DomainError(f"{sorted(s.members)} is not a valid {type(s).__name__}")
    return checked


def is_sheltered(c: Cut, members: Iterable[int]) -> bool:
    members = frozenset(members)
    return members <= c.shore or members <= c.complement


def shelter_status(g: Multigraph, c: Cut, s: Structure) -> ShelterStatus:
    s = _revalidate(g, s)
    if is_sheltered(c, s.members):
        return ShelterStatus(Shelter.SHELTERED)
    for cut in associated_cuts(g, s):
        if not laminar(cut, c):
            return ShelterStatus(Shelter.CROSSING, cut)
    return ShelterStatus(Shelter.AVOIDING)
