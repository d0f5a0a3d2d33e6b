"""Tight cuts: the predicate, meet/join of crossing tight cuts, tight
contractions, and the tight cut decomposition into bricks and braces."""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

from . import elp
from .canon import CanonicalForm, canonical_form
from .errors import DomainError, InvariantError, NotMatchingCoveredError, NotTightError
from .graph import Contraction, Cut, Multigraph, boundary, contract, vertex_set
from .matching import Matching, can_extend, is_matching_covered, perfect_matching_with


class Kind(str, enum.Enum):
    BRICK = "brick"
    BRACE = "brace"
    DECOMPOSABLE = "decomposable"


def require_matching_covered(g: Multigraph) -> None:
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("graph is not matching covered")


def tightness_witness(g: Multigraph, c: Cut) -> Matching | None:
    """A perfect matching with two or more edges in ``c``, or None if ``c`` is tight.

    With an odd shore every perfect matching meets ``c`` an odd number of
    times, so it suffices to try every pair of disjoint cut edges.  Parallel
    edges are interchangeable here and only one per class is tried.
    """
    require_matching_covered(g)
    if len(c.shore) % 2 == 0:
        raise DomainError("tightness is only defined here for cuts with odd shores")
    reps: dict[tuple[int, int], int] = {}
    for e in sorted(c.edges):
        u, v = g.edges[e]
        reps.setdefault((min(u, v), max(u, v)), e)
    cut_edges = sorted(reps.items())
    for (p, e), (q, f) in combinations(cut_edges, 2):
        if set(p) & set(q):
            continue
        if can_extend(g, (e, f)):
            return perfect_matching_with(g, (e, f))
    return None


def is_tight(g: Multigraph, c: Cut) -> bool:
    return tightness_witness(g, c) is None


def require_tight(g: Multigraph, c: Cut) -> None:
    witness = tightness_witness(g, c)
    if witness is not None:
        pairs = witness.pairs(g)
        raise NotTightError(f"cut is not tight; perfect matching {pairs} uses several cut edges", witness, pairs)


def tight_contractions(g: Multigraph, c: Cut) -> tuple[Contraction, Contraction]:
    """Both ``c``-contractions: first ``G/shore``, then ``G/complement``."""
    require_tight(g, c)
    pair = (contract(g, c.shore), contract(g, c.complement))
    for con in pair:
        if not is_matching_covered(con.result):
            raise InvariantError(
                "contraction of a tight cut is not matching covered",
                {"shore": sorted(c.shore), "contracted": sorted(con.contracted)},
            )
    return pair


def cut_meet_join(
    g: Multigraph, x: Iterable[int], y: Iterable[int], check: bool = True
) -> tuple[Cut, Cut]:
    """``(∂(X∩Y), ∂(X∪Y))`` for tight cuts ``∂(X)``, ``∂(Y)`` with ``|X∩Y|`` odd.

    Both results are re-verified tight and the absence of edges between
    ``X - Y`` and ``Y - X`` is checked.
    """
    x, y = vertex_set(g, x), vertex_set(g, y)
    meet, join = x & y, x | y
    if len(meet) % 2 == 0:
        raise DomainError(f"|X ∩ Y| = {len(meet)} is even")
    if check:
        require_tight(g, boundary(g, x))
        require_tight(g, boundary(g, y))
    i_cut, u_cut = boundary(g, meet), boundary(g, join)
    if not (is_tight(g, i_cut) and is_tight(g, u_cut)):
        raise InvariantError("meet or join of tight cuts is not tight", {"X": sorted(x), "Y": sorted(y)})
    left, right = x - y, y - x
    for eid, (a, b) in enumerate(g.edges):
        if (a in left and b in right) or (a in right and b in left):
            raise InvariantError(
                "an edge joins X-Y to Y-X", {"X": sorted(x), "Y": sorted(y), "edge": eid}
            )
    return i_cut, u_cut


# -- decomposition -----------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    kind: Kind
    graph: Multigraph

    @property
    def signature(self) -> tuple[str, int, CanonicalForm]:
        return self.kind.value, self.graph.n, canonical_form(self.graph)


@dataclass(frozen=True)
class Node:
    graph: Multigraph
    cut: Cut
    children: tuple["Leaf | Node", "Leaf | Node"]
    contractions: tuple[Contraction, Contraction] = field(repr=False, compare=False)


@dataclass(frozen=True)
class DecompositionTree:
    root: Leaf | Node
    strategy: str

    def leaves(self) -> list[Leaf]:
        out: list[Leaf] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, Leaf):
                out.append(node)
            else:
                stack.extend(reversed(node.children))
        return out

    def internal_nodes(self) -> list[Node]:
        out: list[Node] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, Node):
                out.append(node)
                stack.extend(reversed(node.children))
        return out

    @property
    def brick_number(self) -> int:
        return sum(leaf.kind is Kind.BRICK for leaf in self.leaves())

    def leaf_signatures(self) -> Counter:
        return Counter(leaf.signature for leaf in self.leaves())


def _reverse_order(g: Multigraph) -> Multigraph:
    return g.relabel({v: g.n + 1 - v for v in g.vertices})


def _select_first(g: Multigraph) -> Cut | None:
    found = elp.find_nontrivial_elp_cut(g)
    return None if found is None else found.cut


def _select_largest(g: Multigraph) -> Cut | None:
    best = None
    best_size = -1
    for candidate in elp.nontrivial_elp_cuts(g):
        size = min(len(candidate.cut.shore), g.n - len(candidate.cut.shore))
        if size > best_size:
            best, best_size = candidate.cut, size
    return best


def _select_reversed(g: Multigraph) -> Cut | None:
    flipped = _reverse_order(g)
    found = elp.find_nontrivial_elp_cut(flipped)
    if found is None:
        return None
    return boundary(g, {g.n + 1 - v for v in found.cut.shore})


STRATEGIES = {
    "a": _select_first,
    "b": _select_largest,
    "c": _select_reversed,
}
STRATEGY_NAMES = {
    "a": "lexicographically first ELP cut",
    "b": "ELP cut with the largest smaller shore",
    "c": "first ELP cut in reversed vertex order",
}


def _leaf_kind(g: Multigraph) -> Kind:
    return Kind.BRACE if g.is_bipartite() else Kind.BRICK


def decompose(g: Multigraph, strategy: str = "a") -> DecompositionTree:
    """Tight cut decomposition using ELP cuts chosen by ``strategy`` (a, b or c)."""
    if strategy not in STRATEGIES:
        raise DomainError(f"unknown strategy {strategy!r}; choose from {sorted(STRATEGIES)}")
    require_matching_covered(g)
    select = STRATEGIES[strategy]

    def build(h: Multigraph, depth: int) -> Leaf | Node:
        if depth > g.n:
            raise InvariantError("decomposition deeper than the vertex count")
        cut = select(h)
        if cut is None:
            return Leaf(_leaf_kind(h), h)
        if cut.trivial:
            raise InvariantError("strategy returned a trivial cut", {"shore": sorted(cut.shore)})
        pair = tight_contractions(h, cut)
        children = tuple(build(con.result, depth + 1) for con in pair)
        return Node(h, cut, children, pair)

    return DecompositionTree(build(g, 0), strategy)


def classify(g: Multigraph) -> Kind:
    require_matching_covered(g)
    if elp.find_nontrivial_elp_cut(g) is not None:
        return Kind.DECOMPOSABLE
    return _leaf_kind(g)


def brick_number(g: Multigraph) -> int:
    return decompose(g).brick_number
