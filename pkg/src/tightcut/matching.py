"""Matching engine.

Maximum matchings come from Edmonds' blossom algorithm run on the simple
support of the graph.  Existence queries ("does ``g - S`` have a perfect
matching?") on graphs with at most ``TABLE_MAX_N`` vertices are answered from
a table over all vertex subsets, which turns the many small queries issued by
tightness and barrier searches into lookups.  Larger graphs go through the
blossom engine.

Most functions take an ``exclude`` argument: the vertices deleted from ``g``
before the query.  Results always use the vertex and edge ids of ``g``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import DomainError, InvariantError
from .graph import Multigraph, components, to_mask

TABLE_MAX_N = 20
DEFAULT_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class Matching:
    edges: tuple[int, ...]
    covered: frozenset[int]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @classmethod
    def from_edges(cls, g: Multigraph, edges: Iterable[int]) -> Matching:
        edges = tuple(sorted(edges))
        covered: set[int] = set()
        for e in edges:
            u, v = g.edges[e]
            if u in covered or v in covered:
                raise DomainError(f"edges {edges} do not form a matching")
            covered.update((u, v))
        return cls(edges, frozenset(covered))

    def pairs(self, g: Multigraph) -> list[tuple[int, int]]:
        return [g.edges[e] for e in self.edges]


@dataclass(frozen=True)
class DeficiencyWitness:
    d_set: frozenset[int]
    a_set: frozenset[int]
    deficiency: int


@dataclass(frozen=True)
class PerfectMatchings:
    """Result of a capped enumeration.  ``overflow`` is set if the cap was hit."""

    matchings: tuple[Matching, ...]
    overflow: bool

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self):
        return iter(self.matchings)

    def __getitem__(self, i):
        return self.matchings[i]


def _blossom(g: Multigraph, alive: frozenset[int]) -> list[int]:
    """Edmonds' cardinality matching on ``g[alive]``; returns ``mate`` (0 = exposed)."""
    n = g.n
    adj = [sorted(w for w in g.neighbors[v] if w in alive) if v in alive else [] for v in range(n + 1)]
    mate = [0] * (n + 1)
    for v in sorted(alive):
        if not mate[v]:
            for w in adj[v]:
                if not mate[w]:
                    mate[v], mate[w] = w, v
                    break

    def augment_from(root: int) -> bool:
        used = [False] * (n + 1)
        parent = [0] * (n + 1)
        base = list(range(n + 1))

        def lca(a: int, b: int) -> int:
            seen = [False] * (n + 1)
            while True:
                a = base[a]
                seen[a] = True
                if not mate[a]:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] and parent[mate[to]]):
                    cur = lca(v, to)
                    blossom = [False] * (n + 1)
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(1, n + 1):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif not parent[to]:
                    parent[to] = v
                    if not mate[to]:
                        # flip the alternating path ending at the exposed vertex
                        while to:
                            pv = parent[to]
                            nxt = mate[pv]
                            mate[to], mate[pv] = pv, to
                            to = nxt
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False

    for root in sorted(alive):
        if not mate[root]:
            augment_from(root)
    return mate


def _as_alive(g: Multigraph, exclude: Iterable[int]) -> frozenset[int]:
    gone = frozenset(exclude)
    if not gone:
        return g.vertex_set
    return g.vertex_set - gone


def maximum_matching(g: Multigraph, exclude: Iterable[int] = ()) -> Matching:
    """A maximum-cardinality matching of ``g - exclude``.

    Among parallel edges the one with the smallest id is used, which together
    with the ascending scan order makes the result deterministic.
    """
    alive = _as_alive(g, exclude)
    mate = _blossom(g, alive)
    chosen = []
    for (u, v), ids in g.simple_edges.items():
        if mate[u] == v:
            chosen.append(ids[0])
    covered = frozenset(v for v in alive if mate[v])
    return Matching(tuple(sorted(chosen)), covered)


def matching_number(g: Multigraph, exclude: Iterable[int] = ()) -> int:
    return len(maximum_matching(g, exclude))


@lru_cache(maxsize=4096)
def _pm_table(g: Multigraph) -> np.ndarray:
    adj = np.array(g.adj_masks, dtype=np.int64)
    return _kernels.pm_table(adj)


def has_perfect_matching(g: Multigraph, exclude: Iterable[int] = ()) -> bool:
    """Whether ``g - exclude`` has a perfect matching."""
    gone = frozenset(exclude)
    if (g.n - len(gone)) % 2:
        return False
    if g.n <= TABLE_MAX_N:
        return bool(_pm_table(g)[g.full_mask & ~to_mask(gone)])
    alive = _as_alive(g, gone)
    return len(maximum_matching(g, gone)) * 2 == len(alive)


def has_perfect_matching_blossom(g: Multigraph, exclude: Iterable[int] = ()) -> bool:
    """Same as :func:`has_perfect_matching` but always through the blossom engine."""
    alive = _as_alive(g, exclude)
    return len(maximum_matching(g, exclude)) * 2 == len(alive)


def _check_forced(g: Multigraph, forced: Iterable[int]) -> tuple[tuple[int, ...], frozenset[int]]:
    forced = tuple(sorted(set(forced)))
    ends: set[int] = set()
    for e in forced:
        if not 0 <= e < g.m:
            raise DomainError(f"edge id {e} out of range")
        u, v = g.edges[e]
        if u in ends or v in ends:
            raise DomainError(f"forced edges {list(forced)} share an endpoint")
        ends.update((u, v))
    return forced, frozenset(ends)


def perfect_matching_with(
    g: Multigraph, forced: Iterable[int], exclude: Iterable[int] = ()
) -> Matching | None:
    """A perfect matching of ``g - exclude`` containing every forced edge, or None."""
    forced, ends = _check_forced(g, forced)
    gone = frozenset(exclude)
    if ends & gone:
        return None
    rest = gone | ends
    if not has_perfect_matching(g, rest):
        return None
    m = maximum_matching(g, rest)
    return Matching.from_edges(g, m.edges + forced)


def can_extend(g: Multigraph, forced: Iterable[int], exclude: Iterable[int] = ()) -> bool:
    """Existence-only version of :func:`perfect_matching_with`."""
    forced, ends = _check_forced(g, forced)
    gone = frozenset(exclude)
    return not (ends & gone) and has_perfect_matching(g, gone | ends)


@lru_cache(maxsize=4096)
def is_matching_covered(g: Multigraph) -> bool:
    """Connected, at least one edge, and every edge lies in a perfect matching.

    One representative per parallel class is tested; parallels share the verdict.
    """
    if g.m == 0 or g.n % 2 or not g.is_connected():
        return False
    return all(has_perfect_matching(g, pair) for pair in g.simple_edges)


def enumerate_perfect_matchings(
    g: Multigraph, cap: int = DEFAULT_ENUMERATION_CAP, exclude: Iterable[int] = ()
) -> PerfectMatchings:
    """All perfect matchings of ``g - exclude`` by backtracking.

    The lowest uncovered vertex is matched first, trying its edges in id
    order; enumeration stops after ``cap`` matchings and sets ``overflow``.
    """
    if cap < 1:
        raise DomainError("cap must be at least 1")
    alive = _as_alive(g, exclude)
    if len(alive) % 2:
        return PerfectMatchings((), False)
    order = sorted(alive)
    covered = {v: False for v in order}
    chosen: list[int] = []
    found: list[Matching] = []
    overflow = False

    def rec() -> bool:
        nonlocal overflow
        v = next((x for x in order if not covered[x]), None)
        if v is None:
            if len(found) >= cap:
                overflow = True
                return False
            found.append(Matching(tuple(sorted(chosen)), alive))
            return True
        covered[v] = True
        for e in g.incident[v]:
            w = g.other_end(e, v)
            if w in covered and not covered[w]:
                covered[w] = True
                chosen.append(e)
                keep_going = rec()
                chosen.pop()
                covered[w] = False
                if not keep_going:
                    covered[v] = False
                    return False
        covered[v] = False
        return True

    rec()
    return PerfectMatchings(tuple(found), overflow)


def deficiency_witness(g: Multigraph, exclude: Iterable[int] = ()) -> DeficiencyWitness:
    """Gallai–Edmonds style Tutte witness for ``g - exclude``.

    ``d_set`` holds the vertices missed by some maximum matching, ``a_set``
    their neighbours outside ``d_set``; removing ``a_set`` leaves exactly
    ``deficiency + |a_set|`` odd components.
    """
    gone = frozenset(exclude)
    alive = _as_alive(g, gone)
    nu = matching_number(g, gone)
    d_set = frozenset(v for v in alive if matching_number(g, gone | {v}) == nu)
    a_set = frozenset(w for v in d_set for w in g.neighbors[v] if w in alive and w not in d_set)
    _, odd = components(g, gone | a_set)
    deficiency = odd - len(a_set)
    expected = len(alive) - 2 * nu
    if deficiency != expected:
        raise InvariantError(
            "Gallai-Edmonds witness does not attain the deficiency",
            {"d_set": sorted(d_set), "a_set": sorted(a_set), "odd": odd, "expected": expected},
        )
    return DeficiencyWitness(d_set, a_set, deficiency)


def is_bicritical(g: Multigraph) -> bool:
    return all(has_perfect_matching(g, pair) for pair in combinations(g.vertices, 2))
