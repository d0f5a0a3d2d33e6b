"""Canonical labelling of simple graphs by individualisation-refinement.

Used to compare bricks and braces from different decompositions "up to
multiple edges": the form is computed on the simple support.  Branching skips
vertices that are twins of an already-explored vertex of the same cell, since
swapping twins is an automorphism; this keeps complete and complete bipartite
graphs linear instead of factorial.
"""

from __future__ import annotations

from .graph import Multigraph

CanonicalForm = tuple[int, tuple[tuple[int, int], ...]]


def _refine(adj: list[frozenset[int]], colours: list[int]) -> list[int]:
    n = len(adj)
    while True:
        keys = [(colours[v], tuple(sorted(colours[w] for w in adj[v]))) for v in range(n)]
        ranking = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranking[k] for k in keys]
        if len(ranking) == len(set(colours)):
            return new
        colours = new


def _twins(adj: list[frozenset[int]], u: int, w: int) -> bool:
    return adj[u] - {w} == adj[w] - {u}


def canonical_form(g: Multigraph) -> CanonicalForm:
    """Return ``(n, sorted edge list)`` under a canonical relabelling."""
    n = g.n
    adj = [frozenset(w - 1 for w in g.neighbors[v]) for v in g.vertices]
    best: list[tuple[tuple[int, int], ...] | None] = [None]

    def search(colours: list[int]) -> None:
        colours = _refine(adj, colours)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colours):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            cert = tuple(sorted(
                (min(colours[v], colours[w]), max(colours[v], colours[w]))
                for v in range(n) for w in adj[v] if v < w
            ))
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        target = min(c for c, members in cells.items() if len(members) > 1)
        explored: list[int] = []
        for v in cells[target]:
            if any(_twins(adj, v, u) for u in explored):
                continue
            explored.append(v)
            keys = [(colours[u], 0 if u == v else 1) for u in range(n)]
            ranking = {k: i for i, k in enumerate(sorted(set(keys)))}
            search([ranking[k] for k in keys])

    search([0] * n)
    return n, tuple((a + 1, b + 1) for a, b in best[0])


def isomorphic(g: Multigraph, h: Multigraph) -> bool:
    """Isomorphism of the simple supports."""
    return g.n == h.n and len(g.simple_edges) == len(h.simple_edges) and canonical_form(g) == canonical_form(h)
