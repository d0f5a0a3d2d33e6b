"""Loop-free undirected multigraphs and the cut algebra over them.

Vertices are the integers ``1..n``.  Edges are identified by their position
in :attr:`Multigraph.edges`, so parallel edges stay distinguishable.  Vertex
sets are plain ``frozenset`` objects.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DomainError, GraphFormatError

VertexSet = frozenset


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError(f"vertex count must be positive, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for eid, (u, v) in enumerate(edges):
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphFormatError(f"edge {eid} ({u}, {v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise GraphFormatError(f"edge {eid} is a loop at vertex {u}")
        object.__setattr__(self, "edges", edges)

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """``incident[v]`` lists edge ids at ``v`` in ascending order (index 0 unused)."""
        inc: list[list[int]] = [[] for _ in range(self.n + 1)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks; bit ``v-1`` stands for vertex ``v``."""
        return tuple(sum(1 << (w - 1) for w in self.neighbors[v]) for v in self.vertices)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def simple_edges(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map each adjacent pair ``(u, v)``, ``u < v``, to its parallel edge ids."""
        classes: dict[tuple[int, int], list[int]] = {}
        for eid, (u, v) in enumerate(self.edges):
            classes.setdefault((min(u, v), max(u, v)), []).append(eid)
        return {k: tuple(classes[k]) for k in sorted(classes)}

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def support(self) -> Multigraph:
        """The underlying simple graph (one edge per adjacent pair)."""
        return Multigraph(self.n, tuple(self.simple_edges))

    def is_simple(self) -> bool:
        return len(self.simple_edges) == self.m

    @cached_property
    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """A 2-colouring of the graph, or ``None`` if it is not bipartite."""
        colour = [-1] * (self.n + 1)
        for s in self.vertices:
            if colour[s] >= 0:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self.neighbors[v]:
                    if colour[w] < 0:
                        colour[w] = 1 - colour[v]
                        stack.append(w)
                    elif colour[w] == colour[v]:
                        return None
        return (
            frozenset(v for v in self.vertices if colour[v] == 0),
            frozenset(v for v in self.vertices if colour[v] == 1),
        )

    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    def is_connected(self) -> bool:
        return len(components(self)[0]) == 1

    def relabel(self, mapping) -> Multigraph:
        """Apply a vertex permutation ``mapping[v]``; edge ids are preserved."""
        return Multigraph(self.n, tuple((mapping[u], mapping[v]) for u, v in self.edges))


def vertex_set(g: Multigraph, members: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(v) for v in members)
    bad = [v for v in s if not 1 <= v <= g.n]
    if bad:
        raise DomainError(f"vertices {sorted(bad)} are not in 1..{g.n}")
    return s


def to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class Cut:
    """A cut ``∂(shore)``; ``shore`` is canonical (it contains vertex 1)."""

    shore: frozenset[int]
    edges: frozenset[int] = field(compare=False)
    graph: Multigraph = field(compare=False, repr=False)

    @property
    def complement(self) -> frozenset[int]:
        return self.graph.vertex_set - self.shore

    @property
    def shores(self) -> tuple[frozenset[int], frozenset[int]]:
        return self.shore, self.complement

    @property
    def trivial(self) -> bool:
        return len(self.shore) == 1 or len(self.shore) == self.graph.n - 1

    def other_shore(self, side: frozenset[int]) -> frozenset[int]:
        if side == self.shore:
            return self.complement
        if side == self.complement:
            return self.shore
        raise DomainError("set is not a shore of this cut")

    def shore_containing(self, v: int) -> frozenset[int]:
        return self.shore if v in self.shore else self.complement

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [self.graph.edges[e] for e in sorted(self.edges)]


def boundary(g: Multigraph, s: Iterable[int]) -> Cut:
    """Return the cut ``∂(s)``."""
    s = vertex_set(g, s)
    if not s or len(s) == g.n:
        raise DomainError("a shore must be a nonempty proper subset of the vertices")
    edges = frozenset(eid for eid, (u, v) in enumerate(g.edges) if (u in s) != (v in s))
    shore = s if 1 in s else g.vertex_set - s
    return Cut(shore, edges, g)


def components(
    g: Multigraph, removed: Iterable[int] = ()
) -> tuple[list[frozenset[int]], int]:
    """Connected components of ``g - removed`` and the number of odd ones.

    Components are listed in order of their smallest vertex.
    """
    gone = set(removed)
    seen = set(gone)
    parts: list[frozenset[int]] = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        parts.append(frozenset(comp))
    return parts, sum(len(p) % 2 for p in parts)


def induces_connected(g: Multigraph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not s:
        return False
    parts, _ = components(g, g.vertex_set - s)
    return len(parts) == 1


def is_independent(g: Multigraph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return not any(u in s and v in s for u, v in g.edges)


@dataclass(frozen=True)
class Contraction:
    """The graph obtained by shrinking a vertex set to one vertex.

    Surviving vertices are relabelled ``1..n'`` in ascending order and the
    contracted vertex gets label ``n'``.  Edges keep their relative order.
    """

    source: Multigraph = field(repr=False)
    result: Multigraph
    contracted: frozenset[int]
    contracted_label: int
    origin_of: dict[int, frozenset[int]] = field(repr=False)
    image_of: dict[int, int] = field(repr=False)
    edge_map: tuple[int, ...] = field(repr=False)

    def lift(self, vs: Iterable[int]) -> frozenset[int]:
        """Union of the original vertices represented by ``vs``."""
        out: set[int] = set()
        for v in vs:
            out |= self.origin_of[v]
        return frozenset(out)

    def lift_vertex(self, v: int) -> int:
        if v == self.contracted_label:
            raise DomainError("the contracted vertex has no single origin")
        (orig,) = self.origin_of[v]
        return orig

    def project(self, vs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.image_of[v] for v in vs)


def contract(g: Multigraph, s: Iterable[int]) -> Contraction:
    s = vertex_set(g, s)
    if not s or len(s) == g.n:
        raise DomainError("can only contract a nonempty proper subset")
    kept = [v for v in g.vertices if v not in s]
    label = len(kept) + 1
    image_of = {v: i for i, v in enumerate(kept, start=1)}
    for v in s:
        image_of[v] = label
    origin_of = {i: frozenset((v,)) for v, i in image_of.items() if v not in s}
    origin_of[label] = s
    new_edges = []
    edge_map = []
    for eid, (u, v) in enumerate(g.edges):
        if u in s and v in s:
            continue
        new_edges.append((image_of[u], image_of[v]))
        edge_map.append(eid)
    result = Multigraph(label, tuple(new_edges))
    return Contraction(g, result, s, label, origin_of, image_of, tuple(edge_map))


def quadrants(c: Cut, d: Cut) -> tuple[frozenset[int], ...]:
    x, xb = c.shores
    y, yb = d.shores
    return (x & y, x & yb, xb & y, xb & yb)


def laminar(c: Cut, d: Cut) -> bool:
    """True unless all four quadrants of ``c`` and ``d`` are nonempty."""
    if c.graph is not d.graph and c.graph != d.graph:
        raise DomainError("cuts belong to different graphs")
    return not all(quadrants(c, d))


def crosses(c: Cut, d: Cut) -> bool:
    return not laminar(c, d)
