"""Exhaustive ground truth for small graphs.

Nothing here reuses the pairwise tightness test or the pair-based barrier
searches: tight cuts come from full perfect-matching enumeration, barriers
and 2-separations from scanning every vertex subset.  Both scans run through
the vectorised kernels in :mod:`tightcut._kernels`.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import _kernels, elp, laminar, tightcuts
from .elp import Barrier, TwoSeparation
from .errors import DomainError, TightcutError
from .graph import Cut, Multigraph, boundary, components, from_mask, induces_connected, is_independent, to_mask
from .matching import enumerate_perfect_matchings, is_matching_covered
from .serialize import cut_to_json, structure_to_json

DEFAULT_MAX_N = 14
ENUMERATION_CAP = 2_000_000


def max_n() -> int:
    return int(os.environ.get("TIGHTCUT_MAX_N", DEFAULT_MAX_N))


def _check_size(g: Multigraph, bound: int | None) -> None:
    bound = max_n() if bound is None else bound
    if g.n > bound:
        raise DomainError(f"graph has {g.n} vertices; oracle bound is {bound}")


def _adj(g: Multigraph) -> np.ndarray:
    return np.array(g.adj_masks, dtype=np.int64)


def _popcount(a: np.ndarray) -> np.ndarray:
    out = np.zeros(a.shape, dtype=np.int64)
    a = a.copy()
    while a.any():
        out += a & 1
        a >>= 1
    return out


@lru_cache(maxsize=256)
def matching_array(g: Multigraph) -> np.ndarray:
    """Perfect matchings of the simple support as a read-only ``(P, n/2, 2)`` 0-based array."""
    s = g.support()
    pms = enumerate_perfect_matchings(s, cap=ENUMERATION_CAP)
    if pms.overflow:
        raise DomainError("too many perfect matchings for the oracle")
    arr = np.zeros((len(pms), g.n // 2, 2), dtype=np.int64)
    for i, m in enumerate(pms):
        for j, (u, v) in enumerate(m.pairs(s)):
            arr[i, j] = (u - 1, v - 1)
    arr.flags.writeable = False
    return arr


def odd_shores(n: int) -> np.ndarray:
    """Masks of every odd proper vertex set containing vertex 1."""
    masks = np.arange(1 << (n - 1), dtype=np.int64) * 2 + 1
    masks = masks[masks != (1 << n) - 1]
    return masks[_popcount(masks) % 2 == 1]


def all_tight_cuts(g: Multigraph, bound: int | None = None) -> list[Cut]:
    """Every tight cut, trivial ones included, in shore-mask order."""
    if not is_matching_covered(g):
        raise DomainError("graph is not matching covered")
    _check_size(g, bound)
    shores = odd_shores(g.n)
    ok = _kernels.tight_shores(matching_array(g), shores)
    return [boundary(g, from_mask(int(m))) for m in shores[ok]]


def nontrivial_tight_cuts(g: Multigraph, bound: int | None = None) -> list[Cut]:
    return [c for c in all_tight_cuts(g, bound) if not c.trivial]


def tight_by_enumeration(g: Multigraph, shore) -> bool:
    """Tightness of ``∂(shore)`` against the full list of perfect matchings."""
    return bool(_kernels.tight_shores(matching_array(g), np.array([to_mask(shore)], dtype=np.int64))[0])


def _subset_masks(n: int, max_size: int) -> list[int]:
    return [sum(1 << (v - 1) for v in combo) for k in range(1, max_size + 1) for combo in combinations(range(1, n + 1), k)]


def all_barriers(g: Multigraph, max_size: int, bound: int | None = None) -> list[Barrier]:
    """Every set ``S`` with ``|S| <= max_size`` and ``o(G-S) = |S|``, by size then lexicographically."""
    _check_size(g, bound)
    if max_size < 1:
        return []
    masks = np.array(_subset_masks(g.n, min(max_size, g.n)), dtype=np.int64)
    _, odd = _kernels.component_counts(_adj(g), masks)
    sizes = _popcount(masks)
    out = []
    for m in masks[odd == sizes]:
        s = from_mask(int(m))
        out.append(Barrier(s, tuple(components(g, s)[0])))
    return out


def all_two_separations(g: Multigraph) -> list[TwoSeparation]:
    pairs = list(combinations(g.vertices, 2))
    if not pairs:
        return []
    masks = np.array([(1 << (u - 1)) | (1 << (v - 1)) for u, v in pairs], dtype=np.int64)
    comps, odd = _kernels.component_counts(_adj(g), masks)
    out = []
    for (u, v), k, o in zip(pairs, comps, odd):
        if k >= 2 and o == 0:
            out.append(TwoSeparation((u, v), tuple(components(g, (u, v))[0])))
    return out


def _sheltered_barriers(g: Multigraph, c: Cut):
    for shore in c.shores:
        members = sorted(shore)
        for k in range(2, len(members) + 1):
            for combo in combinations(members, k):
                parts, odd = components(g, combo)
                if odd == k:
                    yield Barrier(frozenset(combo), tuple(parts))


def exhaustive_laminar(g: Multigraph, c: Cut) -> laminar.LaminarResult | None:
    """First sheltered nontrivial barrier, else first laminar 2-separation cut."""
    for b in _sheltered_barriers(g, c):
        shore = c.shore if b.members <= c.shore else c.complement
        return laminar.ShelteredBarrier(b, shore)
    for sep in all_two_separations(g):
        for cut in elp.associated_cuts(g, sep):
            if not cut.trivial and laminar_with(cut, c):
                return laminar.LaminarSeparation(sep, cut)
    return None


def laminar_with(d: Cut, c: Cut) -> bool:
    return any(a <= b for a in d.shores for b in c.shores)


def laminar_elp_cut_exists(g: Multigraph, c: Cut) -> Cut | None:
    """Some nontrivial ELP cut laminar with ``c``, found by scanning all subsets."""
    for b in all_barriers(g, g.n):
        for part in b.components:
            d = boundary(g, part)
            if not d.trivial and laminar_with(d, c):
                return d
    for sep in all_two_separations(g):
        for d in elp.associated_cuts(g, sep):
            if not d.trivial and laminar_with(d, c):
                return d
    return None


# -- whole-graph verification -----------------------------------------------


@dataclass
class VerificationReport:
    graph_id: str
    matching_covered: bool
    nontrivial_tight_cuts: int = 0
    checks: list[tuple[str, bool, object]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list[tuple[str, bool, object]]:
        return [c for c in self.checks if not c[1]]

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "matching_covered": self.matching_covered,
            "nontrivial_tight_cuts": self.nontrivial_tight_cuts,
            "checks": [{"name": n, "passed": ok, "witness": w} for n, ok, w in self.checks],
            "elapsed": round(self.elapsed, 6),
            "passed": self.passed,
        }


def check_laminar(g: Multigraph, c: Cut) -> tuple[bool, object]:
    """Main-theorem and conjecture-form checks for one nontrivial tight cut."""
    try:
        r = laminar.find_laminar_elp(g, c, fallback=False)
    except TightcutError as exc:
        return False, {"cut": cut_to_json(c), "error": str(exc)}
    cert = laminar.certify(g, c, r)
    if not cert.ok:
        return False, {"cut": cut_to_json(c), "certificate": cert.detail}
    d = laminar.conjecture_cut(g, c, r).cut
    if d.trivial or not laminar_with(d, c) or not tight_by_enumeration(g, d.shore):
        return False, {"cut": cut_to_json(c), "derived": cut_to_json(d)}
    return True, None


def verify_graph(g: Multigraph, graph_id: str = "", bound: int | None = None) -> VerificationReport:
    start = time.perf_counter()
    if not is_matching_covered(g):
        return VerificationReport(graph_id, False, elapsed=time.perf_counter() - start)
    _check_size(g, bound)
    report = VerificationReport(graph_id, True)
    add = report.checks.append
    tight = all_tight_cuts(g, bound)
    nontrivial = [c for c in tight if not c.trivial]
    report.nontrivial_tight_cuts = len(nontrivial)

    for c in nontrivial:
        ok, witness = check_laminar(g, c)
        add((f"laminar:{sorted(c.shore)}", ok, witness))
        exists = laminar_elp_cut_exists(g, c)
        add((f"laminar-exists:{sorted(c.shore)}", exists is not None, None if exists else cut_to_json(c)))

    found = elp.find_nontrivial_elp_cut(g)
    if nontrivial:
        ok = found is not None and not found.cut.trivial and tight_by_enumeration(g, found.cut.shore)
        add(("elp-theorem", ok, None if ok else {"tight_cut": cut_to_json(nontrivial[0])}))
    else:
        add(("elp-theorem", found is None, None if found is None else cut_to_json(found.cut)))

    trees = {s: tightcuts.decompose(g, s) for s in tightcuts.STRATEGIES}
    sigs = {s: t.leaf_signatures() for s, t in trees.items()}
    bricks = {s: t.brick_number for s, t in trees.items()}
    same = len({frozenset(v.items()) for v in sigs.values()}) == 1 and len(set(bricks.values())) == 1
    add(("decomposition-invariance", same, None if same else {"brick_numbers": bricks}))

    bad = [
        structure_to_json(b)
        for b in all_barriers(g, g.n)
        if not is_independent(g, b.members) or any(len(p) % 2 == 0 for p in b.components)
    ]
    add(("barrier-structure", not bad, bad[0] if bad else None))

    shores = {c.shore for c in tight}
    meet_bad = None
    for c, d in combinations(nontrivial, 2):
        for x in c.shores:
            for y in d.shores:
                if len(x & y) % 2 == 0 or not (x - y) or not (y - x) or len(x | y) == g.n:
                    continue
                meet, join = x & y, x | y
                canon = lambda s: s if 1 in s else g.vertex_set - s  # noqa: E731
                edge = any((a in x - y and b in y - x) or (a in y - x and b in x - y) for a, b in g.edges)
                if canon(meet) not in shores or canon(join) not in shores or edge:
                    meet_bad = {"x": sorted(x), "y": sorted(y)}
    add(("meet-join", meet_bad is None, meet_bad))

    disconnected = next((c for c in tight for s in c.shores if not induces_connected(g, s)), None)
    add(("connected-shores", disconnected is None, None if disconnected is None else cut_to_json(disconnected)))

    cut_vertex = next((v for v in g.vertices if g.n > 2 and len(components(g, (v,))[0]) > 1), None)
    add(("two-connected", cut_vertex is None, None if cut_vertex is None else {"cut_vertex": cut_vertex}))

    report.elapsed = time.perf_counter() - start
    return report
