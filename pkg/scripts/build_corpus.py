"""Regenerate the bundled graph corpus (src/tightcut/data/connected.g6).

Contents:
  * every connected graph on 2, 4, 6 and 8 vertices, up to isomorphism;
  * a seeded sample of connected 10-vertex graphs, biased towards matching
    covered graphs with nontrivial tight cuts.

Graphs on up to 7 vertices come from the networkx graph atlas.  The 8-vertex
graphs are every 7-vertex atlas graph plus one new vertex joined to every
nonempty neighbour set, deduplicated by canonical form; the count is checked
against the known total of 11117.

Usage: python3 scripts/build_corpus.py [--seed N] [--sample N]
"""

from __future__ import annotations

import argparse
import random
from itertools import combinations
from pathlib import Path

import networkx as nx

from tightcut.canon import canonical_form
from tightcut.formats import to_graph6
from tightcut.graph import Multigraph
from tightcut.matching import is_matching_covered
from tightcut.oracle import nontrivial_tight_cuts

CONNECTED_8 = 11117
OUT = Path(__file__).resolve().parents[1] / "src" / "tightcut" / "data" / "connected.g6"


def from_nx(h: nx.Graph) -> Multigraph:
    index = {v: i for i, v in enumerate(sorted(h.nodes), start=1)}
    return Multigraph(len(index), tuple(sorted((index[u], index[v]) for u, v in h.edges)))


def canonical(g: Multigraph) -> Multigraph:
    n, edges = canonical_form(g)
    return Multigraph(n, edges)


def atlas(n: int) -> list[Multigraph]:
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]


def connected_on_8() -> list[Multigraph]:
    seen: dict = {}
    for base in atlas(7):
        for k in range(1, 8):
            for nbrs in combinations(range(1, 8), k):
                g = Multigraph(8, base.edges + tuple((v, 8) for v in nbrs))
                if g.is_connected():
                    seen.setdefault(canonical_form(g), g)
    if len(seen) != CONNECTED_8:
        raise SystemExit(f"expected {CONNECTED_8} connected graphs on 8 vertices, got {len(seen)}")
    return [canonical(g) for g in seen.values()]


def random_ten(rng: random.Random) -> Multigraph:
    n = 10
    style = rng.random()
    edges: set[tuple[int, int]] = set()
    if style < 0.6:
        order = list(range(1, n + 1))
        rng.shuffle(order)
        for i in range(n):
            u, v = order[i], order[(i + 1) % n]
            edges.add((min(u, v), max(u, v)))
        extra = rng.randint(1, 7)
    else:
        extra = rng.randint(12, 22)
    while extra:
        u, v = rng.sample(range(1, n + 1), 2)
        if (min(u, v), max(u, v)) not in edges:
            edges.add((min(u, v), max(u, v)))
            extra -= 1
    return Multigraph(n, tuple(sorted(edges)))


def sample_ten(rng: random.Random, size: int) -> list[Multigraph]:
    seen: dict = {}
    plain = 0
    while len(seen) < size:
        g = random_ten(rng)
        if not g.is_connected():
            continue
        key = canonical_form(g)
        if key in seen:
            continue
        if is_matching_covered(g):
            if nontrivial_tight_cuts(g) or rng.random() < 0.2:
                seen[key] = g
        elif plain < size // 10:
            plain += 1
            seen[key] = g
    return [canonical(g) for g in seen.values()]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--sample", type=int, default=1500)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    groups = [(n, [canonical(g) for g in atlas(n) if g.is_connected()]) for n in (2, 4, 6)]
    groups.append((8, connected_on_8()))
    groups.append((10, sample_ten(rng, args.sample)))

    lines = [f"# connected graphs; seed {args.seed}; 10-vertex sample size {args.sample}"]
    for n, graphs in groups:
        graphs.sort(key=lambda g: (g.m, g.edges))
        lines.extend(f"{to_graph6(g)} n{n}-{i:05d}" for i, g in enumerate(graphs, start=1))
        print(f"n={n}: {len(graphs)} graphs, {sum(map(is_matching_covered, graphs))} matching covered")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
