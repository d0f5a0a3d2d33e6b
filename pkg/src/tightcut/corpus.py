"""The bundled corpus and a few named graphs."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from importlib import resources
from itertools import combinations, product
from pathlib import Path

from .formats import iter_graph6, parse_graph
from .graph import Multigraph
from .matching import is_matching_covered


def cycle(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def complete(n: int) -> Multigraph:
    return Multigraph(n, tuple(combinations(range(1, n + 1), 2)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, tuple((u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)))


def cube() -> Multigraph:
    coords = list(product((0, 1), repeat=3))
    index = {c: i for i, c in enumerate(coords, start=1)}
    edges = [
        (index[c], index[d])
        for c, d in combinations(coords, 2)
        if sum(x != y for x, y in zip(c, d)) == 1
    ]
    return Multigraph(8, tuple(edges))


def prism() -> Multigraph:
    return Multigraph(6, ((1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)))


def petersen() -> Multigraph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return Multigraph(10, tuple(outer + spokes + inner))


def named_graphs() -> dict[str, Multigraph]:
    return {
        "C4": cycle(4),
        "C6": cycle(6),
        "C8": cycle(8),
        "C10": cycle(10),
        "K4": complete(4),
        "K33": complete_bipartite(3, 3),
        "Q3": cube(),
        "prism": prism(),
        "petersen": petersen(),
    }


def bundled_path() -> Path:
    return Path(str(resources.files("tightcut") / "data" / "connected.g6"))


def read_corpus(source: str | Path | Iterable[str] | None = None) -> Iterator[tuple[str, Multigraph]]:
    """``(label, graph)`` pairs from a graph6 file, a directory of edge-list
    files, an iterable of graph6 lines, or (default) the bundled corpus."""
    if source is None:
        source = bundled_path()
    if isinstance(source, (str, Path)):
        path = Path(source)
        if path.is_dir():
            for f in sorted(path.iterdir()):
                if f.is_file() and not f.name.startswith("."):
                    yield f.stem, parse_graph(f.read_text())
            return
        text = path.read_text()
        if text.lstrip().startswith("p ") or path.suffix == ".mcg":
            yield path.stem, parse_graph(text)
            return
        yield from iter_graph6(text.splitlines())
        return
    yield from iter_graph6(source)


def matching_covered_corpus(
    source=None, max_n: int | None = None, include_named: bool = True
) -> list[tuple[str, Multigraph]]:
    """Matching covered members of the corpus (plus the named graphs)."""
    out = [
        (label, g)
        for label, g in read_corpus(source)
        if (max_n is None or g.n <= max_n) and is_matching_covered(g)
    ]
    if include_named:
        out.extend(
            (name, g) for name, g in named_graphs().items() if (max_n is None or g.n <= max_n)
        )
    return out


def naive_connected_graphs(n: int) -> Iterator[Multigraph]:
    """Every connected labelled simple graph on ``n`` vertices (no isomorphism
    reduction; only sensible for ``n <= 5``)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        g = Multigraph(n, tuple(p for i, p in enumerate(pairs) if bits >> i & 1))
        if g.is_connected() and (n == 1 or g.m):
            yield g
