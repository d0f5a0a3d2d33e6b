"""Text formats: the ``p mcg`` edge list and graph6.

Edge-list format::

    # optional comments
    p mcg <n> <m>
    e <u> <v>        (exactly m lines, 1-based ids)
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import GraphFormatError
from .graph import Multigraph


def parse_edge_list(text: str | Iterable[str]) -> Multigraph:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "mcg":
                raise GraphFormatError(f"line {lineno}: expected 'p mcg <n> <m>', got {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header field") from None
            if header[0] < 1 or header[1] < 0:
                raise GraphFormatError(f"line {lineno}: bad header counts {header}")
            continue
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>', got {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at vertex {u} (loops are not allowed)")
        if not (1 <= u <= header[0] and 1 <= v <= header[0]):
            raise GraphFormatError(f"line {lineno}: endpoint out of range 1..{header[0]}")
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("missing 'p mcg' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(edges)}")
    return Multigraph(header[0], tuple(edges))


def format_edge_list(g: Multigraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"p mcg {g.n} {g.m}")
    out.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def _graph6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(line: str) -> Multigraph:
    """Decode one graph6 string (simple graphs only)."""
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphFormatError("empty graph6 string")
    data = text.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise GraphFormatError(f"invalid graph6 character in {text!r}")
    n, offset = _graph6_size(data)
    if n < 1:
        raise GraphFormatError("graph6 graph has no vertices")
    bits = []
    for b in data[offset:]:
        value = b - 63
        bits.extend((value >> k) & 1 for k in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need or len(bits) - need >= 6:
        raise GraphFormatError(f"graph6 body length does not match n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    edges.sort()
    return Multigraph(n, tuple(edges))


def to_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise GraphFormatError("graph6 cannot represent parallel edges")
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    adjacent = set(g.simple_edges)
    bits = [
        1 if (i + 1, j + 1) in adjacent else 0
        for j in range(1, n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    body = [
        63 + sum(bit << (5 - k) for k, bit in enumerate(bits[i:i + 6]))
        for i in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


def is_edge_list_text(text: str) -> bool:
    """Autodetect: edge lists start with a comment or a ``p `` header."""
    stripped = text.lstrip()
    return stripped.startswith("#") or stripped.startswith("p ")


def parse_graph(text: str) -> Multigraph:
    """Parse a single graph in either supported format."""
    if is_edge_list_text(text):
        return parse_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphFormatError("expected a single graph6 line")
    return parse_graph6(lines[0])


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[str, Multigraph]]:
    """Yield ``(label, graph)`` for every graph6 line; ``label`` is an optional
    second whitespace-separated field, defaulting to the graph6 string."""
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        label = fields[1] if len(fields) > 1 else fields[0]
        yield label, parse_graph6(fields[0])
