"""Command-line interface: ``tightcut <command> ...``.

Exit codes: 0 success, 1 domain error (input graph or cut violates a
precondition), 2 usage or input-format error, 3 internal invariant failure
(including a failed ``verify``).
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from collections.abc import Sequence
from pathlib import Path

from . import __version__, elp, laminar, oracle, tightcuts
from .corpus import matching_covered_corpus, naive_connected_graphs, read_corpus
from .errors import DomainError, GraphFormatError, InvariantError, NotTightError
from .formats import parse_graph, to_graph6
from .graph import Multigraph, boundary
from .matching import is_matching_covered
from .serialize import (
    cut_to_json,
    dumps,
    elp_cut_to_json,
    laminar_result_to_json,
    matching_to_json,
    structure_to_json,
    tree_to_json,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str) -> tuple[Multigraph, str]:
    text = _read_text(path)
    return parse_graph(text), hashlib.sha256(text.encode()).hexdigest()[:16]


def _parse_shore(text: str) -> list[int]:
    try:
        ids = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"bad shore {text!r}: expected comma-separated vertex ids") from exc
    if not ids:
        raise UsageError("empty shore")
    return ids


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for item in obj:
            if isinstance(item, (dict, list)) and not _flat(item):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
        return lines
    return [f"{pad}{_scalar(obj)}"]


def _flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, dict) and (not isinstance(v, list) or _flat(v)) for v in value)
    return False


def _scalar(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def emit(report: dict, fmt: str, out=None) -> None:
    """Write ``report`` deterministically as JSON (sorted keys) or text."""
    out = out or sys.stdout
    if fmt == "json":
        out.write(dumps(report) + "\n")
    else:
        out.write("\n".join(_render_text(report)) + "\n")


# -- commands ----------------------------------------------------------------


def cmd_check(args) -> dict:
    g, digest = _load(args.graph)
    mc = is_matching_covered(g)
    result = {"matching_covered": mc, "n": g.n, "m": g.m, "bipartite": g.is_bipartite()}
    if mc:
        result["kind"] = tightcuts.classify(g).value
    return {"command": "check", "input_digest": digest, "result": result}


def cmd_tight(args) -> dict:
    g, digest = _load(args.graph)
    tightcuts.require_matching_covered(g)
    c = boundary(g, _parse_shore(args.shore))
    witness = tightcuts.tightness_witness(g, c)
    result = {"cut": cut_to_json(c), "tight": witness is None}
    if witness is not None:
        result["witness"] = matching_to_json(witness, g)
    return {"command": "tight", "input_digest": digest, "result": result}


def cmd_decompose(args) -> dict:
    g, digest = _load(args.graph)
    tree = tightcuts.decompose(g, args.strategy)
    return {"command": "decompose", "input_digest": digest, "result": tree_to_json(tree)}


def cmd_elp(args) -> dict:
    g, digest = _load(args.graph)
    found = elp.find_nontrivial_elp_cut(g)
    barrier = elp.find_nontrivial_barrier(g)
    result = {
        "elp_cut": None if found is None else elp_cut_to_json(found),
        "nontrivial_barrier": None if barrier is None else structure_to_json(barrier),
        "two_separations": [structure_to_json(s) for s in elp.find_two_separations(g)],
    }
    return {"command": "elp", "input_digest": digest, "result": result}


def cmd_laminar(args) -> dict:
    g, digest = _load(args.graph)
    tightcuts.require_matching_covered(g)
    c = boundary(g, _parse_shore(args.shore))
    r = laminar.find_laminar_elp(g, c, fallback=not args.no_fallback, policy=args.policy)
    result = laminar_result_to_json(g, c, r)
    result["elp_cut"] = elp_cut_to_json(laminar.conjecture_cut(g, c, r))
    result["tight_cut"] = cut_to_json(c)
    return {"command": "laminar", "input_digest": digest, "result": result}


def cmd_verify(args) -> dict:
    bound = args.max_n if args.max_n is not None else oracle.max_n()
    source = args.path
    graphs = matching_covered_corpus(source, max_n=bound, include_named=source is None)
    failed = 0
    cuts = 0
    for label, g in graphs:
        report = oracle.verify_graph(g, label, bound=bound)
        cuts += report.nontrivial_tight_cuts
        if not report.passed:
            failed += 1
        if args.all or not report.passed:
            emit({"command": "verify", "report": report.to_json()}, args.format)
    summary = {"graphs": len(graphs), "failed": failed, "nontrivial_tight_cuts": cuts, "max_n": bound}
    return {"command": "verify", "result": summary, "_exit": EXIT_INVARIANT if failed else EXIT_OK}


def cmd_corpus(args) -> dict:
    if args.naive is not None:
        if args.naive > 6:
            raise UsageError("--naive enumerates labelled graphs; use n <= 6")
        graphs = [(f"naive{args.naive}-{i}", g) for i, g in enumerate(naive_connected_graphs(args.naive), 1)]
    else:
        graphs = list(read_corpus(args.path))
    count = 0
    for label, g in graphs:
        if args.max_n is not None and g.n > args.max_n:
            continue
        if args.matching_covered and not is_matching_covered(g):
            continue
        count += 1
        print(f"{to_graph6(g.support())} {label}")
    return {"command": "corpus", "result": {"graphs": count}, "_quiet": True}


COMMANDS = {
    "check": cmd_check,
    "tight": cmd_tight,
    "decompose": cmd_decompose,
    "elp": cmd_elp,
    "laminar": cmd_laminar,
    "verify": cmd_verify,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timing", action="store_true", help="add elapsed seconds to the report")

    p = argparse.ArgumentParser(prog="tightcut", description="Tight cuts, ELP cuts and laminar ELP structures.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("graph", help="edge-list or graph6 file, or - for stdin")
        return sp

    graph_cmd("check", "is the graph matching covered; brick, brace or decomposable")
    sp = graph_cmd("tight", "is the cut of a shore tight")
    sp.add_argument("--shore", required=True, help="comma-separated vertex ids")
    sp = graph_cmd("decompose", "tight cut decomposition")
    sp.add_argument("--strategy", choices=sorted(tightcuts.STRATEGIES), default="a")
    graph_cmd("elp", "a nontrivial ELP cut, barrier and all 2-separations")
    sp = graph_cmd("laminar", "sheltered barrier or laminar 2-separation cut for a tight cut")
    sp.add_argument("--shore", required=True, help="comma-separated vertex ids")
    sp.add_argument("--policy", choices=laminar.POLICIES, default="separation")
    sp.add_argument("--no-fallback", action="store_true", help="fail instead of searching exhaustively")

    sp = sub.add_parser("verify", parents=[common], help="exhaustive verification over a corpus")
    sp.add_argument("path", nargs="?", help="graph6 file, edge-list file or directory (default: bundled corpus)")
    sp.add_argument("--max-n", type=int, help="skip graphs with more vertices (default TIGHTCUT_MAX_N or 14)")
    sp.add_argument("--all", action="store_true", help="emit a report for every graph, not only failures")

    sp = sub.add_parser("corpus", parents=[common], help="list corpus graphs as graph6")
    sp.add_argument("path", nargs="?", help="graph6 file (default: bundled corpus)")
    sp.add_argument("--naive", type=int, metavar="N", help="enumerate connected labelled graphs on N vertices")
    sp.add_argument("--matching-covered", action="store_true", help="keep only matching covered graphs")
    sp.add_argument("--max-n", type=int)
    return p


def _error_report(command: str, kind: str, exc: Exception) -> dict:
    report = {"command": command, "error": kind, "message": str(exc)}
    if isinstance(exc, NotTightError) and exc.witness is not None:
        report["witness"] = {"edge_ids": list(exc.witness.edges), "edges": [list(p) for p in exc.pairs]}
    if isinstance(exc, InvariantError):
        report["details"] = exc.details
    return report


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except (UsageError, GraphFormatError) as exc:
        print(f"tightcut: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        emit(_error_report(args.command, "domain", exc), fmt)
        print(f"tightcut: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InvariantError as exc:
        emit(_error_report(args.command, "invariant", exc), fmt)
        print(f"tightcut: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    code = report.pop("_exit", EXIT_OK)
    quiet = report.pop("_quiet", False)
    if args.timing:
        report["elapsed"] = round(time.perf_counter() - start, 6)
    if not quiet:
        emit(report, fmt)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
