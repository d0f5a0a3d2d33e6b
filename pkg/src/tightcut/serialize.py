"""JSON codecs for graphs, cuts, structures, results and decomposition trees.

Every ``*_to_json`` returns plain dicts and lists; :func:`dumps` renders them
deterministically (sorted keys, compact separators).  The ``*_from_json``
functions rebuild and re-validate against the graph they belong to.
"""

from __future__ import annotations

import json
from typing import Any

from .elp import Barrier, BarrierCut, SeparationCut, Structure, is_barrier, is_two_separation
from .errors import GraphFormatError
from .graph import Cut, Multigraph, boundary
from .laminar import (
    LaminarSeparation,
    SepAvoidingT,
    SepThroughT,
    ShelteredBarrier,
    certify,
)
from .matching import Matching
from .tightcuts import DecompositionTree, Kind, Leaf, Node, tight_contractions


def _plain(obj: Any):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    return str(obj)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False, default=_plain)


def graph_to_json(g: Multigraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(d: dict) -> Multigraph:
    try:
        return Multigraph(int(d["n"]), tuple((int(u), int(v)) for u, v in d["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed graph object: {exc}") from exc


def cut_to_json(c: Cut) -> dict:
    ids = sorted(c.edges)
    return {
        "shore": sorted(c.shore),
        "edge_ids": ids,
        "edges": [list(c.graph.edges[e]) for e in ids],
        "trivial": c.trivial,
    }


def cut_from_json(d: dict, g: Multigraph) -> Cut:
    c = boundary(g, d["shore"])
    if "edge_ids" in d and sorted(d["edge_ids"]) != sorted(c.edges):
        raise GraphFormatError("edge ids do not match the shore")
    return c


def matching_to_json(m: Matching, g: Multigraph) -> dict:
    return {"edge_ids": list(m.edges), "edges": [list(p) for p in m.pairs(g)]}


def structure_to_json(s: Structure) -> dict:
    parts = [sorted(p) for p in s.components]
    if isinstance(s, Barrier):
        return {"kind": "barrier", "members": sorted(s.members), "components": parts}
    return {"kind": "two_separation", "pair": list(s.pair), "components": parts}


def structure_from_json(d: dict, g: Multigraph) -> Structure:
    if d.get("kind") == "barrier":
        s = is_barrier(g, d["members"])
    elif d.get("kind") == "two_separation":
        s = is_two_separation(g, *d["pair"])
    else:
        raise GraphFormatError(f"unknown structure kind {d.get('kind')!r}")
    if s is None:
        raise GraphFormatError("structure does not verify in the graph")
    return s


def elp_cut_to_json(e: BarrierCut | SeparationCut) -> dict:
    if isinstance(e, BarrierCut):
        return {"kind": "barrier_cut", "structure": structure_to_json(e.barrier), "index": e.index, "cut": cut_to_json(e.cut)}
    return {
        "kind": "separation_cut",
        "structure": structure_to_json(e.separation),
        "side": sorted(e.side),
        "cut": cut_to_json(e.cut),
    }


def laminar_result_to_json(g: Multigraph, c: Cut, r: ShelteredBarrier | LaminarSeparation) -> dict:
    cert = certify(g, c, r)
    out = {
        "certificate": {
            "ok": cert.ok,
            "structure_valid": cert.structure_valid,
            "nontrivial": cert.nontrivial,
            "placement_ok": cert.placement_ok,
        },
        "trace": list(r.trace),
        "divergence": r.divergence,
    }
    if isinstance(r, ShelteredBarrier):
        out.update(type="sheltered_barrier", barrier=structure_to_json(r.barrier), shore=sorted(r.shore))
    else:
        out.update(type="laminar_separation", separation=structure_to_json(r.separation), cut=cut_to_json(r.cut))
    return out


def laminar_result_from_json(d: dict, g: Multigraph) -> ShelteredBarrier | LaminarSeparation:
    trace = tuple(d.get("trace", ()))
    if d["type"] == "sheltered_barrier":
        b = structure_from_json(d["barrier"], g)
        return ShelteredBarrier(b, frozenset(d["shore"]), trace, d.get("divergence"))
    sep = structure_from_json(d["separation"], g)
    return LaminarSeparation(sep, cut_from_json(d["cut"], g), trace, d.get("divergence"))


def avoid_outcome_to_json(o) -> dict:
    if isinstance(o, SepAvoidingT):
        return {"type": "separation_avoiding_t", "separation": structure_to_json(o.separation)}
    if isinstance(o, SepThroughT):
        return {
            "type": "separation_through_t",
            "separation": structure_to_json(o.separation),
            "cut": cut_to_json(o.cut),
            "shore": sorted(o.shore),
        }
    return {"type": "sheltered_barrier", "barrier": structure_to_json(o.barrier), "shore": sorted(o.shore)}


def _node_to_json(node: Leaf | Node) -> dict:
    if isinstance(node, Leaf):
        return {"kind": node.kind.value, "graph": graph_to_json(node.graph)}
    return {
        "graph": graph_to_json(node.graph),
        "cut": cut_to_json(node.cut),
        "children": [_node_to_json(ch) for ch in node.children],
    }


def tree_to_json(t: DecompositionTree) -> dict:
    leaves = t.leaves()
    return {
        "strategy": t.strategy,
        "brick_number": t.brick_number,
        "leaf_count": len(leaves),
        "leaves": sorted([leaf.kind.value, leaf.graph.n] for leaf in leaves),
        "root": _node_to_json(t.root),
    }


def _node_from_json(d: dict) -> Leaf | Node:
    g = graph_from_json(d["graph"])
    if "kind" in d:
        return Leaf(Kind(d["kind"]), g)
    cut = cut_from_json(d["cut"], g)
    children = tuple(_node_from_json(ch) for ch in d["children"])
    return Node(g, cut, children, tight_contractions(g, cut))


def tree_from_json(d: dict) -> DecompositionTree:
    return DecompositionTree(_node_from_json(d["root"]), d["strategy"])
