"""Canonical file formats: graph JSON, plain edge lists, coloring JSON.

The JSON graph format is byte-stable: fixed key order (n, edges, labels,
product, connected), edges sorted with the smaller endpoint first, compact
separators.  Serializing a parsed file reproduces it byte for byte.  A
plain-text edge-list format ("n m" on the first line, then one "u v" line
per edge) is accepted on input as well.
"""

from __future__ import annotations

import json

from .graph import Graph, build_graph, is_connected
from .mc import EdgeColoring
from .products import ProductGraph, ProductKind

__all__ = [
    "graph_to_obj",
    "graph_from_obj",
    "dumps",
    "loads_graph",
    "parse_edge_list",
    "coloring_to_obj",
    "coloring_from_obj",
]


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def graph_to_obj(g: Graph | ProductGraph) -> dict:
    """Canonical dict form; products carry kind, factor sizes and a
    connectivity flag."""
    if isinstance(g, ProductGraph):
        obj = graph_to_obj(g.graph)
        obj["product"] = {
            "kind": g.kind.value,
            "factors": list(g.factor_sizes),
        }
        obj["connected"] = is_connected(g.graph)
        return obj
    obj: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        obj["labels"] = [list(lab) for lab in g.labels]
    return obj


def graph_from_obj(obj: dict) -> Graph | ProductGraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph object needs 'n' and 'edges' fields")
    g = build_graph(obj["n"], [tuple(e) for e in obj["edges"]], obj.get("labels"))
    if "product" in obj:
        meta = obj["product"]
        kind = ProductKind.parse(meta["kind"])
        ng, nh = meta["factors"]
        if ng * nh != g.n:
            raise ValueError(
                f"product metadata inconsistent: {ng}*{nh} != {g.n} vertices"
            )
        return ProductGraph(graph=g, kind=kind, factor_sizes=(ng, nh))
    return g


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" edge-list format."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("edge-list header must be 'n m'")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def loads_graph(text: str) -> Graph | ProductGraph:
    """Parse either the JSON graph format or the plain edge-list format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_obj(json.loads(text))
    return parse_edge_list(text)


def coloring_to_obj(coloring: EdgeColoring) -> dict:
    return coloring.to_dict()


def coloring_from_obj(host: Graph, obj: dict) -> EdgeColoring:
    """Rebuild a coloring, insisting the edge list matches the host exactly."""
    if not isinstance(obj, dict) or "edges" not in obj or "colors" not in obj:
        raise ValueError("coloring object needs 'edges' and 'colors' fields")
    edges = [tuple(e) for e in obj["edges"]]
    if edges != list(host.edges):
        raise ValueError("coloring edge list does not match the graph")
    return EdgeColoring(host, tuple(int(c) for c in obj["colors"]))
