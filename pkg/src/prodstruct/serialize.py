"""Graph input formats (JSON, graph6) and the certificate document."""

from __future__ import annotations

import json
from typing import Any

import networkx as nx

from .graph import Graph, GraphError, build_graph
from .product import Decomposition, ProductCertificate, QuotientGraph

SCHEMA_VERSION = 1


class ParseError(ValueError):
    """Input that cannot be read as a graph or certificate."""


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------


def graph_from_json(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError('graph JSON must be an object with "n" and "edges"')
    n, edges = obj["n"], obj["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or not isinstance(edges, list):
        raise ParseError('"n" must be an integer and "edges" a list')
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"bad edge entry {e!r}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    try:
        h = nx.from_graph6_bytes(text.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as exc:
        raise ParseError(f"invalid graph6 string: {exc}") from exc
    return build_graph(h.number_of_nodes(), h.edges())


def graph_to_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def parse_graph(text: str) -> Graph:
    """Read a graph from JSON or from the first graph6 line of ``text``."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    first = stripped.splitlines()[0]
    if stripped[0] in "{[":
        # graph6 headers for n = 28 and n = 60 are '[' and '{'
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            try:
                return graph_from_graph6(first)
            except ParseError:
                raise ParseError(f"invalid JSON: {exc}") from exc
        return graph_from_json(obj)
    return graph_from_graph6(first)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


def certificate_to_document(cert: ProductCertificate, root: int | None = None) -> dict:
    h, dec = cert.quotient, cert.decomposition
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "graph": graph_to_json(cert.graph),
        "triangulation": {"added_edges": [list(e) for e in cert.triangulation_edges]},
        "bfs": {
            "root": root if root is not None else next((v for v, p in enumerate(cert.parent) if p == -1), 0),
            "parent": list(cert.parent),
            "depth": list(cert.bfs_depth),
        },
        "partition": [list(p) for p in h.parts],
        "quotient": {
            "edges": [list(e) for e in h.edges],
            "witnesses": [list(h.witnesses.get(e, (-1, -1))) for e in h.edges],
        },
        "layers": list(cert.layers),
        "path_length": cert.path_length,
        "trace": cert.stats,
    }
    if dec is not None:
        doc["decomposition"] = {
            "tree_edges": [list(e) for e in dec.tree_edges],
            "bags": [sorted(b) for b in dec.bags],
            "anchor": dec.anchors[0] if dec.anchors else None,
            "anchors": list(dec.anchors),
            "boundaries": [list(b) for b in dec.boundaries],
        }
    return doc


def dumps_certificate(cert: ProductCertificate, root: int | None = None) -> str:
    return json.dumps(certificate_to_document(cert, root), sort_keys=True, separators=(",", ":")) + "\n"


def _int_list(obj: Any, what: str) -> list[int]:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise ParseError(f"{what} must be a list of integers")
    return obj


def _pairs(obj: Any, what: str) -> list[tuple[int, int]]:
    if not isinstance(obj, list):
        raise ParseError(f"{what} must be a list of pairs")
    out = []
    for e in obj:
        if len(_int_list(e, what)) != 2:
            raise ParseError(f"{what} entries must be pairs")
        out.append((e[0], e[1]))
    return out


def certificate_from_document(doc: Any) -> ProductCertificate:
    """Rebuild a certificate; schema problems raise ParseError."""
    if not isinstance(doc, dict):
        raise ParseError("certificate must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {version!r}")
    required = ("graph", "bfs", "partition", "quotient", "layers", "path_length", "decomposition")
    missing = [k for k in required if k not in doc]
    if missing:
        raise ParseError(f"certificate lacks fields {missing}")
    g = graph_from_json(doc["graph"])
    bfs = doc["bfs"]
    if not isinstance(bfs, dict):
        raise ParseError("bfs must be an object")
    parent = _int_list(bfs.get("parent"), "bfs.parent")
    depth = _int_list(bfs.get("depth"), "bfs.depth")
    layers = _int_list(doc["layers"], "layers")
    if not (len(parent) == len(depth) == len(layers) == g.n):
        raise ParseError("per-vertex arrays must have one entry per vertex")
    if not isinstance(doc["partition"], list):
        raise ParseError("partition must be a list")
    parts = tuple(tuple(_int_list(p, "partition entry")) for p in doc["partition"])
    part_of = [-1] * g.n
    for i, p in enumerate(parts):
        for v in p:
            if 0 <= v < g.n:
                part_of[v] = i
    q = doc["quotient"]
    if not isinstance(q, dict):
        raise ParseError("quotient must be an object")
    q_edges = _pairs(q.get("edges"), "quotient.edges")
    wit_list = _pairs(q.get("witnesses", []), "quotient.witnesses")
    witnesses = dict(zip(q_edges, wit_list))
    d = doc["decomposition"]
    if not isinstance(d, dict) or not isinstance(d.get("bags"), list):
        raise ParseError("decomposition must hold a list of bags")
    bags = tuple(frozenset(_int_list(b, "bag")) for b in d["bags"])
    tree_edges = tuple(_pairs(d.get("tree_edges"), "decomposition.tree_edges"))
    anchors = d.get("anchors")
    if anchors is None:
        anchors = [] if d.get("anchor") is None else [d["anchor"]]
    anchors = tuple(_int_list(anchors, "decomposition.anchors"))
    boundaries = tuple(tuple(_int_list(b, "boundary")) for b in d.get("boundaries", []))
    path_length = doc["path_length"]
    if not isinstance(path_length, int):
        raise ParseError("path_length must be an integer")
    tri = doc.get("triangulation", {}).get("added_edges", [])
    return ProductCertificate(
        graph=g,
        quotient=QuotientGraph(parts, tuple(part_of), tuple(q_edges), witnesses),
        parent=tuple(parent),
        layers=tuple(layers),
        path_length=path_length,
        decomposition=Decomposition(bags, tree_edges, anchors, boundaries),
        triangulation_edges=tuple(_pairs(tri, "triangulation.added_edges")),
        stats=doc.get("trace", {}) or {},
        depth=None if depth == layers else tuple(depth),
    )


def loads_certificate(text: str) -> ProductCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return certificate_from_document(doc)
