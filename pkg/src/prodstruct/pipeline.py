"""End-to-end construction: planar graph -> certificate for G in H x P."""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Sequence

from .decomposer import decompose_triangulation, summarize_trace
from .graph import Graph
from .layering import bfs_tree
from .planar import NonPlanarWitness, planar_embed, triangulate
from .product import (
    Decomposition,
    ProductCertificate,
    QuotientGraph,
    make_product_embedding,
    merge_components,
)

log = logging.getLogger(__name__)


class NonPlanarError(ValueError):
    def __init__(self, witness: NonPlanarWitness) -> None:
        super().__init__(f"input graph is not planar: {witness.summary()}")
        self.witness = witness


def decompose_connected(g: Graph, root: int = 0) -> ProductCertificate:
    """Certificate for a connected planar graph rooted at ``root``."""
    t = bfs_tree(g, root)
    if g.n < 3:
        # one vertical path through the whole (at most two-vertex) graph
        part = tuple(sorted(range(g.n), key=lambda v: t.depth[v]))
        cert = make_product_embedding(g, t, [part])
        dec = Decomposition((frozenset([0]),), (), (0,), ((0,),))
        return replace(cert, decomposition=dec, stats=summarize_trace([]))
    emb = planar_embed(g)
    if isinstance(emb, NonPlanarWitness):
        raise NonPlanarError(emb)
    tri = triangulate(emb, root)
    res = decompose_triangulation(tri, t)
    log.debug("decomposed n=%d into %d parts, %d bags", g.n, len(res.parts), len(res.bags))
    cert = make_product_embedding(g, t, res.parts)
    dec = Decomposition(tuple(res.bags), tuple(res.tree_edges), (res.anchor,), (res.boundary_ids,))
    return replace(
        cert,
        decomposition=dec,
        triangulation_edges=tuple(tri.added_edges),
        stats=summarize_trace(res.trace),
    )


def _lift(cert: ProductCertificate, verts: Sequence[int], n: int, g: Graph) -> ProductCertificate:
    """Relabel a component certificate from local ids to ids of ``g``."""
    parent = [-1] * n
    layers = [-1] * n
    part_of = [-1] * n
    for i, v in enumerate(verts):
        p = cert.parent[i]
        parent[v] = verts[p] if p >= 0 else -1
        layers[v] = cert.layers[i]
        part_of[v] = cert.quotient.part_of[i]
    q = cert.quotient
    wit = {e: (verts[a], verts[b]) for e, (a, b) in q.witnesses.items()}
    parts = tuple(tuple(verts[x] for x in p) for p in q.parts)
    edges = [(verts[a], verts[b]) for a, b in cert.graph.edges()]
    from .graph import build_graph

    return replace(
        cert,
        graph=build_graph(n, edges),
        quotient=QuotientGraph(parts, tuple(part_of), q.edges, wit),
        parent=tuple(parent),
        layers=tuple(layers),
        triangulation_edges=tuple(
            sorted((min(verts[a], verts[b]), max(verts[a], verts[b])) for a, b in cert.triangulation_edges)
        ),
        vertices=frozenset(verts),
    )


def _merge_stats(stats: Sequence[dict]) -> dict:
    out: dict = {"nodes": 0, "k_counts": {str(k): 0 for k in range(1, 6)}, "k5_hubs": 0,
                 "mirror": 0, "k5_full": 0, "degenerate": 0, "max_depth": 0}
    for s in stats:
        for key in ("nodes", "k5_hubs", "mirror", "k5_full", "degenerate"):
            out[key] += s.get(key, 0)
        out["max_depth"] = max(out["max_depth"], s.get("max_depth", 0))
        for k, c in s.get("k_counts", {}).items():
            out["k_counts"][k] += c
    return out


def decompose(g: Graph, root: int = 0) -> ProductCertificate:
    """Certificate that ``g`` is a subgraph of H x P with H 6-simple.

    Each connected component is handled on its own; the component holding
    ``root`` is rooted there, every other one at its least vertex.

    Raises NonPlanarError for non-planar input.
    """
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    comps = g.components()
    if len(comps) == 1:
        return decompose_connected(g, root)
    certs = []
    for comp in comps:
        sub, index = g.induced(comp)
        local_root = index[root] if root in index else 0
        certs.append(_lift(decompose_connected(sub, local_root), comp, g.n, g))
    merged = merge_components(certs)
    return replace(merged, stats=_merge_stats([c.stats for c in certs]))
