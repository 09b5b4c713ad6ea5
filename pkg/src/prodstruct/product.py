"""Quotient graphs and the embedding of G into H x P (strong product)."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from .graph import Edge, Graph, build_graph
from .layering import BfsTree, is_vertical


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class QuotientGraph:
    parts: tuple[tuple[int, ...], ...]
    part_of: tuple[int, ...]
    edges: tuple[Edge, ...]
    witnesses: dict[Edge, Edge] = field(compare=False, default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.parts)

    def as_graph(self) -> Graph:
        return build_graph(len(self.parts), self.edges)

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[Edge]:
        es = self.__dict__.get("_es")
        if es is None:
            es = frozenset(self.edges)
            object.__setattr__(self, "_es", es)
        return es


@dataclass(frozen=True)
class Decomposition:
    """Tree-decomposition of H over part ids.

    ``anchors[c]`` is the node holding the initial boundary paths
    ``boundaries[c]`` of component ``c``.
    """

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]
    anchors: tuple[int, ...] = ()
    boundaries: tuple[tuple[int, ...], ...] = ()

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def anchor(self) -> int:
        return self.anchors[0]


@dataclass(frozen=True)
class ProductCertificate:
    graph: Graph
    quotient: QuotientGraph
    parent: tuple[int, ...]  # BFS forest, -1 at component roots
    layers: tuple[int, ...]
    path_length: int
    decomposition: Decomposition | None = None
    triangulation_edges: tuple[Edge, ...] = ()
    vertices: frozenset[int] | None = None  # covered vertices; None means all
    stats: dict = field(default_factory=dict, compare=False)
    depth: tuple[int, ...] | None = None  # BFS depth when stored apart from layers

    @property
    def bfs_depth(self) -> tuple[int, ...]:
        return self.depth if self.depth is not None else self.layers

    def covered(self) -> frozenset[int]:
        return self.vertices if self.vertices is not None else frozenset(range(self.graph.n))

    def image(self, v: int) -> tuple[int, int]:
        return self.quotient.part_of[v], self.layers[v]


def quotient(g: Graph, parts: Sequence[Sequence[int]]) -> QuotientGraph:
    """Contract every part to a vertex; one witness G-edge per H-edge."""
    part_of = [-1] * g.n
    for i, p in enumerate(parts):
        if not p:
            raise PartitionError(f"part {i} is empty")
        for v in p:
            if not 0 <= v < g.n:
                raise PartitionError(f"part {i} contains unknown vertex {v}")
            if part_of[v] != -1:
                raise PartitionError(f"vertex {v} lies in parts {part_of[v]} and {i}")
            part_of[v] = i
    uncovered = [v for v in range(g.n) if part_of[v] == -1]
    if uncovered:
        raise PartitionError(f"vertex {uncovered[0]} is not covered by the partition")
    witnesses: dict[Edge, Edge] = {}
    for u, v in g.edges():
        a, b = part_of[u], part_of[v]
        if a != b:
            witnesses.setdefault((min(a, b), max(a, b)), (u, v))
    return QuotientGraph(
        tuple(tuple(p) for p in parts), tuple(part_of), tuple(sorted(witnesses)), witnesses
    )


def strong_product_adjacent(a: tuple[int, int], b: tuple[int, int], h: QuotientGraph) -> bool:
    """Adjacency in H x P where P is the path on 0, 1, 2, ..."""
    (pa, la), (pb, lb) = a, b
    if a == b:
        return False
    same_part, part_edge = pa == pb, pa != pb and h.adjacent(pa, pb)
    same_layer, layer_edge = la == lb, abs(la - lb) == 1
    return (
        (same_part and layer_edge)
        or (same_layer and part_edge)
        or (part_edge and layer_edge)
    )


def make_product_embedding(g: Graph, t: BfsTree, parts: Sequence[Sequence[int]]) -> ProductCertificate:
    """Certificate for G as a subgraph of (G / parts) x P with P indexed by depth."""
    for i, p in enumerate(parts):
        seq = list(p)
        if len(seq) > 1 and t.depth[seq[0]] > t.depth[seq[-1]]:
            seq.reverse()
        if not is_vertical(seq, t):
            raise PartitionError(f"part {i} = {list(p)} is not vertical in the BFS tree")
    h = quotient(g, parts)
    return ProductCertificate(
        graph=g,
        quotient=h,
        parent=t.parent,
        layers=t.depth,
        path_length=max(t.depth, default=-1) + 1,
    )


def merge_components(certs: Sequence[ProductCertificate]) -> ProductCertificate:
    """Disjoint union of certificates over disjoint vertex sets of one graph.

    Part ids and decomposition nodes of later certificates are shifted; the
    decomposition trees are joined by edges between component anchors.
    """
    if not certs:
        raise ValueError("nothing to merge")
    if len(certs) == 1:
        return certs[0]
    n = max(c.graph.n for c in certs)
    seen: set[int] = set()
    for c in certs:
        cov = c.covered()
        if seen & cov:
            raise ValueError(f"certificates overlap on vertex {min(seen & cov)}")
        seen |= cov
    parent = [-1] * n
    layers = [-1] * n
    part_of = [-1] * n
    parts: list[tuple[int, ...]] = []
    q_edges: list[Edge] = []
    witnesses: dict[Edge, Edge] = {}
    bags: list[frozenset[int]] = []
    tree_edges: list[tuple[int, int]] = []
    anchors: list[int] = []
    boundaries: list[tuple[int, ...]] = []
    tri_edges: list[Edge] = []
    edges: list[Edge] = []
    for c in certs:
        poff, noff = len(parts), len(bags)
        for v in c.covered():
            parent[v] = c.parent[v]
            layers[v] = c.layers[v]
            part_of[v] = c.quotient.part_of[v] + poff
        parts.extend(c.quotient.parts)
        for a, b in c.quotient.edges:
            q_edges.append((a + poff, b + poff))
            witnesses[(a + poff, b + poff)] = c.quotient.witnesses.get((a, b), (-1, -1))
        edges.extend(c.graph.edges())
        tri_edges.extend(c.triangulation_edges)
        d = c.decomposition
        if d is not None:
            bags.extend(frozenset(x + poff for x in bag) for bag in d.bags)
            tree_edges.extend((a + noff, b + noff) for a, b in d.tree_edges)
            for anc, bd in zip(d.anchors, d.boundaries):
                if anchors:
                    tree_edges.append((anchors[0], anc + noff))
                anchors.append(anc + noff)
                boundaries.append(tuple(x + poff for x in bd))
    merged_q = QuotientGraph(tuple(parts), tuple(part_of), tuple(q_edges), witnesses)
    dec = Decomposition(tuple(bags), tuple(tree_edges), tuple(anchors), tuple(boundaries))
    covered = frozenset(seen)
    return ProductCertificate(
        graph=build_graph(n, edges),
        quotient=merged_q,
        parent=tuple(parent),
        layers=tuple(layers),
        path_length=max(c.path_length for c in certs),
        decomposition=dec if bags else None,
        triangulation_edges=tuple(sorted(tri_edges)),
        vertices=None if covered == frozenset(range(n)) else covered,
    )


def with_decomposition(cert: ProductCertificate, dec: Decomposition, **kw) -> ProductCertificate:
    return replace(cert, decomposition=dec, **kw)
