"""Planarity testing, component bridging and triangulation of plane graphs."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import Edge, Graph, GraphError, PlaneGraph, build_graph, euler_ok


@dataclass(frozen=True)
class NonPlanarWitness:
    """A Kuratowski subdivision found in the input.

    ``edges`` are the edges of the subdivision (all present in the input
    graph); ``branch_vertices`` are its vertices of degree at least three.
    """

    kind: str  # "K5" or "K33"
    branch_vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def summary(self) -> str:
        return f"{self.kind}-subdivision on branch vertices {list(self.branch_vertices)}"


@dataclass(frozen=True)
class RootedTriangulation:
    plane: PlaneGraph
    root: int
    original_edges: frozenset[Edge]

    @property
    def added_edges(self) -> list[Edge]:
        return sorted(e for e in self.plane.graph.edges() if e not in self.original_edges)


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _witness(sub: nx.Graph) -> NonPlanarWitness:
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in sub.edges()))
    branch = tuple(sorted(v for v in sub.nodes if sub.degree(v) >= 3))
    if len(branch) == 5 and all(sub.degree(v) == 4 for v in branch):
        kind = "K5"
    elif len(branch) == 6 and all(sub.degree(v) == 3 for v in branch):
        kind = "K33"
    else:  # pragma: no cover - networkx always returns a Kuratowski subgraph
        raise GraphError(f"unrecognised Kuratowski subgraph with branch set {branch}")
    return NonPlanarWitness(kind, branch, edges)


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return nx.check_planarity(_to_nx(g))[0]


def planar_embed(g: Graph) -> PlaneGraph | NonPlanarWitness:
    """Embed ``g`` or return a Kuratowski witness.

    The outer face is taken to be the face on the left of the first dart out
    of the smallest non-isolated vertex.
    """
    ok, res = nx.check_planarity(_to_nx(g), counterexample=True)
    if not ok:
        return _witness(res)
    rotation = tuple(tuple(res.neighbors_cw_order(v)) for v in range(g.n))
    outer = next(((v, rotation[v][0]) for v in range(g.n) if rotation[v]), None)
    pg = PlaneGraph(g, rotation, outer)
    if not euler_ok(pg):  # pragma: no cover - guards the conversion above
        raise GraphError("embedding returned by the planarity test fails Euler's relation")
    return pg


def connect_components(g: Graph) -> tuple[Graph, list[Edge]]:
    """Join consecutive components by a bridge between their least vertices."""
    comps = g.components()
    added = [(comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)]
    if not added:
        return g, []
    return build_graph(g.n, g.edges() + added), added


def triangulate(pg: PlaneGraph, r: int) -> RootedTriangulation:
    """Add edges inside faces until every face is a triangle.

    Faces are closed by repeatedly cutting off an ear (a, b, c) of the face
    walk with the chord ac, choosing only ears whose chord is neither a loop
    nor an existing edge. This keeps the graph simple and also works when
    the walk visits a cut vertex several times. The outer face is moved to a
    face incident with ``r``.
    """
    g = pg.graph
    if g.n < 3:
        raise GraphError("triangulate needs at least three vertices")
    if not g.is_connected():
        raise GraphError("triangulate needs a connected plane graph")
    rot = [list(x) for x in pg.rotation]
    adj = [set(a) for a in g.adjacency]

    def pred(v: int, u: int) -> int:
        lst = rot[v]
        return lst[lst.index(u) - 1]

    def add_chord(a: int, b: int, c: int) -> None:
        # new face (a, b, c): a goes right after b at c's side, c right after b at a
        ra = rot[a]
        ra.insert(ra.index(b) + 1, c)
        rc = rot[c]
        rc.insert(rc.index(b), a)
        adj[a].add(c)
        adj[c].add(a)

    seen: set[tuple[int, int]] = set()
    for u in range(g.n):
        for v in list(pg.rotation[u]):
            if (u, v) in seen:
                continue
            walk = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                walk.append(d[0])
                d = (d[1], pred(d[1], d[0]))
            _close_face(walk, adj, add_chord)

    tri_rot = tuple(tuple(x) for x in rot)
    tri = build_graph(g.n, [(a, b) for a in range(g.n) for b in adj[a] if a < b])
    outer = (r, tri_rot[r][0])
    plane = PlaneGraph(tri, tri_rot, outer)
    if tri.m != 3 * g.n - 6:
        raise GraphError(f"triangulation has {tri.m} edges, expected {3 * g.n - 6}")
    return RootedTriangulation(plane, r, frozenset(g.edges()))


def _close_face(walk: list[int], adj: list[set[int]], add_chord) -> None:
    i = 0
    stall = 0
    while len(walk) > 3:
        k = len(walk)
        a, b, c = walk[(i - 1) % k], walk[i % k], walk[(i + 1) % k]
        if a != c and c not in adj[a]:
            add_chord(a, b, c)
            del walk[i % k]
            stall = 0
            continue
        i += 1
        stall += 1
        if stall > k:
            raise GraphError(f"no admissible ear in face walk {walk}")
