"""Simple graphs and plane graphs given by a rotation system.

Vertices are the integers ``0..n-1``. A plane graph stores, for every vertex,
the cyclic order of its neighbours. Faces are traced with the rule

    next(u -> v) = (v, w)   where w precedes u in the rotation at v

so every face lies on the *left* of each of its darts. All region and
orientation conventions elsewhere in the package follow this rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]
Dart = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph input (self-loop, out-of-range id, bad rotation)."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _nbrs: tuple[frozenset[int], ...] = field(repr=False, compare=False, default=())
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not self._nbrs:
            object.__setattr__(self, "_nbrs", tuple(frozenset(a) for a in self.adjacency))
        object.__setattr__(self, "m", sum(len(a) for a in self.adjacency) // 2)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph relabelled to 0..len-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[w])
            for u in vertices
            for w in self.adjacency[u]
            if w in index and u < w
        ]
        return build_graph(len(vertices), edges), index


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; duplicate pairs collapse, loops are rejected."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]
    is_outer: bool = False

    def __len__(self) -> int:
        return len(self.boundary)


def canonical_cycle(walk: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence to its lexicographically least rotation."""
    if not walk:
        return ()
    k = len(walk)
    return min(tuple(walk[i:]) + tuple(walk[:i]) for i in range(k) if walk[i] == min(walk))


@dataclass(frozen=True)
class PlaneGraph:
    """A graph with a rotation system and a designated outer face.

    ``outer`` is a dart; the outer face is the face on the left of it
    (``None`` for edgeless graphs).
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer: Dart | None = None
    _pos: tuple[Mapping[int, int], ...] = field(repr=False, compare=False, default=())

    def __post_init__(self) -> None:
        if len(self.rotation) != self.graph.n:
            raise GraphError("rotation system size does not match vertex count")
        for v, rot in enumerate(self.rotation):
            if sorted(rot) != list(self.graph.adjacency[v]):
                raise GraphError(f"rotation at {v} is not a permutation of its neighbours")
        if not self._pos:
            pos = tuple({w: i for i, w in enumerate(rot)} for rot in self.rotation)
            object.__setattr__(self, "_pos", pos)
        if self.outer is not None and not self.graph.has_edge(*self.outer):
            raise GraphError(f"outer dart {self.outer} is not an edge")

    @property
    def n(self) -> int:
        return self.graph.n

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        rot = self.rotation[v]
        return v, rot[self._pos[v][u] - 1]

    def face_walk(self, dart: Dart) -> list[int]:
        """Vertices of the face on the left of ``dart``, starting at its tail."""
        walk = []
        d = dart
        while True:
            walk.append(d[0])
            d = self.next_dart(d)
            if d == dart:
                return walk
            if len(walk) > 2 * self.graph.m:
                raise GraphError("face walk does not close; rotation system inconsistent")

    def face_darts(self) -> dict[Dart, int]:
        """Map every dart to the index of the face on its left."""
        return self.trace_faces()[0]

    def trace_faces(self) -> tuple[dict[Dart, int], list[list[int]]]:
        """Dart-to-face map plus the vertex walk of each face."""
        owner: dict[Dart, int] = {}
        walks: list[list[int]] = []
        rot, pos = self.rotation, self._pos
        for u in range(self.n):
            for v in rot[u]:
                if (u, v) in owner:
                    continue
                idx = len(walks)
                walk = []
                a, b = u, v
                while (a, b) not in owner:
                    owner[(a, b)] = idx
                    walk.append(a)
                    a, b = b, rot[b][pos[b][a] - 1]
                if (a, b) != (u, v):
                    raise GraphError(f"dart {(a, b)} traced twice; rotation system inconsistent")
                walks.append(walk)
        return owner, walks


def faces(pg: PlaneGraph) -> list[Face]:
    """Trace all faces; each boundary is canonicalised to its least rotation.

    Raises GraphError if the rotation system is inconsistent or the graph
    violates Euler's relation for a connected plane graph.
    """
    if not pg.graph.is_connected():
        raise GraphError("faces() requires a connected plane graph")
    owner, walks = pg.trace_faces()
    outer_idx = owner[pg.outer] if pg.outer is not None else None
    out = [Face(canonical_cycle(w), f == outer_idx) for f, w in enumerate(walks)]
    g = pg.graph
    if g.n >= 1 and g.n - g.m + max(len(out), 1) != 2:
        raise GraphError(
            f"Euler relation fails: n={g.n}, m={g.m}, f={len(out)}; rotation is not planar"
        )
    return sorted(out, key=lambda f: (len(f.boundary), f.boundary))


def euler_ok(pg: PlaneGraph) -> bool:
    """Whether the rotation system realises a sphere embedding of every component."""
    g = pg.graph
    try:
        owner = pg.face_darts()
    except GraphError:
        return False
    comps = [c for c in g.components()]
    # face count summed over components: every component contributes n_c - m_c + f_c = 2
    face_comp: dict[int, int] = {}
    comp_of = {}
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    for (u, _), f in owner.items():
        face_comp[f] = comp_of[u]
    nf = [0] * len(comps)
    for ci in face_comp.values():
        nf[ci] += 1
    for i, c in enumerate(comps):
        mc = sum(len(g.adjacency[v]) for v in c) // 2
        fc = nf[i] if mc else 1
        if len(c) - mc + fc != 2:
            return False
    return True


def subgraph_check(sub: Graph, sup: Graph, vertex_map: Sequence[int] | Mapping[int, int]) -> bool:
    """True iff ``vertex_map`` sends every edge of ``sub`` to an edge of ``sup``."""
    if isinstance(vertex_map, Mapping):
        image = [vertex_map[v] for v in range(sub.n)]
    else:
        image = list(vertex_map)
    if len(image) != sub.n:
        raise ValueError("vertex map must cover every vertex of the subgraph")
    if len(set(image)) != len(image):
        raise ValueError("vertex map is not injective")
    if any(not 0 <= x < sup.n for x in image):
        raise ValueError("vertex map leaves the host graph")
    return all(sup.has_edge(image[u], image[v]) for u, v in sub.edges())
