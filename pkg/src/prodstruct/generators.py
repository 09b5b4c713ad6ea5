"""Seeded random planar graph models."""

from __future__ import annotations

import random
from dataclasses import dataclass

import networkx as nx

from .graph import Graph, build_graph

MODELS = ("stacked", "edge-addition", "grid-like")


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    seed: int = 0
    budget: int = 10


def stacked_triangulation(n: int, seed: int = 0) -> Graph:
    """Start from a triangle; insert each new vertex into a random face."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 3:
        return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])
    rng = random.Random(seed)
    # both sides of the initial triangle are faces
    faces = [(0, 1, 2), (0, 2, 1)]
    edges = [(0, 1), (1, 2), (0, 2)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.append((b, c, v))
        faces.append((c, a, v))
        edges += [(a, v), (b, v), (c, v)]
    return build_graph(n, edges)


def _kernel(adj: list[set[int]]) -> nx.Graph:
    """Topological kernel: prune degree <= 1 repeatedly, then smooth degree-2 chains.

    The result is planar iff the input is (loops and parallel edges dropped).
    """
    deg = [len(a) for a in adj]
    alive = [True] * len(adj)
    stack = [v for v, d in enumerate(deg) if d <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    k = nx.Graph()
    for b in range(len(adj)):
        if not alive[b] or deg[b] < 3:
            continue
        k.add_node(b)
        for w in adj[b]:
            if not alive[w]:
                continue
            prev, cur = b, w
            while deg[cur] == 2:
                nxt = next(x for x in adj[cur] if alive[x] and x != prev)
                prev, cur = cur, nxt
            if cur != b:
                k.add_edge(b, cur)
    return k


def edge_addition_planar(n: int, seed: int = 0, budget: int = 10) -> Graph:
    """Add uniformly random non-edges that keep the graph planar.

    Stops after ``budget`` consecutive rejections or at 3n - 6 edges.
    Candidates joining two components are always planar and skip the test;
    the others are tested on the topological kernel of the enlarged graph.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    m = 0
    comp = list(range(n))

    def find(x: int) -> int:
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    max_m = 3 * n - 6 if n >= 3 else n * (n - 1) // 2
    fails = 0
    while m < max_m and fails < budget:
        u, v = rng.sample(range(n), 2)
        if v in adj[u]:
            continue
        ru, rv = find(u), find(v)
        adj[u].add(v)
        adj[v].add(u)
        if ru != rv:
            comp[ru] = rv
        elif not nx.check_planarity(_kernel(adj))[0]:
            adj[u].discard(v)
            adj[v].discard(u)
            fails += 1
            continue
        m += 1
        fails = 0
    return build_graph(n, [(a, b) for a in range(n) for b in adj[a] if a < b])


def grid_like(n: int, seed: int = 0, keep: float = 0.9, diagonal: float = 0.5) -> Graph:
    """First ``n`` cells of a near-square grid with random deletions and diagonals."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    cols = max(1, int(round(n ** 0.5)))
    edges = []
    for v in range(n):
        r, c = divmod(v, cols)
        right, down = v + 1, v + cols
        if c + 1 < cols and right < n and rng.random() < keep:
            edges.append((v, right))
        if down < n and rng.random() < keep:
            edges.append((v, down))
        if c + 1 < cols and down + 1 < n and rng.random() < diagonal:
            edges.append((v, down + 1) if rng.random() < 0.5 else (right, down))
    return build_graph(n, edges)


def generate(spec: GenSpec) -> Graph:
    if spec.model == "stacked":
        return stacked_triangulation(spec.n, spec.seed)
    if spec.model == "edge-addition":
        return edge_addition_planar(spec.n, spec.seed, spec.budget)
    if spec.model == "grid-like":
        return grid_like(spec.n, spec.seed)
    raise ValueError(f"unknown model {spec.model!r}; choose from {', '.join(MODELS)}")
