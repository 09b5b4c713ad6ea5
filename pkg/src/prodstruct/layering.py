"""BFS spanning trees and vertical paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


class LayeringError(ValueError):
    pass


@dataclass(frozen=True)
class BfsTree:
    """Rooted spanning tree; ``parent[root] == -1``."""

    root: int
    parent: tuple[int, ...]
    depth: tuple[int, ...]

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[out[-1]] != -1:
            out.append(self.parent[out[-1]])
        return out

    def is_tree_edge(self, u: int, v: int) -> bool:
        return self.parent[u] == v or self.parent[v] == u


@dataclass(frozen=True)
class VerticalPath:
    """A path stored shallowest vertex first."""

    vertices: tuple[int, ...]
    base_depth: int

    def __len__(self) -> int:
        return len(self.vertices)


def bfs_tree(g: Graph, r: int) -> BfsTree:
    """Breadth-first tree exploring neighbours in ascending id order."""
    if not 0 <= r < g.n:
        raise LayeringError(f"root {r} out of range")
    parent = [-1] * g.n
    depth = [-1] * g.n
    depth[r] = 0
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                queue.append(w)
    missing = [v for v in range(g.n) if depth[v] < 0]
    if missing:
        raise LayeringError(f"graph is disconnected: vertex {missing[0]} unreachable from {r}")
    return BfsTree(r, tuple(parent), tuple(depth))


def is_vertical(p: Sequence[int], t: BfsTree) -> bool:
    """Non-empty, consecutive entries parent->child, depths rising by one."""
    if not p:
        return False
    return all(t.parent[p[i + 1]] == p[i] for i in range(len(p) - 1))


def as_vertical(p: Sequence[int], t: BfsTree) -> VerticalPath:
    """Orient ``p`` root-end first, raising if it is not vertical."""
    seq = list(p)
    if len(seq) > 1 and t.depth[seq[0]] > t.depth[seq[-1]]:
        seq.reverse()
    if not is_vertical(seq, t):
        raise LayeringError(f"path {list(p)} is not vertical")
    return VerticalPath(tuple(seq), t.depth[seq[0]])


def split_into_vertical(walk: Sequence[int], t: BfsTree) -> list[VerticalPath]:
    """Greedily cut a walk into maximal vertical runs.

    Each run is a maximal stretch of consecutive tree edges all going down
    or all going up; runs are returned root-end first, in walk order.
    """
    if not walk:
        raise LayeringError("cannot split an empty walk")
    if len(set(walk)) != len(walk):
        raise LayeringError("walk repeats a vertex")
    runs: list[list[int]] = [[walk[0]]]
    direction = 0  # +1 going down, -1 going up, 0 undecided
    for prev, cur in zip(walk, walk[1:]):
        step = 1 if t.parent[cur] == prev else -1 if t.parent[prev] == cur else 0
        if step and (direction in (0, step)):
            runs[-1].append(cur)
            direction = step
        else:
            runs.append([cur])
            direction = 0
    return [as_vertical(run, t) for run in runs]
