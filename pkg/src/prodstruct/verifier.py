"""Independent checks of a certificate and brute-force oracles.

Nothing here looks at decomposer internals; every claim is re-derived from
the certificate and the input graph.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, PlaneGraph, canonical_cycle
from .planar import NonPlanarWitness, planar_embed
from .product import Decomposition, ProductCertificate, QuotientGraph, quotient, strong_product_adjacent

MAX_EXACT_TW = 12


@dataclass
class VerificationReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    observed_width: int = -1
    simplicity_ok: bool = False
    embedding_ok: bool = False

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def add(self, name: str, result: tuple[bool, str]) -> bool:
        self.checks.append((name, result[0], result[1]))
        return result[0]

    def failures(self) -> list[tuple[str, str]]:
        return [(n, d) for n, ok, d in self.checks if not ok]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "observed_width": self.observed_width,
            "simplicity_ok": self.simplicity_ok,
            "embedding_ok": self.embedding_ok,
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
        }


def _tree_ok(n_nodes: int, edges: Sequence[tuple[int, int]]) -> tuple[bool, str]:
    if n_nodes == 0:
        return False, "decomposition has no bags"
    if len(edges) != n_nodes - 1:
        return False, f"{n_nodes} nodes but {len(edges)} tree edges"
    adj: list[list[int]] = [[] for _ in range(n_nodes)]
    for a, b in edges:
        if not (0 <= a < n_nodes and 0 <= b < n_nodes) or a == b:
            return False, f"bad tree edge ({a}, {b})"
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n_nodes:
        return False, f"tree is disconnected: node {min(set(range(n_nodes)) - seen)} unreachable"
    return True, ""


def check_tree_decomposition(h: QuotientGraph | Graph, dec: Decomposition) -> tuple[bool, str]:
    """Both axioms: every H-edge in some bag; every vertex's bags form a subtree."""
    ok, detail = _tree_ok(len(dec.bags), dec.tree_edges)
    if not ok:
        return ok, detail
    if isinstance(h, QuotientGraph):
        nv, edges = h.size, h.edges
    else:
        nv, edges = h.n, h.edges()
    holders: list[list[int]] = [[] for _ in range(nv)]
    for x, bag in enumerate(dec.bags):
        for a in bag:
            if not 0 <= a < nv:
                return False, f"bag {x} holds unknown vertex {a}"
            holders[a].append(x)
    for a in range(nv):
        if not holders[a]:
            return False, f"(b) vertex {a} is in no bag"
    for a, b in edges:
        hb = set(holders[b])
        if not any(x in hb for x in holders[a]):
            return False, f"(a) edge ({a}, {b}) is in no bag"
    adj: list[list[int]] = [[] for _ in range(len(dec.bags))]
    for x, y in dec.tree_edges:
        adj[x].append(y)
        adj[y].append(x)
    for a in range(nv):
        nodes = set(holders[a])
        start = holders[a][0]
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w in nodes and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(nodes):
            return False, f"(b) bags holding vertex {a} are not connected: {sorted(nodes)}"
    return True, ""


def check_simple(dec: Decomposition, k: int = 6) -> tuple[bool, str]:
    """Width at most k and every k-set inside at most two bags."""
    for x, bag in enumerate(dec.bags):
        if len(bag) > k + 1:
            return False, f"bag {x} has {len(bag)} > {k + 1} vertices"
    tally: Counter[tuple[int, ...]] = Counter()
    for bag in dec.bags:
        if len(bag) >= k:
            tally.update(combinations(sorted(bag), k))
    for s, c in tally.items():
        if c > 2:
            return False, f"{k}-set {list(s)} lies in {c} bags"
    return True, ""


def check_bfs(g: Graph, parent: Sequence[int], depth: Sequence[int]) -> tuple[bool, str]:
    """Parents are graph edges and depths equal true distances to each root."""
    roots = [v for v in range(g.n) if parent[v] == -1]
    dist = [-1] * g.n
    queue = deque(roots)
    for r in roots:
        dist[r] = 0
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    for v in range(g.n):
        p = parent[v]
        if p != -1 and not g.has_edge(v, p):
            return False, f"parent of {v} is {p}, not a neighbour"
        if p != -1 and depth[v] != depth[p] + 1:
            return False, f"depth of {v} is not one more than its parent's"
        if depth[v] != dist[v]:
            return False, f"depth of {v} is {depth[v]} but its distance is {dist[v]}"
    comp_roots = Counter()
    for c in g.components():
        rs = [v for v in c if parent[v] == -1]
        if len(rs) != 1:
            return False, f"component of {c[0]} has {len(rs)} roots"
        comp_roots[rs[0]] += 1
    return True, ""


def check_partition(g: Graph, parent: Sequence[int], parts: Sequence[Sequence[int]]) -> tuple[bool, str]:
    """Exact cover of V(g) by paths that go parent -> child in the tree."""
    seen = [False] * g.n
    for i, p in enumerate(parts):
        if not p:
            return False, f"part {i} is empty"
        for v in p:
            if not 0 <= v < g.n:
                return False, f"part {i} has unknown vertex {v}"
            if seen[v]:
                return False, f"vertex {v} covered twice"
            seen[v] = True
        down = all(parent[p[j + 1]] == p[j] for j in range(len(p) - 1))
        up = all(parent[p[j]] == p[j + 1] for j in range(len(p) - 1))
        if not (down or up):
            return False, f"part {i} = {list(p)} is not vertical"
    missing = [v for v in range(g.n) if not seen[v]]
    if missing:
        return False, f"vertex {missing[0]} is not covered"
    return True, ""


def check_embedding(cert: ProductCertificate) -> tuple[bool, str]:
    """v -> (part, layer) is injective and maps edges onto H x P edges."""
    g, h = cert.graph, cert.quotient
    images: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        im = (h.part_of[v], cert.layers[v])
        if im[0] < 0 or not 0 <= im[1] < cert.path_length:
            return False, f"vertex {v} maps outside H x P: {im}"
        if im in images:
            return False, f"vertices {images[im]} and {v} both map to {im}"
        images[im] = v
    for u, v in g.edges():
        if not strong_product_adjacent(cert.image(u), cert.image(v), h):
            return False, f"edge ({u}, {v}) maps to non-adjacent {cert.image(u)}, {cert.image(v)}"
    return True, ""


def check_quotient(cert: ProductCertificate) -> tuple[bool, str]:
    try:
        fresh = quotient(cert.graph, cert.quotient.parts)
    except ValueError as exc:
        return False, str(exc)
    if fresh.edges != tuple(sorted(cert.quotient.edges)):
        extra = set(cert.quotient.edges) ^ set(fresh.edges)
        return False, f"quotient edges differ from recomputation at {sorted(extra)[:3]}"
    if tuple(fresh.part_of) != tuple(cert.quotient.part_of):
        return False, "part_of disagrees with the parts"
    for e, (u, v) in cert.quotient.witnesses.items():
        if not cert.graph.has_edge(u, v):
            return False, f"witness {(u, v)} of H-edge {e} is not a G-edge"
    return True, ""


def check_quotient_planar(cert: ProductCertificate) -> tuple[bool, str]:
    res = planar_embed(cert.quotient.as_graph())
    if isinstance(res, NonPlanarWitness):
        return False, f"quotient is not planar: {res.summary()}"
    return True, ""


def check_anchors(dec: Decomposition) -> tuple[bool, str]:
    for anchor, bd in zip(dec.anchors, dec.boundaries):
        if not 0 <= anchor < len(dec.bags):
            return False, f"anchor {anchor} is not a node"
        missing = set(bd) - dec.bags[anchor]
        if missing:
            return False, f"anchor bag {anchor} misses boundary parts {sorted(missing)}"
    return True, ""


def verify_certificate(cert: ProductCertificate, k: int = 6, planarity: bool = True) -> VerificationReport:
    """Run every check; failures carry a minimal witness in their detail."""
    rep = VerificationReport()
    g = cert.graph
    rep.add("bfs_tree", check_bfs(g, cert.parent, cert.bfs_depth))
    rep.add("partition", check_partition(g, cert.parent, cert.quotient.parts))
    rep.add("quotient", check_quotient(cert))
    rep.embedding_ok = rep.add("embedding", check_embedding(cert))
    dec = cert.decomposition
    if dec is None:
        rep.add("decomposition", (False, "certificate has no decomposition"))
        return rep
    rep.observed_width = dec.width
    rep.add("tree_decomposition", check_tree_decomposition(cert.quotient, dec))
    rep.add("width", (dec.width <= k, f"width {dec.width}"))
    rep.simplicity_ok = rep.add("simple", check_simple(dec, k))
    rep.add("anchor", check_anchors(dec))
    if planarity:
        rep.add("quotient_planar", check_quotient_planar(cert))
    return rep


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


def exact_treewidth(g: Graph) -> int:
    """Treewidth by dynamic programming over vertex subsets.

    TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v)
    is the set of vertices outside S and v reachable from v through S.
    """
    n = g.n
    if n > MAX_EXACT_TW:
        raise ValueError(f"exact_treewidth supports at most {MAX_EXACT_TW} vertices, got {n}")
    if n == 0:
        return -1
    nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1

    def q_size(s: int, v: int) -> int:
        # vertices outside s | {v} reachable from v via s
        reach = 0
        frontier = nbr[v]
        inside_seen = 1 << v
        while frontier:
            inside = frontier & s & ~inside_seen
            reach |= frontier & ~s & ~(1 << v)
            inside_seen |= inside
            nxt = 0
            x = inside
            while x:
                b = x & -x
                nxt |= nbr[b.bit_length() - 1]
                x ^= b
            frontier = nxt & ~inside_seen
        return bin(reach).count("1")

    @lru_cache(maxsize=None)
    def tw(s: int) -> int:
        if s == 0:
            return -1
        best = n
        x = s
        while x:
            b = x & -x
            v = b.bit_length() - 1
            rest = s ^ b
            best = min(best, max(tw(rest), q_size(rest, v)))
            x ^= b
        return best

    return tw(full)


def _arcs(boundary: Sequence[int], colour: dict[int, int]) -> list[int] | None:
    """Colours of the maximal monochromatic arcs of a cyclic boundary."""
    cols = [colour[v] for v in boundary]
    k = len(cols)
    start = next((i for i in range(k) if cols[i] != cols[i - 1]), None)
    if start is None:
        return [cols[0]]
    arcs = []
    for i in range(k):
        c = cols[(start + i) % k]
        if not arcs or arcs[-1] != c:
            arcs.append(c)
    return arcs


def sperner_hypothesis(boundary: Sequence[int], colour: dict[int, int]) -> bool:
    arcs = _arcs(boundary, colour)
    return arcs is not None and len(arcs) == 3 and len(set(arcs)) == 3


def sperner_oracle(
    faces: Iterable[Sequence[int]], boundary: Sequence[int], colour: dict[int, int]
) -> tuple[int, bool, list[tuple[int, ...]]]:
    """Count internal trichromatic faces by exhaustive scan.

    Returns ``(count, hypothesis_ok, faces)`` where ``faces`` are the
    trichromatic faces in canonical rotation.
    """
    found = [canonical_cycle(f) for f in faces if len({colour[v] for v in f}) == 3]
    return len(found), sperner_hypothesis(boundary, colour), sorted(found)


def embedding_is_planar(pg: PlaneGraph) -> bool:
    from .graph import euler_ok

    return euler_ok(pg)
