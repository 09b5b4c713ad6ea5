"""Partition of a near-triangulation into vertical paths with a 6-simple
tree-decomposition of the quotient.

The recursion works on regions of a rooted plane triangulation bounded by a
cycle ``F = [P_1, ..., P_k]`` (k <= 5) of vertical paths, listed so that the
region lies on the left of the walk. Each step

1. colours every region vertex by the boundary path containing its first
   tree ancestor on ``F`` (the k-colouring) and merges the paths into three
   consecutive groups ``R_1, R_2, R_3`` (the 3-colouring);
2. picks a trichromatic internal face ``tau = (v_1, v_2, v_3)``;
3. follows each ``v_i`` up the tree to its first boundary ancestor, giving
   paths ``Q_i``; ``Q_i`` minus its top vertex becomes a new part;
4. recurses into the up to three sub-regions cut off by ``tau`` and the
   ``Q_i``, and joins their decompositions through a hub bag (two bags
   ``y``, ``z`` when ``k = 5``).

Part ids are global: a boundary path of a sub-region that lies inside a
part of the parent carries that part's id directly, so the substitution of
external child paths is the identity at assembly time.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .graph import canonical_cycle
from .layering import BfsTree
from .planar import RootedTriangulation


class DecompositionError(RuntimeError):
    """An internal invariant failed; this indicates a bug upstream."""


@dataclass(frozen=True)
class NearTriangulation:
    """Region of ``host`` on the left of the cycle formed by ``boundary``.

    ``boundary`` lists the vertical paths ``P_1..P_k``, each as its vertices
    in the cyclic order of the walk.
    """

    host: RootedTriangulation
    boundary: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.boundary)

    @property
    def cycle(self) -> list[int]:
        return [v for p in self.boundary for v in p]

    def internal_faces(self) -> list[tuple[int, int, int]]:
        idx = _index(self.host)
        return [idx.faces[f] for f in idx.region_faces(self.cycle)]

    @property
    def vertices(self) -> set[int]:
        return {v for f in self.internal_faces() for v in f}


@dataclass
class RegionSplit:
    """Result of cutting a region along ``tau`` and the ancestor paths."""

    tau: tuple[int, int, int]
    Q: list[list[int]]  # Q_i from v_i up to v_i' (inclusive)
    R: list[list[int]]
    R_minus: list[list[int]]
    R_plus: list[list[int]]
    regions: list[list[tuple[int, list[int]]] | None]  # None marks a degenerate F_i

    @property
    def Q_prime(self) -> list[list[int]]:
        return [q[:-1] for q in self.Q]

    @property
    def terminals(self) -> list[int]:
        return [q[-1] for q in self.Q]


@dataclass
class DecompositionResult:
    parts: list[tuple[int, ...]]  # root-end first
    bags: list[frozenset[int]]
    tree_edges: list[tuple[int, int]]
    anchor: int
    boundary_ids: tuple[int, ...]
    trace: list[dict] = field(default_factory=list)

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1


class _HostIndex:
    """Face lookup for a plane triangulation."""

    def __init__(self, host: RootedTriangulation) -> None:
        pg = host.plane
        self.n = pg.n
        self.adj = [frozenset(a) for a in pg.graph.adjacency]
        owner, walks = pg.trace_faces()
        for walk in walks:
            if len(walk) != 3:
                raise DecompositionError(f"host face {walk} is not a triangle")
        self.faces = [tuple(w) for w in walks]
        self.face_of = owner
        self.outer = owner[pg.outer]

    def region_faces(self, cycle: Sequence[int]) -> list[int]:
        """Faces on the left of a simple cycle, by flood fill across non-cycle edges."""
        k = len(cycle)
        blocked = set()
        for i in range(k):
            a, b = cycle[i], cycle[(i + 1) % k]
            blocked.add((a, b))
            blocked.add((b, a))
        face_of = self.face_of
        faces = self.faces
        start = [face_of[(cycle[i], cycle[(i + 1) % k])] for i in range(k)]
        seen = set(start)
        stack = list(start)
        while stack:
            f = stack.pop()
            a, b, c = faces[f]
            for x, y in ((a, b), (b, c), (c, a)):
                if (x, y) in blocked:
                    continue
                g = face_of[(y, x)]
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        if self.outer in seen:
            raise DecompositionError("region flood reached the outer face")
        return sorted(seen)


def _index(host: RootedTriangulation) -> _HostIndex:
    idx = host.__dict__.get("_index")
    if idx is None:
        idx = _HostIndex(host)
        object.__setattr__(host, "_index", idx)
    return idx


# ---------------------------------------------------------------------------
# Individual steps
# ---------------------------------------------------------------------------


def first_boundary_ancestors(
    vertices: Sequence[int], on_f: dict[int, int], t: BfsTree
) -> dict[int, int]:
    """Map each vertex to the first vertex of its root path lying on the boundary."""
    region = set(vertices)
    anc: dict[int, int] = {v: v for v in on_f}
    for v in vertices:
        if v in anc:
            continue
        chain = []
        u = v
        while u not in anc:
            if u not in region:
                raise DecompositionError(f"root path of {v} leaves the region at {u}")
            chain.append(u)
            u = t.parent[u]
            if u == -1:
                raise DecompositionError(f"root path of {v} never meets the boundary")
        top = anc[u]
        for w in chain:
            anc[w] = top
    return anc


def k_colouring(nt: NearTriangulation, t: BfsTree) -> dict[int, int]:
    """Colour ``1..k`` by the boundary path holding the first boundary ancestor."""
    on_f = {v: i for i, p in enumerate(nt.boundary) for v in p}
    anc = first_boundary_ancestors(sorted(nt.vertices), on_f, t)
    return {v: on_f[a] + 1 for v, a in anc.items()}


def rotate_for_k5(k: int, colour_pairs: set[tuple[int, int]]) -> int:
    """Cyclic shift s so that relabelled classes 2 and 5 are non-adjacent.

    ``colour_pairs`` holds the adjacent colour pairs (1-based, both orders
    or either) of the contracted colour classes. New path ``P_i`` is old
    ``P_{i+s}``.
    """
    if k != 5:
        return 0
    pairs = {(a, b) for a, b in colour_pairs} | {(b, a) for a, b in colour_pairs}
    for s in range(5):
        a = (1 + s) % 5 + 1
        b = (4 + s) % 5 + 1
        if (a, b) not in pairs:
            return s
    raise DecompositionError("contracted colour classes form K5; contradicts planarity")


def group_paths(boundary: Sequence[Sequence[int]]) -> tuple[list[int], list[int], list[int]]:
    """Merge ``P_1..P_k`` into three consecutive groups ``R_1, R_2, R_3``.

    For ``k = 2`` the caller must already have rotated a path with at least
    two vertices into first position.
    """
    k = len(boundary)
    p = [list(x) for x in boundary]
    if k == 1:
        if len(p[0]) < 3:
            raise DecompositionError("a single-path boundary needs at least three vertices")
        return [p[0][0]], p[0][1:-1], [p[0][-1]]
    if k == 2:
        if len(p[0]) < 2:
            raise DecompositionError("first path of a two-path boundary has one vertex")
        return [p[0][0]], p[0][1:], p[1]
    if k == 3:
        return p[0], p[1], p[2]
    if k == 4:
        return p[0], p[1], p[2] + p[3]
    if k == 5:
        return p[0], p[1] + p[2], p[3] + p[4]
    raise DecompositionError(f"boundary has {k} paths; at most 5 allowed")


def find_trichromatic_face(
    faces: Sequence[Sequence[int]], colour: dict[int, int]
) -> tuple[int, int, int]:
    """Least (canonically rotated) face whose three vertices get three colours.

    Returned in colour order. Colours may be 0-based or 1-based.
    """
    best = None
    for f in faces:
        if len({colour[v] for v in f}) == 3:
            key = canonical_cycle(f)
            if best is None or key < best:
                best = key
    if best is None:
        raise DecompositionError("no trichromatic face; the boundary colouring is not Sperner")
    return tuple(sorted(best, key=lambda v: colour[v]))  # type: ignore[return-value]


def ancestor_paths(tau: Sequence[int], t: BfsTree, on_f: dict[int, int] | set[int]) -> list[list[int]]:
    """For each face vertex, the tree path up to (and including) its first boundary ancestor."""
    out = []
    for v in tau:
        q = [v]
        while q[-1] not in on_f:
            q.append(t.parent[q[-1]])
            if q[-1] == -1:
                raise DecompositionError(f"root path of {v} never meets the boundary")
        out.append(q)
    return out


def split_regions(
    tau: Sequence[int],
    Q: list[list[int]],
    R: Sequence[Sequence[int]],
    owner: dict[int, int],
    part_pos: dict[int, int],
    q_ids: Sequence[int | None],
) -> RegionSplit:
    """Cut along ``tau`` and the ``Q_i`` into sub-boundaries ``F_1, F_2, F_3``.

    ``owner`` maps boundary vertices to their part id and ``part_pos`` gives
    each vertex's index within its part; ``q_ids[i]`` is the id assigned to
    ``Q_i'`` (``None`` if it is empty). Each sub-boundary is returned as a
    list of ``(part id, vertices in walk order)`` pieces, merging runs that
    are contiguous inside one part.
    """
    r_minus, r_plus = [], []
    for i in range(3):
        ri = list(R[i])
        j = ri.index(Q[i][-1])
        r_minus.append(ri[: j + 1])
        r_plus.append(ri[j:])
    regions: list[list[tuple[int, list[int]]] | None] = []
    for i in range(3):
        j = (i + 1) % 3
        seq = [(v, owner[v]) for v in r_plus[i]]
        seq += [(v, owner[v]) for v in r_minus[j]]
        seq += [(v, q_ids[j]) for v in Q[j][-2::-1]]
        seq += [(v, q_ids[i]) for v in Q[i][:-1]]
        if len(seq) == 2:
            regions.append(None)
            continue
        pieces: list[tuple[int, list[int]]] = []
        for v, pid in seq:
            if pieces and pieces[-1][0] == pid and abs(part_pos[pieces[-1][1][-1]] - part_pos[v]) == 1:
                pieces[-1][1].append(v)
            else:
                pieces.append((pid, [v]))
        if len(pieces) > 1:
            (p0, first), (pl, last) = pieces[0], pieces[-1]
            if p0 == pl and abs(part_pos[last[-1]] - part_pos[first[0]]) == 1:
                pieces = [(p0, last + first)] + pieces[1:-1]
        if len(pieces) > 5:
            raise DecompositionError(f"sub-boundary F_{i + 1} needs {len(pieces)} vertical paths")
        regions.append(pieces)
    return RegionSplit(tuple(tau), Q, [list(r) for r in R], r_minus, r_plus, regions)  # type: ignore[arg-type]


def hub_bags(
    k: int, pids: Sequence[int], q_ids: Sequence[int | None], branch: str = "hub"
) -> tuple[list[frozenset[int]], list[tuple[int, int]], list[int], int]:
    """Bags joining the boundary paths and the new parts.

    Returns ``(bags, internal edges, attach index per sub-region, anchor
    index)``, all indices local to the returned bag list.
    """
    q = [x for x in q_ids]
    qs = lambda *idx: {q[i] for i in idx if q[i] is not None}  # noqa: E731
    if branch == "hub":
        return [frozenset(pids) | frozenset(qs(0, 1, 2))], [], [0, 0, 0], 0
    if k != 5:
        raise DecompositionError("the y/z rebuild applies only to five boundary paths")
    p = list(pids)
    if branch == "k5":
        y = frozenset(p[:4]) | qs(0, 1, 2)
        z = frozenset(p) | qs(0, 2)
        return [y, z], [(0, 1)], [0, 0, 1], 1
    if branch == "k5-mirror":
        y = frozenset([p[0], p[2], p[3], p[4]]) | qs(0, 1, 2)
        z = frozenset(p) | qs(0, 1)
        return [y, z], [(0, 1)], [1, 0, 0], 1
    raise DecompositionError(f"unknown hub branch {branch!r}")


# ---------------------------------------------------------------------------
# Recursion
# ---------------------------------------------------------------------------


@dataclass
class _Task:
    pieces: list[tuple[int, list[int]]]
    attach: int | None
    depth: int
    excluded: int | None = None


def near_triang_partition(nt: NearTriangulation, t: BfsTree) -> DecompositionResult:
    """Partition the region into vertical paths with a 6-simple decomposition.

    The boundary paths become parts ``0..k-1``. The anchor bag contains all
    of them.
    """
    idx = _index(nt.host)
    parts: list[tuple[int, ...]] = []
    part_pos: dict[int, int] = {}
    part_of: dict[int, int] = {}

    def new_part(vs: Sequence[int]) -> int:
        pid = len(parts)
        root_first = tuple(vs)
        if len(root_first) > 1 and t.depth[root_first[0]] > t.depth[root_first[-1]]:
            root_first = root_first[::-1]
        for i, v in enumerate(root_first):
            if v in part_of:
                raise DecompositionError(f"vertex {v} assigned to two parts")
            part_pos[v] = i
            part_of[v] = pid
        parts.append(root_first)
        return pid

    for p in nt.boundary:
        for a, b in zip(p, p[1:]):
            if not t.is_tree_edge(a, b):
                raise DecompositionError(f"boundary path {list(p)} is not vertical")
    root_pieces = [(new_part(p), list(p)) for p in nt.boundary]
    boundary_ids = tuple(pid for pid, _ in root_pieces)

    bags: list[frozenset[int]] = []
    tree_edges: list[tuple[int, int]] = []
    trace: list[dict] = []
    anchor_of_root: int | None = None

    stack = [_Task(root_pieces, None, 0)]
    while stack:
        task = stack.pop()
        pieces = task.pieces
        k = len(pieces)
        if not 1 <= k <= 5:
            raise DecompositionError(f"region boundary has {k} paths")
        cycle = [v for _, vs in pieces for v in vs]
        faces = idx.region_faces(cycle)
        verts = sorted({v for f in faces for v in idx.faces[f]})
        if task.excluded is not None and task.excluded in verts:
            raise DecompositionError("sub-region contains the opposite vertex of tau")
        rec = {"depth": task.depth, "n": len(verts), "k": k}

        if len(verts) == 3:
            node = len(bags)
            bags.append(frozenset(pid for pid, _ in pieces))
            if task.attach is not None:
                tree_edges.append((task.attach, node))
            else:
                anchor_of_root = node
            rec.update(kind="base", bag_sizes=[len(bags[node])], children=[], degenerate=0)
            trace.append(rec)
            continue

        on_f = {v: i for i, (_, vs) in enumerate(pieces) for v in vs}
        anc = first_boundary_ancestors(verts, on_f, t)

        shift = 0
        if k == 5:
            kc = {v: on_f[anc[v]] + 1 for v in verts}
            pairs = set()
            for f in faces:
                a, b, c = idx.faces[f]
                for x, y in ((a, b), (b, c), (c, a)):
                    if kc[x] != kc[y]:
                        pairs.add((kc[x], kc[y]))
            shift = rotate_for_k5(5, pairs)
        elif k == 2 and len(pieces[0][1]) < 2:
            shift = 1
        if shift:
            pieces = pieces[shift:] + pieces[:shift]
            on_f = {v: i for i, (_, vs) in enumerate(pieces) for v in vs}
        rec["shift"] = shift

        R = group_paths([vs for _, vs in pieces])
        group = {v: i for i, r in enumerate(R) for v in r}
        three = {v: group[anc[v]] for v in verts}
        tau = find_trichromatic_face([idx.faces[f] for f in faces], three)
        Q = ancestor_paths(tau, t, on_f)
        for i, q in enumerate(Q):
            if any(three[v] != i for v in q):
                raise DecompositionError(f"ancestor path Q_{i + 1} changes colour")

        owner = {v: pid for pid, vs in pieces for v in vs}
        q_ids = [new_part(q[:-1]) if len(q) > 1 else None for q in Q]
        split = split_regions(tau, Q, R, owner, part_pos, q_ids)

        pids = [pid for pid, _ in pieces]
        branch = "hub"
        if k == 5:
            tops = [on_f[q[-1]] for q in Q]
            if tops[2] == 3:
                branch = "k5"
                _assert_no_edge(idx, Q[1][:-1], pieces[4][1], "Q_2'", "P_5")
            elif tops[1] == 2:
                branch = "k5-mirror"
                _assert_no_edge(idx, Q[2][:-1], pieces[1][1], "Q_3'", "P_2")
            else:
                raise DecompositionError("k=5 without the 2-5 non-adjacency guarantee")
        local_bags, local_edges, attach_at, anchor_local = hub_bags(k, pids, q_ids, branch)
        base = len(bags)
        bags.extend(local_bags)
        tree_edges.extend((base + a, base + b) for a, b in local_edges)
        anchor = base + anchor_local
        if not set(pids) <= bags[anchor]:
            raise DecompositionError("anchor bag misses a boundary path")
        if task.attach is not None:
            tree_edges.append((task.attach, anchor))
        else:
            anchor_of_root = anchor

        children = []
        for i in reversed(range(3)):
            sub = split.regions[i]
            if sub is None:
                continue
            children.append(len(sub))
            stack.append(_Task(sub, base + attach_at[i], task.depth + 1, tau[(i + 2) % 3]))
        rec.update(
            kind=branch,
            bag_sizes=[len(b) for b in local_bags],
            children=children[::-1],
            degenerate=sum(1 for s in split.regions if s is None),
        )
        trace.append(rec)

    missing = [v for v in range(nt.host.plane.n) if v not in part_of]
    region = nt.vertices
    missing = [v for v in missing if v in region]
    if missing:
        raise DecompositionError(f"vertices {missing[:5]} not covered by the partition")
    assert anchor_of_root is not None
    return DecompositionResult(parts, bags, tree_edges, anchor_of_root, boundary_ids, trace)


def _assert_no_edge(idx: _HostIndex, a: Sequence[int], b: Sequence[int], na: str, nb: str) -> None:
    bs = set(b)
    for v in a:
        if idx.adj[v] & bs:
            raise DecompositionError(f"edge between {na} and {nb} at vertex {v}")


def decompose_triangulation(host: RootedTriangulation, t: BfsTree) -> DecompositionResult:
    """Run the recursion from the outer face of ``host``."""
    pg = host.plane
    a, b, c = pg.face_walk(pg.outer)
    if host.root not in (a, b, c):
        raise DecompositionError("root is not on the outer face")
    # reversed outer walk has the interior on its left
    nt = NearTriangulation(host, ((a,), (c,), (b,)))
    return near_triang_partition(nt, t)


def summarize_trace(trace: Sequence[dict]) -> dict:
    kinds = Counter(r["kind"] for r in trace)
    ks = Counter(r["k"] for r in trace)
    return {
        "nodes": len(trace),
        "k_counts": {str(k): ks.get(k, 0) for k in range(1, 6)},
        "k5_hubs": kinds.get("k5", 0) + kinds.get("k5-mirror", 0),
        "mirror": kinds.get("k5-mirror", 0),
        "k5_full": sum(1 for r in trace if r["kind"].startswith("k5") and r["bag_sizes"] == [7, 7]),
        "degenerate": sum(r.get("degenerate", 0) for r in trace),
        "max_depth": max((r["depth"] for r in trace), default=0),
    }
