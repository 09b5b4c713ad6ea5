import pytest
from hypothesis import given, settings, strategies as st

from prodstruct.graph import (
    GraphError,
    PlaneGraph,
    build_graph,
    canonical_cycle,
    euler_ok,
    faces,
    subgraph_check,
)
from prodstruct.planar import planar_embed

from conftest import complete, cycle


def test_triangle_has_three_edges():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3
    assert sum(g.degree(v) for v in range(3)) == 2 * g.m


def test_single_vertex():
    g = build_graph(1, [])
    assert (g.n, g.m) == (1, 0)


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(2, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 2)])


def test_duplicates_collapse():
    a = build_graph(3, [(0, 1), (1, 2)])
    b = build_graph(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 1)])
    assert a == b


def _hand_faces(pg):
    """Face walks traced directly from the rotation, one dart at a time."""
    darts = {(u, v) for u in range(pg.n) for v in pg.rotation[u]}
    out = []
    while darts:
        start = min(darts)
        walk, d = [], start
        while True:
            darts.discard(d)
            walk.append(d[0])
            u, v = d
            rot = list(pg.rotation[v])
            d = (v, rot[(rot.index(u) - 1) % len(rot)])
            if d == start:
                break
        out.append(canonical_cycle(walk))
    return sorted(out, key=lambda w: (len(w), w))


def test_triangle_faces():
    pg = planar_embed(cycle(3))
    fs = faces(pg)
    assert [len(f) for f in fs] == [3, 3]
    assert sum(f.is_outer for f in fs) == 1


def test_k4_faces(k4):
    pg = planar_embed(k4)
    fs = faces(pg)
    assert len(fs) == 4 and all(len(f) == 3 for f in fs)
    assert [f.boundary for f in fs] == _hand_faces(pg)


def test_four_cycle_faces():
    pg = planar_embed(cycle(4))
    fs = faces(pg)
    assert sorted(len(f) for f in fs) == [4, 4]
    assert [f.boundary for f in fs] == _hand_faces(pg)


def test_inconsistent_rotation_detected():
    # K4 rotation with one vertex's order reversed is a torus-like system
    g = complete(4)
    good = planar_embed(g)
    rot = list(good.rotation)
    rot[0] = tuple(reversed(rot[0]))
    bad = PlaneGraph(g, tuple(rot), good.outer)
    assert not euler_ok(bad)
    with pytest.raises(GraphError):
        faces(bad)


def test_faces_need_connected():
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    pg = planar_embed(g)
    with pytest.raises(GraphError):
        faces(pg)
    assert euler_ok(pg)


def test_subgraph_check():
    assert subgraph_check(cycle(3), complete(4), [3, 1, 0])
    path4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert not subgraph_check(cycle(4), path4, [0, 1, 2, 3])
    with pytest.raises(ValueError, match="injective"):
        subgraph_check(cycle(3), complete(4), [0, 0, 1])


def test_canonical_cycle():
    assert canonical_cycle([3, 1, 2]) == (1, 2, 3)
    assert canonical_cycle([2, 0, 5, 0, 1]) == (0, 1, 2, 0, 5)


def test_induced_relabels():
    g = complete(5)
    sub, index = g.induced([4, 2, 0])
    assert sub.n == 3 and sub.m == 3
    assert index == {4: 0, 2: 1, 0: 2}


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 40), st.integers(0, 10**6))
def test_face_sizes_sum_to_twice_edges(n, seed):
    from prodstruct.generators import stacked_triangulation

    pg = planar_embed(stacked_triangulation(n, seed))
    fs = faces(pg)
    assert sum(len(f) for f in fs) == 2 * pg.graph.m
    assert n - pg.graph.m + len(fs) == 2
    # every face walk is the same no matter which dart starts it
    for u in range(0, n, 7):
        for v in pg.rotation[u]:
            assert canonical_cycle(pg.face_walk((u, v))) in {f.boundary for f in fs}
