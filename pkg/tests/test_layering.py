import pytest
from hypothesis import given, settings, strategies as st

from prodstruct.generators import grid_like, stacked_triangulation
from prodstruct.graph import build_graph
from prodstruct.layering import LayeringError, as_vertical, bfs_tree, is_vertical, split_into_vertical

from conftest import cycle


def test_triangle_depths():
    assert bfs_tree(cycle(3), 0).depth == (0, 1, 1)


def test_path_parents():
    t = bfs_tree(build_graph(3, [(0, 1), (1, 2)]), 0)
    assert t.parent == (-1, 0, 1)
    assert t.depth == (0, 1, 2)


def test_four_cycle_depths():
    assert bfs_tree(cycle(4), 0).depth == (0, 1, 2, 1)


def test_disconnected_names_vertex():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(LayeringError, match="2"):
        bfs_tree(g, 0)


def test_is_vertical_cases():
    t = bfs_tree(build_graph(5, [(0, 1), (1, 2), (0, 3), (3, 4)]), 0)
    assert is_vertical([3], t)
    assert is_vertical([0, 1, 2], t)
    assert not is_vertical([1, 3], t)
    assert not is_vertical([], t)
    vp = as_vertical([2, 1, 0], t)
    assert vp.vertices == (0, 1, 2) and vp.base_depth == 0


def test_split_valley_walk():
    # 1 <- 0 -> 3, each with one child
    t = bfs_tree(build_graph(5, [(0, 1), (1, 2), (0, 3), (3, 4)]), 0)
    assert len(split_into_vertical([0, 1, 2], t)) == 1
    walk = [2, 1, 0, 3, 4]
    runs = split_into_vertical(walk, t)
    assert len(runs) == 2
    assert _rejoin(walk, runs) == walk


def _rejoin(walk, runs):
    out = []
    for r in runs:
        vs = list(r.vertices)
        if vs[0] != walk[len(out)]:
            vs.reverse()
        out += vs
    return out


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 60), st.integers(0, 10**6))
def test_split_reproduces_face_walks(n, seed):
    from prodstruct.planar import planar_embed

    g = stacked_triangulation(n, seed)
    t = bfs_tree(g, 0)
    pg = planar_embed(g)
    for u in range(n):
        walk = pg.face_walk((u, pg.rotation[u][0]))
        runs = split_into_vertical(walk, t)
        assert all(is_vertical(r.vertices, t) for r in runs)
        assert _rejoin(walk, runs) == walk


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 80), st.integers(0, 10**6))
def test_depth_is_distance(n, seed):
    import networkx as nx

    g = stacked_triangulation(n, seed) if seed % 2 else grid_like(n, seed)
    if not g.is_connected():
        return
    r = seed % n
    t = bfs_tree(g, r)
    ref = nx.single_source_shortest_path_length(nx.Graph(g.edges()), r)
    assert all(t.depth[v] == ref[v] for v in range(n))
    for u, v in g.edges():
        assert abs(t.depth[u] - t.depth[v]) <= 1
    for v in range(n):
        path = t.path_to_root(v)
        assert is_vertical(path[::-1], t)
