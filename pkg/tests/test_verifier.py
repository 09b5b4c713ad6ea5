import random
from dataclasses import replace

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from prodstruct.generators import grid_like, stacked_triangulation
from prodstruct.graph import build_graph
from prodstruct.pipeline import decompose
from prodstruct.product import Decomposition, QuotientGraph
from prodstruct.verifier import (
    check_partition,
    check_simple,
    check_tree_decomposition,
    exact_treewidth,
    sperner_oracle,
    verify_certificate,
)

from conftest import K33_EDGES, complete, cycle, grid


def dec(bags, edges=()):
    return Decomposition(tuple(frozenset(b) for b in bags), tuple(edges))


def test_single_bag_decomposition():
    g = cycle(5)
    d = dec([range(5)])
    assert check_tree_decomposition(g, d) == (True, "")
    assert d.width == 4


def test_missing_edge_named():
    ok, detail = check_tree_decomposition(cycle(4), dec([{0, 1, 2}, {2, 3}], [(0, 1)]))
    assert not ok and "(0, 3)" in detail


def test_disconnected_occurrences():
    g = build_graph(3, [(0, 1), (1, 2)])
    ok, detail = check_tree_decomposition(g, dec([{0, 1}, {1, 2}, {0}], [(0, 1), (1, 2)]))
    assert not ok and detail.startswith("(b) bags holding vertex 0")


def test_not_a_tree():
    ok, _ = check_tree_decomposition(cycle(3), dec([{0, 1, 2}, {0}], []))
    assert not ok


def test_three_equal_six_bags_not_simple():
    ok, detail = check_simple(dec([range(6)] * 3, [(0, 1), (1, 2)]))
    assert not ok and "3 bags" in detail


def test_small_intersections_simple():
    bags = [set(range(i, i + 7)) for i in range(0, 20, 2)]
    assert check_simple(dec(bags)) == (True, "")


def test_two_equal_seven_bags_simple():
    assert check_simple(dec([range(7), range(7)]))[0]


def test_oversized_bag():
    ok, detail = check_simple(dec([range(8)]))
    assert not ok and "8" in detail


def test_partition_checks():
    g = build_graph(3, [(0, 1), (0, 2)])
    parent = (-1, 0, 0)
    assert not check_partition(g, parent, [[0, 1]])[0]
    ok, detail = check_partition(g, parent, [[0], [1, 2]])
    assert not ok and "not vertical" in detail
    assert check_partition(g, parent, [[0, 2], [1]])[0]


def test_pipeline_output_passes():
    rep = verify_certificate(decompose(stacked_triangulation(40, 1)))
    assert rep.ok and rep.simplicity_ok and rep.embedding_ok
    assert rep.observed_width <= 6


def test_tampered_layer_fails():
    cert = decompose(grid_like(40, 3))
    layers = list(cert.layers)
    layers[5] += 2
    rep = verify_certificate(replace(cert, layers=tuple(layers), path_length=cert.path_length + 2))
    assert not rep.embedding_ok
    assert any(name == "embedding" for name, _ in rep.failures())


def test_duplicated_image_fails():
    g = build_graph(2, [(0, 1)])
    cert = decompose(g)
    h = QuotientGraph(((0,), (1,)), (0, 0), ())
    rep = verify_certificate(replace(cert, quotient=h, layers=(0, 0)))
    assert not rep.embedding_ok


def test_corrupted_bag_fails():
    cert = decompose(stacked_triangulation(30, 2))
    d = cert.decomposition
    bags = list(d.bags)
    bags[0] = frozenset()
    rep = verify_certificate(replace(cert, decomposition=replace(d, bags=tuple(bags))))
    assert not rep.ok


# --- exact treewidth -------------------------------------------------------


def test_treewidth_examples():
    assert exact_treewidth(build_graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])) == 1
    assert exact_treewidth(complete(5)) == 4
    assert exact_treewidth(grid(3, 3)) == 3
    assert exact_treewidth(cycle(8)) == 2
    assert exact_treewidth(build_graph(6, K33_EDGES)) == 3
    petersen = nx.petersen_graph()
    assert exact_treewidth(build_graph(10, petersen.edges())) == 4


def test_treewidth_size_cap():
    with pytest.raises(ValueError):
        exact_treewidth(cycle(13))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10**6))
def test_treewidth_bounded_by_heuristics(n, seed):
    rng = random.Random(seed)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    g = build_graph(n, [e for e in pairs if rng.random() < 0.4])
    tw = exact_treewidth(g)
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(n))
    ub, _ = nx.algorithms.approximation.treewidth_min_degree(h)
    assert tw <= ub
    # tw is at least the minimum degree of every subgraph (degeneracy)
    assert tw >= max(nx.core_number(h).values(), default=0)


# --- Sperner oracle --------------------------------------------------------


def test_sperner_single_triangle():
    count, ok, faces = sperner_oracle([(0, 1, 2)], [0, 1, 2], {0: 1, 1: 2, 2: 3})
    assert (count, ok, faces) == (1, True, [(0, 1, 2)])


def test_sperner_bad_boundary_flagged():
    _, ok, _ = sperner_oracle([(0, 1, 2)], [0, 1, 2, 3], {0: 1, 1: 2, 2: 1, 3: 3})
    assert not ok
    _, ok, _ = sperner_oracle([(0, 1, 2)], [0, 1, 2], {0: 1, 1: 1, 2: 2})
    assert not ok
