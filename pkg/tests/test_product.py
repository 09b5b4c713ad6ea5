import pytest

from prodstruct.graph import build_graph
from prodstruct.layering import bfs_tree
from prodstruct.pipeline import decompose
from prodstruct.product import (
    PartitionError,
    make_product_embedding,
    merge_components,
    quotient,
    strong_product_adjacent,
)
from prodstruct.verifier import check_embedding, verify_certificate

from conftest import cycle


def test_singleton_parts_give_isomorphic_quotient():
    g = cycle(5)
    h = quotient(g, [[v] for v in range(5)])
    assert h.as_graph() == g


def test_whole_path_contracts_to_point():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    h = quotient(g, [[0, 1, 2, 3]])
    assert h.size == 1 and h.edges == ()


def test_triangle_two_parts():
    h = quotient(cycle(3), [[0], [1, 2]])
    assert h.edges == ((0, 1),)
    assert h.witnesses[(0, 1)] in {(0, 1), (0, 2)}


def test_partition_errors():
    g = cycle(3)
    with pytest.raises(PartitionError, match="not covered"):
        quotient(g, [[0], [1]])
    with pytest.raises(PartitionError, match="lies in parts"):
        quotient(g, [[0, 1], [1, 2]])


def test_strong_product_clauses():
    h = quotient(build_graph(2, [(0, 1)]), [[0], [1]])
    assert strong_product_adjacent((0, 3), (0, 4), h)
    assert not strong_product_adjacent((0, 3), (0, 3), h)
    assert not strong_product_adjacent((0, 5), (1, 7), h)
    assert strong_product_adjacent((0, 5), (1, 5), h)
    assert strong_product_adjacent((0, 5), (1, 6), h)
    assert not strong_product_adjacent((0, 3), (0, 5), h)


def test_single_vertex_embedding():
    g = build_graph(1, [])
    cert = make_product_embedding(g, bfs_tree(g, 0), [[0]])
    assert cert.quotient.size == 1 and cert.path_length == 1


def test_star_embedding():
    g = build_graph(5, [(0, v) for v in range(1, 5)])
    cert = make_product_embedding(g, bfs_tree(g, 0), [[v] for v in range(5)])
    assert cert.layers == (0, 1, 1, 1, 1)
    assert check_embedding(cert) == (True, "")


def test_non_vertical_part_named():
    g = build_graph(3, [(0, 1), (0, 2)])
    with pytest.raises(PartitionError, match="part 1"):
        make_product_embedding(g, bfs_tree(g, 0), [[0], [1, 2]])


def test_merge_single_is_identity():
    c = decompose(cycle(3))
    assert merge_components([c]) is c


def test_two_triangles():
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    cert = decompose(g)
    assert cert.quotient.size == 6
    assert cert.decomposition.width == 2
    assert len(cert.decomposition.anchors) == 2
    assert verify_certificate(cert).ok


def test_merged_path_length_is_max():
    path = build_graph(7, [(i, i + 1) for i in range(6)])
    short = build_graph(3, [(0, 1), (1, 2)])
    edges = list(short.edges()) + [(u + 3, v + 3) for u, v in path.edges()]
    g = build_graph(10, edges)
    cert = decompose(g)
    assert cert.path_length == 7
    assert verify_certificate(cert).ok


def test_overlap_rejected():
    c = decompose(cycle(3))
    with pytest.raises(ValueError, match="overlap"):
        merge_components([c, c])
