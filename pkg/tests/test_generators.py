import pytest

from prodstruct.generators import MODELS, GenSpec, edge_addition_planar, generate, stacked_triangulation
from prodstruct.planar import is_planar

from conftest import complete


def test_stacked_four_is_k4():
    assert stacked_triangulation(4, 9) == complete(4)


@pytest.mark.parametrize("n", [3, 5, 17, 60])
def test_stacked_is_maximal(n):
    assert stacked_triangulation(n, n).m == 3 * n - 6


def test_edge_addition_deterministic():
    assert edge_addition_planar(50, 7) == edge_addition_planar(50, 7)


@pytest.mark.parametrize("model", MODELS)
def test_models_planar_and_reproducible(model):
    for seed in range(5):
        g = generate(GenSpec(model, 40, seed))
        assert g.n == 40 and is_planar(g)
        assert g == generate(GenSpec(model, 40, seed))


def test_unknown_model():
    with pytest.raises(ValueError, match="unknown model"):
        generate(GenSpec("random", 10))


def test_tiny_sizes():
    for model in MODELS:
        for n in (1, 2, 3):
            assert generate(GenSpec(model, n)).n == n
