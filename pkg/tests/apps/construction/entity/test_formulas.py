import pytest

from app.apps.analysis.entity.predictions import chain_expectations
from app.apps.construction.entity.formulas import (
    caterpillar_beta_labeling,
    caterpillar_super_labeling,
    double_star_chain,
    double_star_consecutive,
)
from app.apps.graph.dto.graph import CaterpillarSpec, PartiteSide
from app.apps.graph.entity.families import build_caterpillar, build_double_star
from app.apps.labeling.entity.verify import classify, neighbor_block_holds


@pytest.mark.construction
def test_caterpillar_beta_labeling_small():
    labeling = caterpillar_beta_labeling(CaterpillarSpec.of(1, 1))
    assert labeling.vertex_labels == (6, 1, 2, 7)
    assert labeling.edge_labels == (5, 4, 3)


@pytest.mark.construction
@pytest.mark.parametrize(
    "counts",
    [(1,), (3,), (0, 0), (1, 1), (2, 1, 2), (0, 2, 0, 1), (3, 0, 0, 2, 1)],
)
def test_caterpillar_beta_labeling_is_y_consecutive(counts):
    spec = CaterpillarSpec.of(*counts)
    handle = build_caterpillar(spec)
    labeling = caterpillar_beta_labeling(spec)

    classification = classify(handle.graph, labeling, handle.bipartition)
    assert classification.consecutive_index == spec.y_size
    assert classification.magic_constant == 2 * spec.x_size + 4 * spec.y_size
    assert classification.side_with_small_labels is PartiteSide.Y
    assert neighbor_block_holds(handle.graph, labeling, spec.y_size)


@pytest.mark.construction
def test_caterpillar_beta_labeling_constant():
    spec = CaterpillarSpec.of(2, 1, 2)
    handle = build_caterpillar(spec)
    classification = classify(
        handle.graph, caterpillar_beta_labeling(spec), handle.bipartition
    )
    assert (classification.consecutive_index, classification.magic_constant) == (
        5,
        26,
    )


@pytest.mark.construction
@pytest.mark.parametrize("counts", [(2,), (1, 1), (2, 1, 2), (0, 3, 1)])
def test_caterpillar_super_labeling(counts):
    spec = CaterpillarSpec.of(*counts)
    handle = build_caterpillar(spec)
    classification = classify(handle.graph, caterpillar_super_labeling(spec))
    assert classification.is_super
    assert classification.magic_constant == 2 * spec.x_size + 3 * spec.y_size + 1


@pytest.mark.construction
def test_double_star_variants():
    handle = build_double_star(1, 2)
    first = double_star_consecutive(1, 2)
    assert first.vertex_labels == (7, 1, 2, 8, 9)
    assert first.edge_labels == (6, 5, 4, 3)
    second = double_star_consecutive(1, 2, variant=2)
    assert second.vertex_labels == (9, 2, 1, 7, 8)
    assert second.edge_labels == (3, 4, 6, 5)
    for labeling in (first, second):
        classification = classify(handle.graph, labeling, handle.bipartition)
        assert classification.consecutive_index == 2
        assert classification.magic_constant == 14


@pytest.mark.construction
@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (4, 2)])
def test_double_star_consecutive_constant(m, n):
    handle = build_double_star(m, n)
    classification = classify(
        handle.graph, double_star_consecutive(m, n), handle.bipartition
    )
    assert classification.consecutive_index == m + 1
    assert classification.magic_constant == 4 * m + 2 * n + 6


@pytest.mark.construction
def test_double_star_bad_variant():
    with pytest.raises(ValueError):
        double_star_consecutive(1, 2, variant=3)


@pytest.mark.construction
@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 2), (3, 1), (2, 5)])
def test_double_star_chain(m, n):
    handle = build_double_star(m, n)
    expected = chain_expectations(m, n)
    chain = double_star_chain(m, n)
    assert list(chain) == list(expected)
    for name, labeling in chain.items():
        classification = classify(handle.graph, labeling, handle.bipartition)
        assert (
            classification.consecutive_index,
            classification.magic_constant,
        ) == expected[name], name
