import pytest

from app.apps.construction.entity.formulas import (
    caterpillar_beta_labeling,
    caterpillar_super_labeling,
)
from app.apps.construction.entity.transforms import (
    dual,
    lambda_star,
    lambda_star_case,
    lambda_star_constant,
    to_graceful,
    to_super_edge_magic,
)
from app.apps.graph.dto.graph import CaterpillarSpec
from app.apps.graph.entity.families import build_caterpillar, build_cycle
from app.apps.labeling.dto.labeling import LambdaStarCase, TotalLabeling
from app.apps.labeling.entity.verify import classify, is_graceful
from core.exceptions import PreconditionError


@pytest.mark.construction
def test_dual_of_path(path3, path3_labeling):
    result = dual(path3.graph, path3_labeling)
    assert result.vertex_labels == (5, 1, 4)
    assert result.edge_labels == (2, 3)
    classification = classify(path3.graph, result, path3.bipartition)
    assert classification.magic_constant == 3 * (5 + 1) - 10
    assert classification.consecutive_index == 3 - 2
    assert dual(path3.graph, result) == path3_labeling


@pytest.mark.construction
def test_dual_requires_magic(path3):
    labeling = TotalLabeling(vertex_labels=(1, 2, 3), edge_labels=(4, 5))
    with pytest.raises(PreconditionError):
        dual(path3.graph, labeling)


@pytest.mark.construction
def test_lambda_star_of_path(path3, path3_labeling):
    graph, bipartition = path3.graph, path3.bipartition
    assert lambda_star_case(graph, bipartition, path3_labeling) is LambdaStarCase.B_X
    result = lambda_star(graph, bipartition, path3_labeling)
    assert result.vertex_labels == (2, 5, 1)
    assert result.edge_labels == (3, 4)
    assert lambda_star_constant(LambdaStarCase.B_X, 2, 1, 2, 10) == 10
    assert lambda_star(graph, bipartition, result) == path3_labeling


@pytest.mark.construction
def test_lambda_star_cases_of_cycle():
    handle = build_cycle(3)
    zero = TotalLabeling(vertex_labels=(4, 5, 6), edge_labels=(3, 2, 1))
    full = TotalLabeling(vertex_labels=(1, 2, 3), edge_labels=(6, 5, 4))
    assert lambda_star_case(handle.graph, None, zero) is LambdaStarCase.B_ZERO
    assert lambda_star_case(handle.graph, None, full) is LambdaStarCase.B_FULL

    reflected = lambda_star(handle.graph, None, zero)
    assert reflected.vertex_labels == (6, 5, 4)
    assert reflected.edge_labels == (1, 2, 3)
    assert classify(handle.graph, reflected).magic_constant == lambda_star_constant(
        LambdaStarCase.B_ZERO, 3, 0, 3, 12
    )


@pytest.mark.construction
def test_lambda_star_requires_consecutive(path3):
    not_consecutive = TotalLabeling(vertex_labels=(1, 5, 3), edge_labels=(4, 2))
    with pytest.raises(PreconditionError):
        lambda_star_case(path3.graph, path3.bipartition, not_consecutive)


@pytest.mark.construction
def test_lambda_star_requires_bipartition():
    # K_{1,3}: b = 1 у центра требует разбиения
    handle = build_caterpillar(CaterpillarSpec.of(3))
    labeling = TotalLabeling(vertex_labels=(1, 5, 6, 7), edge_labels=(4, 3, 2))
    with pytest.raises(PreconditionError):
        lambda_star(handle.graph, None, labeling)
    assert (
        lambda_star_case(handle.graph, handle.bipartition, labeling)
        is LambdaStarCase.B_X
    )


@pytest.mark.construction
@pytest.mark.parametrize("counts", [(1,), (2, 1, 2), (0, 2, 0, 1), (1, 1, 1)])
def test_lambda_star_constant_matches(counts):
    spec = CaterpillarSpec.of(*counts)
    handle = build_caterpillar(spec)
    graph, bipartition = handle.graph, handle.bipartition
    labeling = caterpillar_beta_labeling(spec)
    case = lambda_star_case(graph, bipartition, labeling)
    assert case is LambdaStarCase.B_Y

    result = classify(graph, lambda_star(graph, bipartition, labeling), bipartition)
    assert result.consecutive_index == spec.y_size
    assert result.magic_constant == lambda_star_constant(
        case,
        spec.x_size,
        spec.y_size,
        graph.edge_count,
        2 * spec.x_size + 4 * spec.y_size,
    )


@pytest.mark.construction
def test_to_graceful(path3, path3_labeling):
    graceful = to_graceful(path3.graph, path3.bipartition, path3_labeling)
    assert graceful.vertex_labels == (0, 2, 1)
    assert is_graceful(path3.graph, graceful)


@pytest.mark.construction
@pytest.mark.parametrize("counts", [(3,), (1, 2), (2, 1, 2), (0, 3, 1, 1)])
def test_caterpillar_to_graceful(counts):
    spec = CaterpillarSpec.of(*counts)
    handle = build_caterpillar(spec)
    graceful = to_graceful(
        handle.graph, handle.bipartition, caterpillar_beta_labeling(spec)
    )
    assert is_graceful(handle.graph, graceful)


@pytest.mark.construction
def test_to_super_edge_magic(path3, path3_labeling):
    result = to_super_edge_magic(path3.graph, path3.bipartition, path3_labeling)
    assert result.vertex_labels == (1, 3, 2)
    assert result.edge_labels == (5, 4)
    classification = classify(path3.graph, result)
    assert classification.is_super
    assert classification.magic_constant == 9


@pytest.mark.construction
def test_conversions_require_small_side():
    handle = build_caterpillar(CaterpillarSpec.of(1, 1))
    super_labeling = caterpillar_super_labeling(CaterpillarSpec.of(1, 1))
    with pytest.raises(PreconditionError):
        to_graceful(handle.graph, handle.bipartition, super_labeling)
    with pytest.raises(PreconditionError):
        to_super_edge_magic(handle.graph, handle.bipartition, super_labeling)
