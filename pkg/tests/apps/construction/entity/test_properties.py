import itertools

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

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
)
from app.apps.graph.dto.graph import CaterpillarSpec
from app.apps.graph.entity.families import build_caterpillar
from app.apps.labeling.entity.verify import classify, is_graceful


caterpillars = st.lists(st.integers(0, 3), min_size=1, max_size=5).filter(
    lambda counts: sum(counts) + len(counts) > 1
)


@pytest.mark.property_based
@given(caterpillars)
@settings(max_examples=60)
def test_beta_labeling_is_y_consecutive(counts):
    spec = CaterpillarSpec.of(*counts)
    handle = build_caterpillar(spec)
    classification = classify(
        handle.graph, caterpillar_beta_labeling(spec), handle.bipartition
    )
    assert classification.consecutive_index == spec.y_size
    assert classification.magic_constant == 2 * spec.x_size + 4 * spec.y_size


@pytest.mark.construction
def test_beta_labeling_on_full_grid():
    checked = 0
    for spine in range(1, 6):
        for counts in itertools.product(range(4), repeat=spine):
            spec = CaterpillarSpec.of(*counts)
            if spec.vertex_count < 2:
                continue
            handle = build_caterpillar(spec)
            labeling = caterpillar_beta_labeling(spec)
            classification = classify(handle.graph, labeling, handle.bipartition)
            assert classification.consecutive_index == spec.y_size, counts
            assert classification.magic_constant == 2 * spec.x_size + 4 * spec.y_size
            checked += 1
    assert checked == 1363


@pytest.mark.property_based
@given(caterpillars)
@settings(max_examples=60)
def test_dual_is_involution(counts):
    spec = CaterpillarSpec.of(*counts)
    graph = build_caterpillar(spec).graph
    labeling = caterpillar_beta_labeling(spec)
    mirrored = dual(graph, labeling)

    assert dual(graph, mirrored) == labeling
    classification = classify(graph, mirrored)
    assert classification.consecutive_index == spec.x_size
    assert classification.magic_constant == 3 * (graph.label_count + 1) - (
        2 * spec.x_size + 4 * spec.y_size
    )


@pytest.mark.property_based
@given(caterpillars, st.booleans())
@settings(max_examples=60)
def test_lambda_star_is_involution(counts, use_super):
    spec = CaterpillarSpec.of(*counts)
    handle = build_caterpillar(spec)
    graph, bipartition = handle.graph, handle.bipartition
    build = caterpillar_super_labeling if use_super else caterpillar_beta_labeling
    labeling = build(spec)
    case = lambda_star_case(graph, bipartition, labeling)
    before = classify(graph, labeling, bipartition)
    reflected = lambda_star(graph, bipartition, labeling)
    after = classify(graph, reflected, bipartition)

    assert lambda_star(graph, bipartition, reflected) == labeling
    assert after.consecutive_index == before.consecutive_index
    assert after.magic_constant == lambda_star_constant(
        case, spec.x_size, spec.y_size, graph.edge_count, before.magic_constant
    )


@pytest.mark.property_based
@given(caterpillars)
@settings(max_examples=60)
def test_beta_labeling_gives_graceful(counts):
    spec = CaterpillarSpec.of(*counts)
    handle = build_caterpillar(spec)
    graceful = to_graceful(
        handle.graph, handle.bipartition, caterpillar_beta_labeling(spec)
    )
    assert is_graceful(handle.graph, graceful)
