import pytest

from app.apps.analysis.dto.report import TheoremTag, Verdict
from app.apps.analysis.entity.predictions import (
    candidate_report,
    caterpillar_b_set,
    chain_expectations,
    classify_trichotomy,
    constant_form_check,
    lobster_b_set,
    predicted_b_candidates,
)
from app.apps.graph.dto.graph import CaterpillarSpec
from app.apps.graph.entity.families import (
    build_complete_bipartite,
    build_cycle,
    build_double_star,
)
from app.apps.labeling.dto.labeling import TotalLabeling
from app.apps.search.dto.search import SearchReport
from core.exceptions import DisconnectedGraphError, GraphError


def reports_for(vertex_count, feasible, undecided=frozenset()):
    # наличие разметки в отчёте важно, её содержимое нет
    witness = (TotalLabeling(vertex_labels=(1,)),)
    return {
        b: SearchReport(
            b=b,
            labelings=witness if b in feasible else (),
            exhausted=b not in undecided,
        )
        for b in range(vertex_count + 1)
    }


@pytest.mark.analysis
def test_predicted_b_candidates(path3, two_edges_apart):
    assert predicted_b_candidates(build_cycle(5).graph) == {0, 5}
    assert predicted_b_candidates(build_cycle(4).graph) == {0, 2, 4}
    assert predicted_b_candidates(path3.graph, path3.bipartition) == {0, 1, 2, 3}
    with pytest.raises(DisconnectedGraphError):
        predicted_b_candidates(two_edges_apart)


@pytest.mark.analysis
def test_family_b_sets():
    assert caterpillar_b_set(CaterpillarSpec.of(2, 1, 2)) == {0, 3, 5, 8}
    assert lobster_b_set(3) == {0, 7}
    assert lobster_b_set(2) == {0, 2, 3, 5}
    with pytest.raises(GraphError):
        lobster_b_set(0)


@pytest.mark.analysis
def test_small_lobsters_are_caterpillars():
    assert lobster_b_set(1) == caterpillar_b_set(CaterpillarSpec.of(2))
    assert lobster_b_set(2) == caterpillar_b_set(CaterpillarSpec.of(1, 0, 1))


@pytest.mark.analysis
@pytest.mark.parametrize(
    "m, n, k, d, t",
    [(3, 6, 7, 3, None), (2, 4, 16, 2, 5), (1, 2, 14, 1, 8), (2, 2, 5, 2, None)],
)
def test_constant_form_check(m, n, k, d, t):
    witness = constant_form_check(m, n, k)
    assert (witness.d, witness.t) == (d, t)


@pytest.mark.analysis
def test_chain_expectations():
    expected = chain_expectations(1, 2)
    assert expected == {
        "beta": (2, 14),
        "beta-dual": (3, 16),
        "super": (5, 13),
        "super-reflected": (5, 14),
        "zero": (0, 16),
        "zero-reflected": (0, 17),
    }


@pytest.mark.analysis
def test_candidate_report():
    graph = build_cycle(5).graph
    report = candidate_report(graph, "cycle(5)", {0, 5})
    assert report.theorem_id is TheoremTag.NONBIPARTITE_B_VALUES
    assert report.passed
    failed = candidate_report(graph, "cycle(5)", {0, 2})
    assert failed.verdict is Verdict.FAIL
    bipartite = candidate_report(build_cycle(4).graph, "cycle(4)", set())
    assert bipartite.theorem_id is TheoremTag.BIPARTITE_B_VALUES


@pytest.mark.analysis
def test_trichotomy_no_labelings():
    handle = build_complete_bipartite(2, 2)
    report = classify_trichotomy(
        handle.graph, handle.bipartition, reports_for(4, set())
    )
    assert report.passed
    assert "(i)" in report.note


@pytest.mark.analysis
def test_trichotomy_only_extremes():
    handle = build_cycle(4)
    report = classify_trichotomy(handle.graph, None, reports_for(4, {0, 4}))
    assert report.passed
    assert "(ii)" in report.note


@pytest.mark.analysis
def test_trichotomy_tree():
    handle = build_double_star(1, 1)
    report = classify_trichotomy(
        handle.graph, handle.bipartition, reports_for(4, {0, 2, 4}), "P4"
    )
    assert report.passed
    assert report.graph_description == "P4"
    assert "(iii)" in report.note


@pytest.mark.analysis
def test_trichotomy_no_case():
    handle = build_cycle(4)
    report = classify_trichotomy(handle.graph, None, reports_for(4, {0, 2, 4}))
    assert report.verdict is Verdict.FAIL


@pytest.mark.analysis
def test_trichotomy_undecided():
    handle = build_cycle(4)
    report = classify_trichotomy(
        handle.graph, None, reports_for(4, set(), undecided={2})
    )
    assert report.verdict is Verdict.OUT_OF_BUDGET


@pytest.mark.analysis
def test_trichotomy_requires_bipartite():
    handle = build_cycle(5)
    with pytest.raises(GraphError):
        classify_trichotomy(handle.graph, None, reports_for(5, {0, 5}))
