from collections.abc import Mapping
from math import gcd

from app.apps.analysis.dto.report import ConstantFormWitness, TheoremReport, TheoremTag
from app.apps.graph.dto.graph import Bipartition, CaterpillarSpec, Graph
from app.apps.graph.entity.structure import bipartition_of, is_tree, require_connected
from app.apps.search.dto.search import SearchReport
from core.exceptions import GraphError


def predicted_b_candidates(
    graph: Graph, bipartition: Bipartition | None = None
) -> set[int]:
    """Значения b, допустимые для двудольного {0,|X|,|Y|,|V|} и прочего {0,|V|} графа"""
    require_connected(graph)
    if bipartition is None:
        bipartition = bipartition_of(graph)
    if bipartition is None:
        return {0, graph.vertex_count}
    return {0, bipartition.x_size, bipartition.y_size, graph.vertex_count}


def caterpillar_b_set(spec: CaterpillarSpec) -> set[int]:
    return {0, spec.y_size, spec.x_size, spec.vertex_count}


def lobster_b_set(p: int) -> set[int]:
    """Для p >= 3 только {0, 2p+1}.

    L_1 и L_2 являются путями P_3 и P_5, то есть гусеницами, поэтому для них
    множество {0, p, p+1, 2p+1} совпадает с подтверждённым перебором
    (см. caterpillar_b_set); пересекать его с результатами поиска не нужно.
    """
    if p < 1:
        raise GraphError(f"Параметр p должен быть положительным, получено {p}")
    if p >= 3:
        return {0, 2 * p + 1}
    return {0, p, p + 1, 2 * p + 1}


def constant_form_check(m: int, n: int, k: int) -> ConstantFormWitness:
    d = gcd(m, n)
    t = None
    if k >= 6 and (k - 6) % d == 0:
        t = (k - 6) // d
    return ConstantFormWitness(m=m, n=n, d=d, k=k, t=t)


def chain_expectations(m: int, n: int) -> dict[str, tuple[int, int]]:
    """Ожидаемые (b, k) для цепочки разметок двойной звезды"""
    vertex_count = m + n + 2
    return {
        "beta": (m + 1, 4 * m + 2 * n + 6),
        "beta-dual": (n + 1, 2 * m + 4 * n + 6),
        "super": (vertex_count, 3 * m + 2 * n + 6),
        "super-reflected": (vertex_count, 2 * m + 3 * n + 6),
        "zero": (0, 4 * m + 3 * n + 6),
        "zero-reflected": (0, 3 * m + 4 * n + 6),
    }


def candidate_report(
    graph: Graph, description: str, feasible: set[int]
) -> TheoremReport:
    """Найденные b должны входить в предсказанные кандидаты"""
    bipartition = bipartition_of(graph)
    candidates = predicted_b_candidates(graph, bipartition)
    return TheoremReport.compare(
        TheoremTag.BIPARTITE_B_VALUES
        if bipartition is not None
        else TheoremTag.NONBIPARTITE_B_VALUES,
        description,
        predicted=True,
        observed=feasible <= candidates,
        note=f"найдено {sorted(feasible)}, кандидаты {sorted(candidates)}",
    )


def classify_trichotomy(
    graph: Graph,
    bipartition: Bipartition | None,
    search_results: Mapping[int, SearchReport],
    description: str = "graph",
) -> TheoremReport:
    """Относит двудольный граф ровно к одному из трёх случаев

    (i) разметок нет ни для какого b; (ii) допустимы только {0, |V|};
    (iii) граф является деревом и допустимы {0, |X|, |Y|, |V|}.
    """
    require_connected(graph)
    if bipartition is None:
        bipartition = bipartition_of(graph)
    if bipartition is None:
        raise GraphError("Граф не является двудольным")
    candidates = predicted_b_candidates(graph, bipartition)
    undecided = sorted(
        b
        for b in candidates
        if b not in search_results
        or not (search_results[b].found or search_results[b].exhausted)
    )
    if undecided:
        return TheoremReport.out_of_budget(
            TheoremTag.TRICHOTOMY,
            description,
            predicted=True,
            note=f"перебор не завершён для b={undecided}",
        )
    feasible = {b for b, report in search_results.items() if report.found}
    case = None
    if not feasible:
        case = "(i)"
    elif feasible == {0, graph.vertex_count}:
        case = "(ii)"
    elif is_tree(graph) and feasible == candidates:
        case = "(iii)"
    return TheoremReport.compare(
        TheoremTag.TRICHOTOMY,
        description,
        predicted=True,
        observed=case is not None,
        note=f"случай {case or 'не определён'}, найдено {sorted(feasible)}",
    )
