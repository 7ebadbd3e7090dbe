from app.apps.graph.dto.graph import Bipartition, Graph, PartiteSide
from app.apps.labeling.dto.labeling import LambdaStarCase, TotalLabeling, VertexLabeling
from app.apps.labeling.entity.verify import (
    consecutive_index_of,
    magic_constant_of,
    small_label_side,
)
from core.exceptions import PreconditionError


def dual(graph: Graph, labeling: TotalLabeling) -> TotalLabeling:
    """Заменяет каждую метку z на |V|+|E|+1-z"""
    if magic_constant_of(graph, labeling) is None:
        raise PreconditionError("Двойственная разметка строится только для магической")
    top = graph.label_count + 1
    return TotalLabeling(
        vertex_labels=tuple(top - label for label in labeling.vertex_labels),
        edge_labels=tuple(top - label for label in labeling.edge_labels),
    )


def _require_bipartition(graph: Graph, bipartition: Bipartition | None) -> Bipartition:
    if bipartition is None or not bipartition.fits(graph):
        raise PreconditionError("Нужно двудольное разбиение графа")
    return bipartition


def _small_label_block(
    graph: Graph, bipartition: Bipartition | None, labeling: TotalLabeling
) -> tuple[frozenset[int], frozenset[int]]:
    """Доля с метками {1..s} для s-последовательной разметки и оставшаяся доля"""
    b = consecutive_index_of(graph, labeling)
    if b is None or not 0 < b < graph.vertex_count:
        raise PreconditionError(
            "Нужна b-последовательная магическая разметка с 0 < b < |V|"
        )
    bipartition = _require_bipartition(graph, bipartition)
    side = small_label_side(bipartition, labeling, b)
    if side is None:
        raise PreconditionError(f"Ни одна доля не помечена числами 1..{b}")
    other = PartiteSide.Y if side is PartiteSide.X else PartiteSide.X
    return frozenset(bipartition.side(side)), frozenset(bipartition.side(other))


def lambda_star_case(
    graph: Graph, bipartition: Bipartition | None, labeling: TotalLabeling
) -> LambdaStarCase:
    b = consecutive_index_of(graph, labeling)
    if b is None:
        raise PreconditionError("Нужна b-последовательная магическая разметка")
    if b == 0:
        return LambdaStarCase.B_ZERO
    if b == graph.vertex_count:
        return LambdaStarCase.B_FULL
    bipartition = _require_bipartition(graph, bipartition)
    side = small_label_side(bipartition, labeling, b)
    if side is None:
        raise PreconditionError(
            f"b={b} не равно 0, |V|, |X| или |Y| с блоком меток 1..b на доле"
        )
    return LambdaStarCase.B_X if side is PartiteSide.X else LambdaStarCase.B_Y


def lambda_star_constant(
    case: LambdaStarCase, x_size: int, y_size: int, edge_count: int, k: int
) -> int:
    """Магическая константа разметки после отражения блоков"""
    vertex_count = x_size + y_size
    match case:
        case LambdaStarCase.B_ZERO:
            return 2 * vertex_count + 5 * edge_count + 3 - k
        case LambdaStarCase.B_FULL:
            return 4 * vertex_count + edge_count + 3 - k
        case LambdaStarCase.B_X:
            return 5 * x_size + y_size + 3 * edge_count + 3 - k
        case LambdaStarCase.B_Y:
            return x_size + 5 * y_size + 3 * edge_count + 3 - k


def lambda_star(
    graph: Graph, bipartition: Bipartition | None, labeling: TotalLabeling
) -> TotalLabeling:
    """Отражает блоки меток, сохраняя b и меняя магическую константу"""
    case = lambda_star_case(graph, bipartition, labeling)
    vertices, edges = graph.vertex_count, graph.edge_count
    if case is LambdaStarCase.B_ZERO:
        vertex_labels = [
            vertices + 2 * edges + 1 - label for label in labeling.vertex_labels
        ]
        edge_labels = [edges + 1 - label for label in labeling.edge_labels]
    elif case is LambdaStarCase.B_FULL:
        vertex_labels = [vertices + 1 - label for label in labeling.vertex_labels]
        edge_labels = [
            2 * vertices + edges + 1 - label for label in labeling.edge_labels
        ]
    else:
        small_tag = PartiteSide.X if case is LambdaStarCase.B_X else PartiteSide.Y
        small = set(bipartition.side(small_tag))
        s = len(small)
        t = vertices - s
        vertex_labels = [
            s + 1 - label if vertex in small else 2 * s + t + 2 * edges + 1 - label
            for vertex, label in enumerate(labeling.vertex_labels)
        ]
        edge_labels = [2 * s + edges + 1 - label for label in labeling.edge_labels]
    return TotalLabeling(
        vertex_labels=tuple(vertex_labels), edge_labels=tuple(edge_labels)
    )


def to_graceful(
    graph: Graph, bipartition: Bipartition | None, labeling: TotalLabeling
) -> VertexLabeling:
    """Грациозная разметка из разметки, где одна доля помечена 1..s"""
    small, other = _small_label_block(graph, bipartition, labeling)
    s = len(small)
    offset = graph.edge_count + 2 * s + len(other)
    return VertexLabeling(
        vertex_labels=tuple(
            label - 1 if vertex in small else offset - label
            for vertex, label in enumerate(labeling.vertex_labels)
        )
    )


def to_super_edge_magic(
    graph: Graph, bipartition: Bipartition | None, labeling: TotalLabeling
) -> TotalLabeling:
    """Супер рёберно-магическая разметка из разметки, где одна доля помечена 1..s"""
    small, other = _small_label_block(graph, bipartition, labeling)
    return TotalLabeling(
        vertex_labels=tuple(
            label if vertex in small else label - graph.edge_count
            for vertex, label in enumerate(labeling.vertex_labels)
        ),
        edge_labels=tuple(label + len(other) for label in labeling.edge_labels),
    )
