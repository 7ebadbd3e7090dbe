from app.apps.graph.dto.graph import Bipartition, Graph, PartiteSide
from app.apps.graph.entity.structure import bipartition_of, is_connected
from app.apps.labeling.dto.labeling import (
    LabelingClassification,
    TotalLabeling,
    VertexLabeling,
)
from core.exceptions import LabelingError, PreconditionError


def require_matching(graph: Graph, labeling: TotalLabeling) -> None:
    """Проверяет, что число меток совпадает с числом вершин и рёбер"""
    if (
        len(labeling.vertex_labels) != graph.vertex_count
        or len(labeling.edge_labels) != graph.edge_count
    ):
        raise LabelingError(
            f"Разметка с {len(labeling.vertex_labels)} вершинами и "
            f"{len(labeling.edge_labels)} рёбрами не подходит графу с "
            f"{graph.vertex_count} вершинами и {graph.edge_count} рёбрами"
        )


def edge_sums(graph: Graph, labeling: TotalLabeling) -> list[int]:
    vertex_labels = labeling.vertex_labels
    return [
        vertex_labels[u] + vertex_labels[v] + labeling.edge_labels[index]
        for index, (u, v) in enumerate(graph.edges)
    ]


def magic_constant_of(graph: Graph, labeling: TotalLabeling) -> int | None:
    """Общая сумма меток ребра и его концов, если она одинакова для всех рёбер"""
    require_matching(graph, labeling)
    sums = set(edge_sums(graph, labeling))
    if len(sums) != 1:
        return None
    return sums.pop()


def edge_block_start(graph: Graph, labeling: TotalLabeling) -> int | None:
    """b, при котором метки рёбер равны {b+1, ..., b+|E|}, 0 <= b <= |V|"""
    require_matching(graph, labeling)
    if not graph.edges:
        return None
    low = min(labeling.edge_labels)
    if sorted(labeling.edge_labels) != list(range(low, low + graph.edge_count)):
        return None
    start = low - 1
    if not 0 <= start <= graph.vertex_count:
        return None
    return start


def consecutive_index_of(graph: Graph, labeling: TotalLabeling) -> int | None:
    if magic_constant_of(graph, labeling) is None:
        return None
    return edge_block_start(graph, labeling)


def neighbor_block_holds(graph: Graph, labeling: TotalLabeling, b: int) -> bool:
    """Соседи каждой вершины помечены целиком из {1..b} или из {b+|E|+1..|V|+|E|}"""
    require_matching(graph, labeling)
    if not 1 <= b <= graph.vertex_count:
        raise PreconditionError(
            f"Ожидалось 1 <= b <= {graph.vertex_count}, получено {b}"
        )
    high_start = b + graph.edge_count + 1
    for row in graph.neighbors():
        labels = [labeling.vertex_labels[u] for u in row]
        if not (
            all(label <= b for label in labels)
            or all(label >= high_start for label in labels)
        ):
            return False
    return True


def is_graceful(graph: Graph, labeling: VertexLabeling) -> bool:
    if len(labeling.vertex_labels) != graph.vertex_count:
        raise LabelingError(
            f"Разметка с {len(labeling.vertex_labels)} вершинами не подходит графу "
            f"с {graph.vertex_count} вершинами"
        )
    if any(label > graph.edge_count for label in labeling.vertex_labels):
        return False
    labels = labeling.vertex_labels
    differences = {abs(labels[u] - labels[v]) for u, v in graph.edges}
    return differences == set(range(1, graph.edge_count + 1))


def small_label_side(
    bipartition: Bipartition, labeling: TotalLabeling, b: int
) -> PartiteSide | None:
    """Доля, метки которой в точности {1, ..., b}"""
    block = set(range(1, b + 1))
    for tag in (PartiteSide.X, PartiteSide.Y):
        side = bipartition.side(tag)
        if {labeling.vertex_labels[v] for v in side} == block and len(side) == b:
            return tag
    return None


def classify(
    graph: Graph,
    labeling: TotalLabeling,
    bipartition: Bipartition | None = None,
) -> LabelingClassification:
    magic_constant = magic_constant_of(graph, labeling)
    if magic_constant is None:
        return LabelingClassification()
    b = edge_block_start(graph, labeling)
    side = None
    if b is not None and 0 < b < graph.vertex_count:
        if bipartition is None and is_connected(graph):
            bipartition = bipartition_of(graph)
        if bipartition is not None and b in (bipartition.x_size, bipartition.y_size):
            side = small_label_side(bipartition, labeling, b)
    return LabelingClassification(
        magic_constant=magic_constant,
        consecutive_index=b,
        is_super=b == graph.vertex_count,
        side_with_small_labels=side,
    )
