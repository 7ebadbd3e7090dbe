import networkx as nx

from networkx.algorithms.isomorphism import GraphMatcher, categorical_node_match

from app.apps.graph.dto.graph import Bipartition, Graph
from core.config import config
from core.exceptions import DisconnectedGraphError, GraphError


Permutation = tuple[int, ...]


def is_connected(graph: Graph) -> bool:
    """Одна компонента покрывает все вершины; граф без вершин несвязен"""
    if graph.vertex_count == 0:
        return False
    return nx.is_connected(graph.to_networkx())


def require_connected(graph: Graph) -> None:
    if not is_connected(graph):
        raise DisconnectedGraphError("Граф должен быть связным")


def bipartition_of(graph: Graph) -> Bipartition | None:
    """Двудольное разбиение обходом в ширину; X содержит вершину 0"""
    require_connected(graph)
    try:
        colors = nx.bipartite.color(graph.to_networkx())
    except nx.NetworkXError:
        return None
    x_color = colors[0]
    return Bipartition(
        side_x=tuple(v for v in range(graph.vertex_count) if colors[v] == x_color),
        side_y=tuple(v for v in range(graph.vertex_count) if colors[v] != x_color),
    )


def is_tree(graph: Graph) -> bool:
    return is_connected(graph) and graph.edge_count == graph.vertex_count - 1


def automorphisms(
    graph: Graph, vertex_limit: int = config.automorphism_vertex_limit
) -> list[Permutation]:
    """Все автоморфизмы графа: perm[v] задаёт образ вершины v"""
    if graph.vertex_count > vertex_limit:
        raise GraphError(
            f"Группа автоморфизмов вычисляется точно только для графов "
            f"до {vertex_limit} вершин"
        )
    nx_graph = graph.to_networkx()
    nx.set_node_attributes(nx_graph, dict(nx_graph.degree()), "degree")
    matcher = GraphMatcher(
        nx_graph, nx_graph, node_match=categorical_node_match("degree", None)
    )
    return sorted(
        tuple(mapping[v] for v in range(graph.vertex_count))
        for mapping in matcher.isomorphisms_iter()
    )


def twin_pairs(graph: Graph) -> list[tuple[int, int]]:
    """Пары вершин, транспозиция которых является автоморфизмом"""
    neighbors = [set(row) for row in graph.neighbors()]
    return [
        (u, v)
        for u in range(graph.vertex_count)
        for v in range(u + 1, graph.vertex_count)
        if neighbors[u] - {v} == neighbors[v] - {u}
    ]
