from app.apps.graph.dto.graph import Graph
from app.apps.search.entity.backtrack import back_links, search_order


def find_graceful(graph: Graph, limit: int | None = 1) -> list[tuple[int, ...]]:
    """Грациозные разметки связного графа перебором меток 0..|E|

    Разности на рёбрах попарно различны, поэтому |E| рёбер дают ровно {1..|E|}.
    """
    edge_count = graph.edge_count
    order = search_order(graph)
    links = back_links(graph, order)
    used_labels = bytearray(edge_count + 1)
    used_differences = bytearray(edge_count + 1)
    labels = [0] * graph.vertex_count
    found: list[tuple[int, ...]] = []

    def extend(position: int) -> bool:
        if position == len(order):
            found.append(tuple(labels))
            return limit is not None and len(found) >= limit
        vertex = order[position]
        for label in range(edge_count + 1):
            if used_labels[label]:
                continue
            differences = []
            for neighbor, _ in links[position]:
                difference = abs(label - labels[neighbor])
                if used_differences[difference]:
                    break
                used_differences[difference] = 1
                differences.append(difference)
            else:
                used_labels[label] = 1
                labels[vertex] = label
                if extend(position + 1):
                    return True
                used_labels[label] = 0
            for difference in differences:
                used_differences[difference] = 0
        return False

    extend(0)
    return found
