from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

from app.apps.graph.dto.graph import Graph
from app.apps.graph.entity.structure import Permutation
from app.apps.search.entity.orbits import is_orbit_minimum


RawLabeling = tuple[tuple[int, ...], tuple[int, ...]]
Links = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SearchPlan:
    """Неизменяемый план перебора меток вершин; передаётся в рабочие процессы

    Вершины получают метки в порядке order, метка каждого ребра к уже
    размеченному соседу вынуждена константой: k - λ(x) - λ(y).
    """

    vertex_count: int
    edge_count: int
    order: tuple[int, ...]
    back_links: tuple[Links, ...]
    vertex_pool: tuple[int, ...]
    edge_low: int
    edge_high: int
    weights: tuple[int, ...]
    rest_weights: tuple[tuple[int, ...], ...]
    target_offset: int
    constant_low: int
    constant_high: int
    neighbors: tuple[tuple[int, ...], ...]
    lower_twins: tuple[tuple[int, ...], ...]
    upper_twins: tuple[tuple[int, ...], ...]
    block_limit: int = 0
    automorphisms: tuple[Permutation, ...] = ()

    @property
    def label_count(self) -> int:
        return self.vertex_count + self.edge_count

    def constants(self, magic_constant: int | None = None) -> list[int]:
        if magic_constant is not None:
            return [magic_constant]
        return list(range(self.constant_low, self.constant_high + 1))


def search_order(graph: Graph) -> tuple[int, ...]:
    """Обход в ширину от вершины наибольшей степени"""
    degrees = graph.degrees()
    neighbors = graph.neighbors()
    start = max(range(graph.vertex_count), key=lambda v: (degrees[v], -v))
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        vertex = queue.popleft()
        for neighbor in neighbors[vertex]:
            if neighbor not in seen:
                seen.add(neighbor)
                order.append(neighbor)
                queue.append(neighbor)
    return tuple(order)


def back_links(graph: Graph, order: Sequence[int]) -> tuple[Links, ...]:
    """Для каждой позиции: соседи, размеченные раньше, и индексы рёбер к ним"""
    position = {vertex: p for p, vertex in enumerate(order)}
    index = graph.edge_index()
    neighbors = graph.neighbors()
    return tuple(
        tuple(
            (w, index[(min(vertex, w), max(vertex, w))])
            for w in neighbors[vertex]
            if position[w] < p
        )
        for p, vertex in enumerate(order)
    )


def _twin_bounds(
    order: Sequence[int], twins: Iterable[tuple[int, int]]
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    # для пары близнецов u < v требуется λ(u) < λ(v)
    position = {vertex: p for p, vertex in enumerate(order)}
    lower: list[list[int]] = [[] for _ in order]
    upper: list[list[int]] = [[] for _ in order]
    for u, v in twins:
        if position[u] < position[v]:
            lower[position[v]].append(u)
        else:
            upper[position[u]].append(v)
    return tuple(map(tuple, lower)), tuple(map(tuple, upper))


def _plan(
    graph: Graph,
    vertex_pool: tuple[int, ...],
    edge_range: tuple[int, int],
    weight_of: Callable[[int], int],
    target_offset: int,
    constant_range: tuple[int, int],
    twins: Iterable[tuple[int, int]],
    automorphisms: Sequence[Permutation],
    block_limit: int = 0,
) -> SearchPlan:
    order = search_order(graph)
    weights = tuple(weight_of(vertex) for vertex in order)
    lower_twins, upper_twins = _twin_bounds(order, twins)
    return SearchPlan(
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        order=order,
        back_links=back_links(graph, order),
        vertex_pool=vertex_pool,
        edge_low=edge_range[0],
        edge_high=edge_range[1],
        weights=weights,
        rest_weights=tuple(
            tuple(sorted(weights[p:], reverse=True)) for p in range(len(order) + 1)
        ),
        target_offset=target_offset,
        constant_low=constant_range[0],
        constant_high=constant_range[1],
        neighbors=graph.neighbors(),
        lower_twins=lower_twins,
        upper_twins=upper_twins,
        block_limit=block_limit,
        automorphisms=tuple(automorphisms),
    )


def consecutive_plan(
    graph: Graph,
    b: int,
    use_theorem_pruning: bool = False,
    twins: Iterable[tuple[int, int]] = (),
    automorphisms: Sequence[Permutation] = (),
) -> SearchPlan:
    """План поиска b-последовательных разметок: рёбра получают b+1..b+|E|

    Сумма Σ deg(v)λ(v) по вершинам равна k|E| минус сумма меток рёбер.
    """
    vertices, edges = graph.vertex_count, graph.edge_count
    pool = tuple(range(1, b + 1)) + tuple(range(b + edges + 1, vertices + edges + 1))
    degrees = graph.degrees()
    return _plan(
        graph,
        vertex_pool=pool,
        edge_range=(b + 1, b + edges),
        weight_of=lambda vertex: degrees[vertex],
        target_offset=edges * b + edges * (edges + 1) // 2,
        constant_range=(pool[0] + pool[1] + b + 1, pool[-1] + pool[-2] + b + edges),
        twins=twins,
        automorphisms=automorphisms,
        block_limit=b if use_theorem_pruning and 0 < b < vertices else 0,
    )


def edge_magic_plan(
    graph: Graph,
    twins: Iterable[tuple[int, int]] = (),
    automorphisms: Sequence[Permutation] = (),
) -> SearchPlan:
    """План поиска любых рёберно-магических разметок

    Σ (deg(v)-1)λ(v) = k|E| - N(N+1)/2, N = |V|+|E|.
    """
    label_count = graph.label_count
    degrees = graph.degrees()
    return _plan(
        graph,
        vertex_pool=tuple(range(1, label_count + 1)),
        edge_range=(1, label_count),
        weight_of=lambda vertex: degrees[vertex] - 1,
        target_offset=label_count * (label_count + 1) // 2,
        constant_range=(6, 3 * label_count - 3),
        twins=twins,
        automorphisms=automorphisms,
    )


def solve_constant(
    plan: SearchPlan, k: int, limit: int | None = None
) -> tuple[list[RawLabeling], bool]:
    """Все разметки с константой k в порядке перебора

    Возвращает найденные разметки и признак полного перебора
    (False, если остановились на пределе limit).
    """
    vertex_count = plan.vertex_count
    used = bytearray(plan.label_count + 1)
    vertex_labels = [0] * vertex_count
    edge_labels = [0] * plan.edge_count
    # 0: не определено, 1: соседи из {1..b}, 2: соседи из верхнего блока
    neighbor_block = [0] * vertex_count
    target = k * plan.edge_count - plan.target_offset
    found: list[RawLabeling] = []

    def within_bounds(position: int, partial: int) -> bool:
        rest = plan.rest_weights[position]
        size = len(rest)
        free = [label for label in plan.vertex_pool if not used[label]]
        if len(free) < size:
            return False
        low = sum(w * label for w, label in zip(rest, free[:size], strict=True))
        high = sum(
            w * label for w, label in zip(rest, reversed(free[-size:]), strict=True)
        )
        return partial + low <= target <= partial + high

    def claim_blocks(vertex: int, label: int) -> list[int] | None:
        side = 1 if label <= plan.block_limit else 2
        claimed = []
        for neighbor in plan.neighbors[vertex]:
            if neighbor_block[neighbor] == 0:
                neighbor_block[neighbor] = side
                claimed.append(neighbor)
            elif neighbor_block[neighbor] != side:
                for other in claimed:
                    neighbor_block[other] = 0
                return None
        return claimed

    def extend(position: int, partial: int) -> bool:
        if position == vertex_count:
            if plan.automorphisms and not is_orbit_minimum(
                vertex_labels, plan.automorphisms
            ):
                return False
            found.append((tuple(vertex_labels), tuple(edge_labels)))
            return limit is not None and len(found) >= limit
        if not within_bounds(position, partial):
            return False
        vertex = plan.order[position]
        floor = max(
            (vertex_labels[u] for u in plan.lower_twins[position]), default=0
        )
        ceiling = min(
            (vertex_labels[w] for w in plan.upper_twins[position]),
            default=plan.label_count + 1,
        )
        weight = plan.weights[position]
        for label in plan.vertex_pool:
            if used[label] or label <= floor or label >= ceiling:
                continue
            claimed: list[int] | None = []
            if plan.block_limit:
                claimed = claim_blocks(vertex, label)
                if claimed is None:
                    continue
            used[label] = 1
            vertex_labels[vertex] = label
            forced = []
            for neighbor, edge in plan.back_links[position]:
                edge_label = k - label - vertex_labels[neighbor]
                if (
                    edge_label < plan.edge_low
                    or edge_label > plan.edge_high
                    or used[edge_label]
                ):
                    break
                used[edge_label] = 1
                edge_labels[edge] = edge_label
                forced.append(edge_label)
            else:
                if extend(position + 1, partial + weight * label):
                    return True
            for edge_label in forced:
                used[edge_label] = 0
            used[label] = 0
            for neighbor in claimed or ():
                neighbor_block[neighbor] = 0
        return False

    stopped = extend(0, 0)
    return found, not stopped


def collect(
    solve: Callable[[int, int | None], list[RawLabeling]],
    constants: Iterable[int],
    limit: int | None = None,
    constants_only: bool = False,
) -> tuple[list[tuple[int, RawLabeling]], bool]:
    """Объединяет результаты по возрастанию k с общим пределом limit

    solve(k, cap) должен возвращать первые cap разметок константы k
    в детерминированном порядке перебора.
    """
    remaining = limit
    exhausted = True
    collected: list[tuple[int, RawLabeling]] = []
    for k in constants:
        if remaining == 0:
            exhausted = False
            break
        if constants_only:
            cap: int | None = 1
        else:
            cap = remaining + 1 if remaining is not None else None
        found = solve(k, cap)
        if remaining is not None and len(found) > remaining:
            found = found[:remaining]
            exhausted = False
        collected.extend((k, raw) for raw in found)
        if remaining is not None:
            remaining -= len(found)
    return collected, exhausted


def per_constant_cap(limit: int | None, constants_only: bool) -> int | None:
    """Наибольший cap, который collect может запросить для одной константы"""
    if constants_only:
        return 1
    return limit + 1 if limit is not None else None
