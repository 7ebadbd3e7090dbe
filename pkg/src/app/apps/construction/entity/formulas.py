from app.apps.construction.entity.transforms import dual, lambda_star
from app.apps.graph.dto.graph import CaterpillarSpec, PartiteSide
from app.apps.graph.entity.families import build_caterpillar, build_double_star
from app.apps.labeling.dto.labeling import TotalLabeling


def caterpillar_beta_labeling(spec: CaterpillarSpec) -> TotalLabeling:
    """|Y|-последовательная магическая разметка гусеницы с константой 2|X|+4|Y|

    Доля Y получает метки 1..|Y|, рёбра |Y|+1..|X|+2|Y|-1, доля X остальные.
    """
    handle = build_caterpillar(spec)
    graph = handle.graph
    index = graph.edge_index()
    counts = (0, *spec.leaf_counts)
    x, y = spec.x_size, spec.y_size
    top = x + 2 * y - 1
    total = x + 2 * y

    def leaves_upto(s: int) -> int:
        return sum(counts[1 : s + 1])

    def odd_upto(i: int) -> int:
        return sum(counts[2 * step - 1] for step in range(1, i + 1))

    def even_upto(i: int) -> int:
        return sum(counts[2 * step] for step in range(1, i + 1))

    vertex_labels = [0] * graph.vertex_count
    edge_labels = [0] * graph.edge_count
    for s in range(1, spec.spine_length + 1):
        spine = handle.vertex(f"c{s}")
        leaves = [handle.vertex(f"c{s}.{j}") for j in range(1, counts[s] + 1)]
        if s % 2:
            i = (s + 1) // 2
            vertex_labels[spine] = top + even_upto(i - 1) + i
            for j, leaf in enumerate(leaves, start=1):
                vertex_labels[leaf] = odd_upto(i - 1) + i + j - 1
                edge_labels[index[(spine, leaf)]] = (
                    total - 2 * i + 2 - leaves_upto(2 * i - 2) - j
                )
        else:
            i = s // 2
            vertex_labels[spine] = odd_upto(i) + i
            for j, leaf in enumerate(leaves, start=1):
                vertex_labels[leaf] = top + even_upto(i - 1) + i + j
                edge_labels[index[(spine, leaf)]] = (
                    total - 2 * i + 1 - leaves_upto(2 * i - 1) - j
                )
        if s < spec.spine_length:
            edge_labels[index[(spine, handle.vertex(f"c{s + 1}"))]] = (
                total - s - leaves_upto(s)
            )
    return TotalLabeling(
        vertex_labels=tuple(vertex_labels), edge_labels=tuple(edge_labels)
    )


def double_star_consecutive(m: int, n: int, variant: int = 1) -> TotalLabeling:
    """(m+1)-последовательная разметка двойной звезды с константой 4m+2n+6

    Центр v и листья u получают {1..m+1}, центр u и листья v получают
    {2m+n+3..2m+2n+3}. Вариант задаёт метки центров.
    """
    if variant not in (1, 2):
        raise ValueError(f"Вариант разметки двойной звезды 1 или 2, получено {variant}")
    handle = build_double_star(m, n)
    graph = handle.graph
    high_start, high_end = 2 * m + n + 3, 2 * m + 2 * n + 3
    if variant == 1:
        v_label, u_label = m + 1, high_start
    else:
        v_label, u_label = 1, high_end
    k = 4 * m + 2 * n + 6

    vertex_labels = [0] * graph.vertex_count
    u, v = handle.vertex("u"), handle.vertex("v")
    vertex_labels[u] = u_label
    vertex_labels[v] = v_label
    u_leaf_labels = [label for label in range(1, m + 2) if label != v_label]
    v_leaf_labels = [
        label for label in range(high_start, high_end + 1) if label != u_label
    ]
    for j, label in enumerate(u_leaf_labels, start=1):
        vertex_labels[handle.vertex(f"u.{j}")] = label
    for j, label in enumerate(v_leaf_labels, start=1):
        vertex_labels[handle.vertex(f"v.{j}")] = label

    edge_labels = tuple(k - vertex_labels[a] - vertex_labels[b] for a, b in graph.edges)
    return TotalLabeling(vertex_labels=tuple(vertex_labels), edge_labels=edge_labels)


def caterpillar_super_labeling(spec: CaterpillarSpec) -> TotalLabeling:
    """Супер рёберно-магическая разметка гусеницы с константой 2|X|+3|Y|+1"""
    beta = caterpillar_beta_labeling(spec)
    bipartition = build_caterpillar(spec).bipartition
    x, y = spec.x_size, spec.y_size
    side_x = set(bipartition.side(PartiteSide.X))
    return TotalLabeling(
        vertex_labels=tuple(
            label - x - y + 1 if vertex in side_x else label
            for vertex, label in enumerate(beta.vertex_labels)
        ),
        edge_labels=tuple(label + x for label in beta.edge_labels),
    )


def double_star_chain(m: int, n: int) -> dict[str, TotalLabeling]:
    """Шесть разметок двойной звезды с константами 2m+3n+6 .. 4m+3n+6"""
    handle = build_double_star(m, n)
    graph, bipartition = handle.graph, handle.bipartition
    spec = CaterpillarSpec.of(m, n)
    beta = caterpillar_beta_labeling(spec)
    super_labeling = caterpillar_super_labeling(spec)
    reflected_super = lambda_star(graph, bipartition, super_labeling)
    zero = dual(graph, reflected_super)
    return {
        "beta": beta,
        "beta-dual": dual(graph, beta),
        "super": super_labeling,
        "super-reflected": reflected_super,
        "zero": zero,
        "zero-reflected": lambda_star(graph, bipartition, zero),
    }
