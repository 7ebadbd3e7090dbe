from app.apps.graph.dto.graph import Bipartition, CaterpillarSpec, FamilyHandle, Graph
from core.exceptions import GraphError


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise GraphError(
                f"Параметр {name} должен быть положительным, получено {value}"
            )


def build_caterpillar(spec: CaterpillarSpec) -> FamilyHandle:
    """Строит гусеницу в каноническом порядке c_1, c_1.1..c_1.n_1, c_2, ..."""
    edges: list[tuple[int, int]] = []
    name_map: dict[str, int] = {}
    side_x: list[int] = []
    side_y: list[int] = []
    index = 0
    previous_spine: int | None = None
    for i, leaves in enumerate(spec.leaf_counts, start=1):
        spine = index
        index += 1
        name_map[f"c{i}"] = spine
        # нечётные вершины хребта и листья чётных лежат в X
        spine_side, leaf_side = (side_x, side_y) if i % 2 else (side_y, side_x)
        spine_side.append(spine)
        if previous_spine is not None:
            edges.append((previous_spine, spine))
        for j in range(1, leaves + 1):
            name_map[f"c{i}.{j}"] = index
            leaf_side.append(index)
            edges.append((spine, index))
            index += 1
        previous_spine = spine
    return FamilyHandle(
        family="caterpillar",
        params={"spine": list(spec.leaf_counts)},
        graph=Graph(vertex_count=index, edges=tuple(edges)),
        bipartition=Bipartition(side_x=tuple(side_x), side_y=tuple(side_y)),
        name_map=name_map,
    )


def build_double_star(m: int, n: int) -> FamilyHandle:
    """Двойная звезда: центр u с m листьями, центр v с n листьями"""
    _require_positive(m=m, n=n)
    caterpillar = build_caterpillar(CaterpillarSpec.of(m, n))
    renames = {"c1": "u", "c2": "v"}
    name_map = {}
    for name, vertex in caterpillar.name_map.items():
        head, _, tail = name.partition(".")
        name_map[renames[head] + (f".{tail}" if tail else "")] = vertex
    return caterpillar.model_copy(
        update={
            "family": "double-star",
            "params": {"m": m, "n": n},
            "name_map": name_map,
        }
    )


def build_lobster(p: int) -> FamilyHandle:
    """Звезда с p листьями, к каждому листу которой присоединён ещё один лист"""
    _require_positive(p=p)
    name_map = {"x": 0}
    edges = []
    for i in range(1, p + 1):
        middle, outer = 2 * i - 1, 2 * i
        name_map[f"y{i}"] = middle
        name_map[f"x{i}"] = outer
        edges.extend([(0, middle), (middle, outer)])
    return FamilyHandle(
        family="lobster",
        params={"p": p},
        graph=Graph(vertex_count=2 * p + 1, edges=tuple(edges)),
        bipartition=Bipartition(
            side_x=(0, *range(2, 2 * p + 1, 2)), side_y=tuple(range(1, 2 * p, 2))
        ),
        name_map=name_map,
    )


def build_cycle(length: int) -> FamilyHandle:
    if length < 3:
        raise GraphError(f"Длина цикла должна быть не меньше 3, получено {length}")
    edges = tuple((i, (i + 1) % length) for i in range(length))
    bipartition = None
    if length % 2 == 0:
        bipartition = Bipartition(
            side_x=tuple(range(0, length, 2)), side_y=tuple(range(1, length, 2))
        )
    return FamilyHandle(
        family="cycle",
        params={"l": length},
        graph=Graph(vertex_count=length, edges=edges),
        bipartition=bipartition,
        name_map={f"v{i}": i for i in range(length)},
    )


def build_complete_bipartite(m: int, n: int) -> FamilyHandle:
    _require_positive(m=m, n=n)
    side_a = tuple(range(m))
    side_b = tuple(range(m, m + n))
    return FamilyHandle(
        family="kmn",
        params={"m": m, "n": n},
        graph=Graph(
            vertex_count=m + n, edges=tuple((a, b) for a in side_a for b in side_b)
        ),
        bipartition=Bipartition(side_x=side_a, side_y=side_b),
        name_map={
            **{f"a{i + 1}": a for i, a in enumerate(side_a)},
            **{f"b{j + 1}": b for j, b in enumerate(side_b)},
        },
    )


def build_path(n: int) -> FamilyHandle:
    _require_positive(n=n)
    return FamilyHandle(
        family="path",
        params={"n": n},
        graph=Graph(vertex_count=n, edges=tuple((i, i + 1) for i in range(n - 1))),
        bipartition=Bipartition(
            side_x=tuple(range(0, n, 2)), side_y=tuple(range(1, n, 2))
        ),
        name_map={f"p{i + 1}": i for i in range(n)},
    )


def build_star(p: int) -> FamilyHandle:
    _require_positive(p=p)
    star = build_caterpillar(CaterpillarSpec.of(p))
    name_map = {"center": 0, **{f"leaf{j}": j for j in range(1, p + 1)}}
    return star.model_copy(
        update={"family": "star", "params": {"p": p}, "name_map": name_map}
    )
