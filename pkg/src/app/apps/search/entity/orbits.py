from collections.abc import Sequence

from app.apps.graph.entity.structure import Permutation


def orbit_minimum(
    vertex_labels: Sequence[int], automorphisms: Sequence[Permutation]
) -> tuple[int, ...]:
    """Лексикографически наименьший вектор меток вершин в орбите разметки

    Автоморфизм perm переносит метку вершины v на вершину perm[v].
    """
    best = tuple(vertex_labels)
    for perm in automorphisms:
        image = [0] * len(vertex_labels)
        for vertex, label in enumerate(vertex_labels):
            image[perm[vertex]] = label
        best = min(best, tuple(image))
    return best


def is_orbit_minimum(
    vertex_labels: Sequence[int], automorphisms: Sequence[Permutation]
) -> bool:
    return orbit_minimum(vertex_labels, automorphisms) == tuple(vertex_labels)


def orbit_key(
    k: int, vertex_labels: Sequence[int], automorphisms: Sequence[Permutation]
) -> tuple[int, tuple[int, ...]]:
    # при фиксированной константе метки рёбер определяются метками вершин
    return k, orbit_minimum(vertex_labels, automorphisms)
