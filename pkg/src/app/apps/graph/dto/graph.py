from enum import StrEnum

import networkx as nx

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    field_validator,
    model_validator,
)

from core.exceptions import GraphError


Edge = tuple[int, int]


class PartiteSide(StrEnum):
    X = "X"
    Y = "Y"


class Graph(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(ge=0)
    edges: tuple[Edge, ...] = ()

    @field_validator("edges")
    @classmethod
    def canonical_edges(cls, edges: tuple[Edge, ...]) -> tuple[Edge, ...]:
        """Упорядочивает рёбра: каждая пара по возрастанию, затем лексикографически"""
        pairs = []
        for u, v in edges:
            if u < 0 or v < 0:
                raise ValueError(f"Отрицательный индекс вершины в ребре ({u}, {v})")
            if u == v:
                raise ValueError(f"Петля в вершине {u}")
            pairs.append((min(u, v), max(u, v)))
        pairs.sort()
        for previous, current in zip(pairs, pairs[1:], strict=False):
            if previous == current:
                raise ValueError(f"Кратное ребро {current}")
        return tuple(pairs)

    @model_validator(mode="after")
    def endpoints_in_range(self) -> "Graph":
        for u, v in self.edges:
            if v >= self.vertex_count:
                raise ValueError(
                    f"Ребро ({u}, {v}) выходит за пределы {self.vertex_count} вершин"
                )
        return self

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def label_count(self) -> int:
        return self.vertex_count + len(self.edges)

    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adjacency: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return tuple(tuple(sorted(row)) for row in adjacency)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.neighbors())

    def edge_index(self) -> dict[Edge, int]:
        return {edge: index for index, edge in enumerate(self.edges)}

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.vertex_count))
        nx_graph.add_edges_from(self.edges)
        return nx_graph


class Bipartition(BaseModel):
    model_config = ConfigDict(frozen=True)

    side_x: tuple[int, ...]
    side_y: tuple[int, ...] = ()

    @field_validator("side_x", "side_y")
    @classmethod
    def sorted_side(cls, side: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sorted(side))

    @model_validator(mode="after")
    def disjoint_sides(self) -> "Bipartition":
        if set(self.side_x) & set(self.side_y):
            raise ValueError("Доли двудольного разбиения пересекаются")
        return self

    @property
    def x_size(self) -> int:
        return len(self.side_x)

    @property
    def y_size(self) -> int:
        return len(self.side_y)

    def side(self, tag: PartiteSide) -> tuple[int, ...]:
        return self.side_x if tag is PartiteSide.X else self.side_y

    def fits(self, graph: Graph) -> bool:
        """Проверяет, что доли покрывают все вершины и каждое ребро их соединяет"""
        if sorted(self.side_x + self.side_y) != list(range(graph.vertex_count)):
            return False
        x_side = set(self.side_x)
        return all((u in x_side) != (v in x_side) for u, v in graph.edges)


class CaterpillarSpec(BaseModel):
    """Гусеница: путь c_1..c_r, к вершине c_i присоединено n_i листьев"""

    model_config = ConfigDict(frozen=True)

    spine_length: int = Field(ge=1)
    leaf_counts: tuple[NonNegativeInt, ...]

    @model_validator(mode="before")
    @classmethod
    def default_spine_length(cls, data):
        if isinstance(data, dict) and "spine_length" not in data:
            data = {**data, "spine_length": len(data.get("leaf_counts", ()))}
        return data

    @model_validator(mode="after")
    def leaf_counts_match_spine(self) -> "CaterpillarSpec":
        if len(self.leaf_counts) != self.spine_length:
            raise ValueError(
                f"Ожидалось {self.spine_length} чисел листьев, "
                f"получено {len(self.leaf_counts)}"
            )
        return self

    @classmethod
    def of(cls, *leaf_counts: int) -> "CaterpillarSpec":
        return cls(leaf_counts=leaf_counts)

    @classmethod
    def parse(cls, text: str) -> "CaterpillarSpec":
        """Разбирает строку вида "2,1,2" """
        try:
            counts = tuple(int(item) for item in text.split(","))
        except ValueError as err:
            raise GraphError(
                f"Некорректное описание хребта гусеницы: {text!r}"
            ) from err
        if any(count < 0 for count in counts):
            raise GraphError(f"Число листьев не может быть отрицательным: {text!r}")
        return cls(leaf_counts=counts)

    @property
    def x_size(self) -> int:
        """Доля с нечётными вершинами хребта и листьями чётных вершин"""
        r = self.spine_length
        return sum(self.leaf_counts[1::2]) + (r + 1) // 2

    @property
    def y_size(self) -> int:
        r = self.spine_length
        return sum(self.leaf_counts[0::2]) + r // 2

    @property
    def vertex_count(self) -> int:
        return sum(self.leaf_counts) + self.spine_length

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1

    def __str__(self) -> str:
        return f"S({','.join(str(count) for count in self.leaf_counts)})"


class FamilyHandle(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str = "graph"
    params: dict[str, int | list[int]] = {}
    graph: Graph
    bipartition: Bipartition | None = None
    name_map: dict[str, int] = {}

    @model_validator(mode="after")
    def consistent_names(self) -> "FamilyHandle":
        if self.name_map and sorted(self.name_map.values()) != list(
            range(self.graph.vertex_count)
        ):
            raise ValueError("Имена вершин семейства должны покрывать все вершины")
        if self.bipartition is not None and not self.bipartition.fits(self.graph):
            raise ValueError("Разбиение не является двудольным для графа")
        return self

    def vertex(self, name: str) -> int:
        try:
            return self.name_map[name]
        except KeyError as err:
            raise GraphError(f"В семействе {self.family} нет вершины {name}") from err

    def describe(self) -> str:
        if not self.params:
            return self.family
        values = ",".join(
            ",".join(map(str, value)) if isinstance(value, list) else str(value)
            for value in self.params.values()
        )
        return f"{self.family}({values})"
