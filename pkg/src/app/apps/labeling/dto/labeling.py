from enum import StrEnum

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, model_validator

from app.apps.graph.dto.graph import PartiteSide


class TotalLabeling(BaseModel):
    """Биекция вершин и рёбер на {1, ..., |V|+|E|}"""

    model_config = ConfigDict(frozen=True)

    vertex_labels: tuple[PositiveInt, ...]
    edge_labels: tuple[PositiveInt, ...] = ()

    @model_validator(mode="after")
    def is_bijection(self) -> "TotalLabeling":
        labels = sorted(self.vertex_labels + self.edge_labels)
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError(
                f"Метки должны совпадать с {{1, ..., {len(labels)}}} без повторов"
            )
        return self

    @property
    def label_count(self) -> int:
        return len(self.vertex_labels) + len(self.edge_labels)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.vertex_labels, self.edge_labels


class VertexLabeling(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex_labels: tuple[NonNegativeInt, ...]

    @model_validator(mode="after")
    def distinct_labels(self) -> "VertexLabeling":
        if len(set(self.vertex_labels)) != len(self.vertex_labels):
            raise ValueError("Метки вершин должны быть попарно различны")
        return self


class LabelingClassification(BaseModel):
    model_config = ConfigDict(frozen=True)

    magic_constant: PositiveInt | None = None
    consecutive_index: NonNegativeInt | None = None
    is_super: bool = False
    side_with_small_labels: PartiteSide | None = None

    @model_validator(mode="after")
    def consistent(self) -> "LabelingClassification":
        if self.consecutive_index is not None and self.magic_constant is None:
            raise ValueError("Индекс последовательности без магической константы")
        if self.is_super and self.consecutive_index is None:
            raise ValueError("Супер-разметка должна иметь индекс последовательности")
        return self

    def report(self) -> dict:
        return {
            "k": self.magic_constant,
            "b": self.consecutive_index,
            "super": self.is_super,
            "small_side": self.side_with_small_labels,
        }


class LambdaStarCase(StrEnum):
    B_ZERO = "b=0"
    B_FULL = "b=|V|"
    B_X = "b=|X|"
    B_Y = "b=|Y|"
