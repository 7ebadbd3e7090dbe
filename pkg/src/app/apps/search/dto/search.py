from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeInt,
    PositiveInt,
    model_validator,
)

from app.apps.graph.dto.graph import Graph
from app.apps.labeling.dto.labeling import TotalLabeling


class SearchQuery(BaseModel):
    """Параметры поиска; без b ищется любая рёберно-магическая разметка"""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    b: NonNegativeInt | None = None
    magic_constant: PositiveInt | None = None
    limit: PositiveInt | None = None
    canonical_only: bool = False
    use_theorem_pruning: bool = False
    constants_only: bool = False

    @model_validator(mode="after")
    def b_in_range(self) -> "SearchQuery":
        if self.b is not None and self.b > self.graph.vertex_count:
            raise ValueError(
                f"Ожидалось 0 <= b <= {self.graph.vertex_count}, получено {self.b}"
            )
        return self


class SearchReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    b: int | None = None
    labelings: tuple[TotalLabeling, ...] = ()
    constants_found: tuple[int, ...] = ()
    exhausted: bool = True

    @property
    def found(self) -> bool:
        return bool(self.labelings)

    def to_document(self) -> dict:
        return {
            "b": self.b,
            "exhausted": self.exhausted,
            "constants": list(self.constants_found),
            "labelings": [labeling.model_dump() for labeling in self.labelings],
        }


class CanonicalCount(BaseModel):
    """Число орбит разметок под действием группы автоморфизмов"""

    model_config = ConfigDict(frozen=True)

    orbits: int
    labelings: int
    constants: tuple[int, ...] = ()
