from collections.abc import Iterable
from enum import StrEnum
from math import gcd

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, model_validator


# множество значений хранится отсортированным кортежем
Claim = bool | int | tuple[int, ...]


class TheoremTag(StrEnum):
    BIPARTITE_B_VALUES = "bipartite-b-values"
    NONBIPARTITE_B_VALUES = "nonbipartite-b-values"
    TRICHOTOMY = "trichotomy"
    CATERPILLAR_B_VALUES = "caterpillar-b-values"
    CATERPILLAR_CONSTRUCTION = "caterpillar-construction"
    DOUBLE_STAR_UNIQUENESS = "double-star-uniqueness"
    DOUBLE_STAR_CONSTANT_FORM = "double-star-constant-form"
    DOUBLE_STAR_CONSTANT_CHAIN = "double-star-constant-chain"
    LOBSTER_B_VALUES = "lobster-b-values"
    LOBSTER_SMALL_CASES = "lobster-small-cases"
    TREE_CONVERSE = "tree-converse"
    LOBSTER_GRACEFUL = "lobster-graceful"
    ODD_CYCLE_B_VALUES = "odd-cycle-b-values"
    EVEN_CYCLE_CONSISTENCY = "even-cycle-consistency"
    COMPLETE_BIPARTITE_EXISTENCE = "complete-bipartite-existence"


class Verdict(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    OUT_OF_BUDGET = "out-of-budget"


def as_claim(value: bool | int | Iterable[int]) -> Claim:
    if isinstance(value, bool | int):
        return value
    if isinstance(value, set | frozenset):
        return tuple(sorted(value))
    return tuple(value)


class TheoremReport(BaseModel):
    """Сравнение предсказанного утверждения с результатом перебора"""

    model_config = ConfigDict(frozen=True)

    theorem_id: TheoremTag
    graph_description: str
    predicted: Claim
    observed: Claim | None = None
    verdict: Verdict
    note: str = ""

    @model_validator(mode="after")
    def verdict_matches(self) -> "TheoremReport":
        if self.verdict is Verdict.OUT_OF_BUDGET:
            if self.observed is not None:
                raise ValueError("Результат вне бюджета не может содержать наблюдение")
        elif (self.verdict is Verdict.PASS) != (self.predicted == self.observed):
            raise ValueError(
                f"Вердикт {self.verdict} не согласован "
                f"с {self.predicted} и {self.observed}"
            )
        return self

    @classmethod
    def compare(
        cls,
        theorem_id: TheoremTag,
        graph_description: str,
        predicted: bool | int | Iterable[int],
        observed: bool | int | Iterable[int],
        note: str = "",
    ) -> "TheoremReport":
        predicted, observed = as_claim(predicted), as_claim(observed)
        return cls(
            theorem_id=theorem_id,
            graph_description=graph_description,
            predicted=predicted,
            observed=observed,
            verdict=Verdict.PASS if predicted == observed else Verdict.FAIL,
            note=note,
        )

    @classmethod
    def out_of_budget(
        cls,
        theorem_id: TheoremTag,
        graph_description: str,
        predicted: bool | int | Iterable[int],
        note: str = "",
    ) -> "TheoremReport":
        return cls(
            theorem_id=theorem_id,
            graph_description=graph_description,
            predicted=as_claim(predicted),
            verdict=Verdict.OUT_OF_BUDGET,
            note=note,
        )

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def row(self) -> tuple[str, ...]:
        return (
            self.theorem_id,
            self.graph_description,
            _format_claim(self.predicted),
            "-" if self.observed is None else _format_claim(self.observed),
            self.verdict,
            self.note,
        )


def _format_claim(claim: Claim) -> str:
    if isinstance(claim, tuple):
        return "{" + ", ".join(map(str, claim)) + "}"
    return str(claim)


class ConstantFormWitness(BaseModel):
    """Представление магической константы двойной звезды в виде k = d*t + 6"""

    model_config = ConfigDict(frozen=True)

    m: PositiveInt
    n: PositiveInt
    d: PositiveInt
    k: int
    t: NonNegativeInt | None = None

    @model_validator(mode="after")
    def consistent(self) -> "ConstantFormWitness":
        if self.d != gcd(self.m, self.n):
            raise ValueError(f"d={self.d} не равно НОД({self.m}, {self.n})")
        if self.t is not None and self.k != self.d * self.t + 6:
            raise ValueError(f"k={self.k} не равно {self.d}*{self.t}+6")
        return self
