import asyncio
import itertools

from collections.abc import Callable, Coroutine, Iterable, Sequence
from typing import Any

from app.apps.analysis.dto.report import Claim, TheoremReport, TheoremTag, Verdict
from app.apps.analysis.entity.predictions import (
    candidate_report,
    caterpillar_b_set,
    chain_expectations,
    classify_trichotomy,
    constant_form_check,
    lobster_b_set,
)
from app.apps.construction.entity.formulas import (
    caterpillar_beta_labeling,
    double_star_chain,
)
from app.apps.graph.dto.graph import CaterpillarSpec, FamilyHandle
from app.apps.graph.entity.families import (
    build_caterpillar,
    build_complete_bipartite,
    build_cycle,
    build_double_star,
    build_lobster,
)
from app.apps.labeling.entity.verify import classify
from app.apps.search.dto.search import SearchQuery
from app.apps.search.usecase.search import SearchServiceProtocol
from core.exceptions import BudgetExceededError
from tools.reporting import report_message


Observation = tuple[bool | int | Iterable[int], str]
Judge = Callable[[set[int]], Observation]

ODD_CYCLES = (3, 5, 7)
EVEN_CYCLES = (4, 6)
COMPLETE_BIPARTITE = ((1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 3))
DOUBLE_STARS = ((1, 1), (1, 2), (2, 2), (1, 3))
CONSTANT_FORM_STARS = ((1, 1), (1, 2), (2, 2), (1, 3), (2, 4), (3, 3))
LOBSTERS = (1, 2, 3, 4)


def caterpillar_grid(max_spine: int = 3, max_leaves: int = 2) -> list[CaterpillarSpec]:
    """Гусеницы с r <= max_spine и n_i <= max_leaves, имеющие хотя бы одно ребро"""
    specs = []
    for spine in range(1, max_spine + 1):
        for counts in itertools.product(range(max_leaves + 1), repeat=spine):
            spec = CaterpillarSpec.of(*counts)
            if spec.vertex_count > 1:
                specs.append(spec)
    return specs


def _found(feasible: set[int]) -> str:
    return f"найдено {sorted(feasible)}"


class TheoremUseCase:
    def __init__(self, search: SearchServiceProtocol):
        self._search = search

    async def closing_claims_suite(self) -> list[TheoremReport]:
        checks = [
            self._feasibility(
                build_cycle(length),
                TheoremTag.ODD_CYCLE_B_VALUES,
                {0, length},
                lambda feasible: (feasible, ""),
            )
            for length in ODD_CYCLES
        ]
        checks += [self._even_cycle(length) for length in EVEN_CYCLES]
        checks += [
            self._feasibility(
                build_complete_bipartite(m, n),
                TheoremTag.COMPLETE_BIPARTITE_EXISTENCE,
                m == 1 or n == 1,
                lambda feasible: (bool(feasible), _found(feasible)),
            )
            for m, n in COMPLETE_BIPARTITE
        ]
        return await self._gather(checks)

    async def caterpillar_suite(
        self, specs: Sequence[CaterpillarSpec] | None = None
    ) -> list[TheoremReport]:
        specs = caterpillar_grid() if specs is None else specs
        reports = [self._caterpillar_construction(spec) for spec in specs]
        reports += await self._gather(
            self._feasibility(
                build_caterpillar(spec),
                TheoremTag.CATERPILLAR_B_VALUES,
                caterpillar_b_set(spec),
                lambda feasible: (feasible, ""),
            )
            for spec in specs
        )
        return reports

    async def lobster_suite(self, ps: Sequence[int] = LOBSTERS) -> list[TheoremReport]:
        reports = await self._gather(self._lobster(p) for p in ps)
        if 4 in ps:
            reports.append(await self._lobster_graceful(build_lobster(4)))
        return reports

    async def double_star_suite(
        self,
        pairs: Sequence[tuple[int, int]] = DOUBLE_STARS,
        form_pairs: Sequence[tuple[int, int]] = CONSTANT_FORM_STARS,
    ) -> list[TheoremReport]:
        checks = []
        for m, n in pairs:
            checks.append(self._double_star_uniqueness(m, n, m + 1))
            if n != m:
                checks.append(self._double_star_uniqueness(m, n, n + 1))
        checks += [self._double_star_constant_form(m, n) for m, n in form_pairs]
        reports = [self._double_star_chain(m, n) for m, n in pairs]
        reports += await asyncio.gather(*checks)
        return reports

    async def trichotomy_report(self, handle: FamilyHandle) -> TheoremReport:
        graph = handle.graph

        def observe():
            return {
                b: self._search.find_consecutive(
                    SearchQuery(graph=graph, b=b, limit=1)
                )
                for b in range(graph.vertex_count + 1)
            }

        try:
            results = await asyncio.to_thread(observe)
        except BudgetExceededError as err:
            return TheoremReport.out_of_budget(
                TheoremTag.TRICHOTOMY, handle.describe(), True, note=str(err)
            )
        return self._logged(
            classify_trichotomy(graph, handle.bipartition, results, handle.describe())
        )

    async def _gather(
        self, checks: Iterable[Coroutine[Any, Any, list[TheoremReport]]]
    ) -> list[TheoremReport]:
        groups = await asyncio.gather(*checks)
        return [report for group in groups for report in group]

    async def _feasibility(
        self,
        handle: FamilyHandle,
        theorem_id: TheoremTag,
        predicted: Claim | Iterable[int],
        judge: Judge,
    ) -> list[TheoremReport]:
        """Сравнивает множество допустимых b с утверждением и с кандидатами"""
        description = handle.describe()
        try:
            feasible = await asyncio.to_thread(
                self._search.feasible_b_set, handle.graph
            )
        except BudgetExceededError as err:
            return [
                TheoremReport.out_of_budget(
                    theorem_id, description, predicted, note=str(err)
                )
            ]
        observed, note = judge(feasible)
        return [
            self._logged(
                TheoremReport.compare(
                    theorem_id, description, predicted, observed, note
                )
            ),
            self._logged(candidate_report(handle.graph, description, feasible)),
        ]

    async def _checked(
        self,
        theorem_id: TheoremTag,
        description: str,
        predicted: Claim | Iterable[int],
        observe: Callable[[], Observation],
    ) -> TheoremReport:
        try:
            observed, note = await asyncio.to_thread(observe)
        except BudgetExceededError as err:
            return TheoremReport.out_of_budget(
                theorem_id, description, predicted, note=str(err)
            )
        return self._logged(
            TheoremReport.compare(theorem_id, description, predicted, observed, note)
        )

    @staticmethod
    def _logged(report: TheoremReport) -> TheoremReport:
        if report.verdict is Verdict.FAIL:
            report_message(
                f"{report.graph_description}: ожидалось {report.predicted}, "
                f"получено {report.observed}. {report.note}",
                title=report.theorem_id,
            )
        return report

    async def _even_cycle(self, length: int) -> list[TheoremReport]:
        def judge(feasible: set[int]) -> Observation:
            note = _found(feasible)
            if not feasible:
                note += "; разметок нет, утверждение о чётных циклах не подтверждено"
            return (0 in feasible) == (length in feasible), note

        return await self._feasibility(
            build_cycle(length), TheoremTag.EVEN_CYCLE_CONSISTENCY, True, judge
        )

    def _caterpillar_construction(self, spec: CaterpillarSpec) -> TheoremReport:
        handle = build_caterpillar(spec)
        classification = classify(
            handle.graph, caterpillar_beta_labeling(spec), handle.bipartition
        )
        x, y = spec.x_size, spec.y_size
        return self._logged(
            TheoremReport.compare(
                TheoremTag.CATERPILLAR_CONSTRUCTION,
                handle.describe(),
                predicted=(y, 2 * x + 4 * y),
                observed=(
                    classification.consecutive_index or 0,
                    classification.magic_constant or 0,
                ),
                note="(b, k)",
            )
        )

    async def _lobster(self, p: int) -> list[TheoremReport]:
        handle = build_lobster(p)
        if p < 3:
            return await self._feasibility(
                handle,
                TheoremTag.LOBSTER_SMALL_CASES,
                lobster_b_set(p),
                lambda feasible: (feasible, ""),
            )
        bipartition = handle.bipartition
        observed: set[int] = set()

        def judge(feasible: set[int]) -> Observation:
            observed.update(feasible)
            return feasible, ""

        reports = await self._feasibility(
            handle, TheoremTag.LOBSTER_B_VALUES, lobster_b_set(p), judge
        )
        if reports[0].verdict is Verdict.OUT_OF_BUDGET:
            return reports
        # супер-разметка есть, а b = |X| и b = |Y| недопустимы
        converse_fails = (
            handle.graph.vertex_count in observed
            and bipartition.x_size not in observed
            and bipartition.y_size not in observed
        )
        reports.append(
            self._logged(
                TheoremReport.compare(
                    TheoremTag.TREE_CONVERSE,
                    handle.describe(),
                    predicted=True,
                    observed=converse_fails,
                    note=f"{_found(observed)}, |X|={bipartition.x_size}, "
                    f"|Y|={bipartition.y_size}",
                )
            )
        )
        return reports

    async def _lobster_graceful(self, handle: FamilyHandle) -> TheoremReport:
        def observe() -> Observation:
            labelings = self._search.find_graceful(handle.graph, limit=1)
            note = str(list(labelings[0].vertex_labels)) if labelings else ""
            return bool(labelings), note

        return await self._checked(
            TheoremTag.LOBSTER_GRACEFUL, handle.describe(), True, observe
        )

    async def _double_star_uniqueness(self, m: int, n: int, b: int) -> TheoremReport:
        handle = build_double_star(m, n)
        k = 4 * m + 2 * n + 6 if b == m + 1 else 2 * m + 4 * n + 6

        def observe() -> Observation:
            count = self._search.count_canonical(handle.graph, b)
            note = f"b={b}, разметок {count.labelings}, орбит {count.orbits}"
            return (count.orbits, *count.constants), note

        return await self._checked(
            TheoremTag.DOUBLE_STAR_UNIQUENESS, handle.describe(), (2, k), observe
        )

    async def _double_star_constant_form(self, m: int, n: int) -> TheoremReport:
        handle = build_double_star(m, n)

        def observe() -> Observation:
            report = self._search.find_edge_magic(
                SearchQuery(graph=handle.graph, constants_only=True)
            )
            constants = report.constants_found
            holds = bool(constants) and all(
                constant_form_check(m, n, k).t is not None and k >= 2 * m + 2 * n + 7
                for k in constants
            )
            return holds, f"константы {list(constants)}"

        return await self._checked(
            TheoremTag.DOUBLE_STAR_CONSTANT_FORM, handle.describe(), True, observe
        )

    def _double_star_chain(self, m: int, n: int) -> TheoremReport:
        handle = build_double_star(m, n)
        expected = chain_expectations(m, n)
        observed = []
        for name, labeling in double_star_chain(m, n).items():
            classification = classify(handle.graph, labeling, handle.bipartition)
            observed.append(
                (name, classification.consecutive_index, classification.magic_constant)
            )
        mismatches = [name for name, b, k in observed if expected[name] != (b, k)]
        return self._logged(
            TheoremReport.compare(
                TheoremTag.DOUBLE_STAR_CONSTANT_CHAIN,
                handle.describe(),
                predicted=True,
                observed=not mismatches,
                note=", ".join(f"{name}: b={b}, k={k}" for name, b, k in observed),
            )
        )
