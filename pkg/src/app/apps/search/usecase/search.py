from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Protocol

from pydantic import ValidationError

from app.apps.graph.dto.graph import Graph
from app.apps.graph.entity.structure import (
    Permutation,
    automorphisms,
    require_connected,
    twin_pairs,
)
from app.apps.labeling.dto.labeling import TotalLabeling, VertexLabeling
from app.apps.labeling.entity.verify import (
    edge_block_start,
    is_graceful,
    magic_constant_of,
)
from app.apps.search.dto.search import CanonicalCount, SearchQuery, SearchReport
from app.apps.search.entity import graceful
from app.apps.search.entity.backtrack import (
    RawLabeling,
    SearchPlan,
    collect,
    consecutive_plan,
    edge_magic_plan,
    per_constant_cap,
    solve_constant,
)
from app.apps.search.entity.orbits import orbit_key
from core.config import config
from core.exceptions import BudgetExceededError, GraphError, SearchIntegrityError
from tools.reporting import logger, report_message


class SearchServiceProtocol(Protocol):
    def search(self, query: SearchQuery) -> SearchReport:
        """Поиск b-последовательных или любых рёберно-магических разметок"""
        pass

    def find_consecutive(self, query: SearchQuery) -> SearchReport:
        """Поиск b-последовательных магических разметок"""
        pass

    def find_edge_magic(self, query: SearchQuery) -> SearchReport:
        """Поиск рёберно-магических разметок и их констант"""
        pass

    def feasible_b_set(
        self, graph: Graph, use_theorem_pruning: bool = False
    ) -> set[int]:
        """Все b, для которых существует b-последовательная разметка"""
        pass

    def count_canonical(self, graph: Graph, b: int) -> CanonicalCount:
        """Число разметок с точностью до автоморфизмов графа"""
        pass

    def find_graceful(
        self, graph: Graph, limit: int | None = 1
    ) -> list[VertexLabeling]:
        """Грациозные разметки графа"""
        pass


class SearchUseCase:
    def __init__(
        self,
        budget: int = config.budget,
        workers: int = config.workers,
        automorphism_vertex_limit: int = config.automorphism_vertex_limit,
    ):
        self._budget = budget
        self._workers = workers
        self._automorphism_vertex_limit = automorphism_vertex_limit

    def search(self, query: SearchQuery) -> SearchReport:
        if query.b is None:
            return self.find_edge_magic(query)
        return self.find_consecutive(query)

    def find_consecutive(self, query: SearchQuery) -> SearchReport:
        return self._find_consecutive(query)

    def _find_consecutive(
        self, query: SearchQuery, pool: ProcessPoolExecutor | None = None
    ) -> SearchReport:
        if query.b is None:
            raise ValueError("Для поиска последовательных разметок нужно задать b")
        graph = query.graph
        self._check_graph(graph)
        twins, group = self._symmetry(graph, query.canonical_only)
        plan = consecutive_plan(
            graph,
            query.b,
            use_theorem_pruning=query.use_theorem_pruning,
            twins=twins,
            automorphisms=group,
        )
        return self._run(plan, query, pool)

    def find_edge_magic(self, query: SearchQuery) -> SearchReport:
        graph = query.graph
        self._check_graph(graph)
        twins, group = self._symmetry(graph, query.canonical_only)
        plan = edge_magic_plan(graph, twins=twins, automorphisms=group)
        return self._run(plan, query.model_copy(update={"b": None}))

    def feasible_b_set(
        self, graph: Graph, use_theorem_pruning: bool = False
    ) -> set[int]:
        self._check_graph(graph)
        feasible = set()
        with self._executor() as pool:
            for b in range(graph.vertex_count + 1):
                query = SearchQuery(
                    graph=graph, b=b, limit=1, use_theorem_pruning=use_theorem_pruning
                )
                if self._find_consecutive(query, pool).found:
                    feasible.add(b)
        logger.info("Допустимые b: %s", sorted(feasible))
        return feasible

    def count_canonical(self, graph: Graph, b: int) -> CanonicalCount:
        report = self.find_consecutive(SearchQuery(graph=graph, b=b))
        group = automorphisms(graph, self._automorphism_vertex_limit)
        keys = {
            orbit_key(magic_constant_of(graph, labeling), labeling.vertex_labels, group)
            for labeling in report.labelings
        }
        return CanonicalCount(
            orbits=len(keys),
            labelings=len(report.labelings),
            constants=report.constants_found,
        )

    def find_graceful(
        self, graph: Graph, limit: int | None = 1
    ) -> list[VertexLabeling]:
        self._check_graph(graph)
        labelings = []
        for labels in graceful.find_graceful(graph, limit):
            labeling = VertexLabeling(vertex_labels=labels)
            if not is_graceful(graph, labeling):
                report_message(
                    f"Разметка {labels} не является грациозной", title="search"
                )
                raise SearchIntegrityError(f"Разметка {labels} не является грациозной")
            labelings.append(labeling)
        return sorted(labelings, key=lambda labeling: labeling.vertex_labels)

    def _check_graph(self, graph: Graph) -> None:
        require_connected(graph)
        if graph.edge_count == 0:
            raise GraphError("Для поиска нужен граф хотя бы с одним ребром")
        if graph.label_count > self._budget:
            err = BudgetExceededError(graph.label_count, self._budget)
            report_message(str(err), title="search", level="warning")
            raise err

    def _symmetry(
        self, graph: Graph, canonical_only: bool
    ) -> tuple[list[tuple[int, int]], list[Permutation]]:
        if not canonical_only:
            return [], []
        return twin_pairs(graph), automorphisms(graph, self._automorphism_vertex_limit)

    @contextmanager
    def _executor(
        self, pool: ProcessPoolExecutor | None = None
    ) -> Iterator[ProcessPoolExecutor | None]:
        """Пул процессов перебора; переданный пул используется повторно"""
        if pool is not None or self._workers <= 1:
            yield pool
            return
        with ProcessPoolExecutor(max_workers=self._workers) as created:
            yield created

    def _run(
        self,
        plan: SearchPlan,
        query: SearchQuery,
        pool: ProcessPoolExecutor | None = None,
    ) -> SearchReport:
        constants = plan.constants(query.magic_constant)
        with self._executor(pool) as active:
            collected, exhausted = self._collect(
                plan, constants, query.limit, query.constants_only, active
            )
        labelings = sorted(
            (self._verified(query, k, raw) for k, raw in collected),
            key=TotalLabeling.sort_key,
        )
        return SearchReport(
            b=query.b,
            labelings=tuple(labelings),
            constants_found=tuple(sorted({k for k, _ in collected})),
            exhausted=exhausted,
        )

    def _collect(
        self,
        plan: SearchPlan,
        constants: list[int],
        limit: int | None,
        constants_only: bool,
        pool: ProcessPoolExecutor | None,
    ) -> tuple[list[tuple[int, RawLabeling]], bool]:
        if pool is None or len(constants) < 2:

            def solve(k: int, cap: int | None) -> list[RawLabeling]:
                found, _ = solve_constant(plan, k, cap)
                logger.debug("k=%s: найдено %s", k, len(found))
                return found

            return collect(solve, constants, limit, constants_only)

        cap = per_constant_cap(limit, constants_only)
        futures = {k: pool.submit(solve_constant, plan, k, cap) for k in constants}
        results = {k: future.result()[0] for k, future in futures.items()}
        for k, found in results.items():
            logger.debug("k=%s: найдено %s", k, len(found))
        return collect(
            lambda k, c: results[k] if c is None else results[k][:c],
            constants,
            limit,
            constants_only,
        )

    def _verified(self, query: SearchQuery, k: int, raw: RawLabeling) -> TotalLabeling:
        """Перепроверяет найденную разметку независимо от состояния перебора"""
        try:
            labeling = TotalLabeling(vertex_labels=raw[0], edge_labels=raw[1])
        except ValidationError as err:
            report_message(str(err), title="search")
            raise SearchIntegrityError(f"Найдена не биекция: {raw}") from err
        if magic_constant_of(query.graph, labeling) != k or (
            query.b is not None and edge_block_start(query.graph, labeling) != query.b
        ):
            message = f"Разметка {raw} не является {query.b}-последовательной с k={k}"
            report_message(message, title="search")
            raise SearchIntegrityError(message)
        return labeling
