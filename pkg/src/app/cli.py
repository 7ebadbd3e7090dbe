"""Командная строка magilab: генерация графов, построение, проверка и поиск разметок"""

import argparse
import asyncio
import json
import sys

from collections.abc import Callable, Sequence

from pydantic import ValidationError

from app.apps.analysis.dto.report import TheoremReport, Verdict
from app.apps.analysis.entity.predictions import (
    constant_form_check,
    predicted_b_candidates,
)
from app.apps.analysis.usecase.theorems import TheoremUseCase
from app.apps.construction.entity import transforms
from app.apps.construction.entity.formulas import (
    caterpillar_beta_labeling,
    caterpillar_super_labeling,
    double_star_consecutive,
)
from app.apps.graph.dto.graph import CaterpillarSpec, FamilyHandle
from app.apps.graph.entity import families
from app.apps.graph.entity.structure import bipartition_of, is_connected
from app.apps.graph.repository.graph import (
    STDIN,
    GraphRepositoryProtocol,
    JsonGraphRepository,
)
from app.apps.labeling.dto.labeling import TotalLabeling
from app.apps.labeling.entity.verify import classify, is_graceful
from app.apps.labeling.repository.labeling import (
    JsonLabelingRepository,
    LabelingRepositoryProtocol,
    render_dot,
)
from app.apps.search.dto.search import SearchQuery
from app.apps.search.usecase.search import SearchServiceProtocol, SearchUseCase
from core.config import config
from core.exceptions import BudgetExceededError, MagilabError
from tools.reporting import configure_logging


JSON, DOT, TABLE = "json", "dot", "table"
REPORT_HEADERS = ("theorem", "graph", "predicted", "observed", "verdict", "note")


def render_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [list(map(str, headers))] + [list(map(str, row)) for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths, strict=True))
        for row in cells
    ]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(line.rstrip() for line in lines)


def spine(text: str) -> CaterpillarSpec:
    return CaterpillarSpec.parse(text)


def _b_value(text: str) -> int | str:
    if text == "all":
        return text
    try:
        return int(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(
            f"ожидалось целое число или all: {text}"
        ) from err


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magilab", description="b-последовательные рёберно-магические разметки"
    )
    parser.add_argument("--format", choices=(JSON, DOT, TABLE), default=None)
    parser.add_argument("--log-level", default=None)
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="построить граф семейства")
    families_parser = gen.add_subparsers(dest="family", required=True)
    families_parser.add_parser("caterpillar").add_argument(
        "--spine", type=spine, required=True
    )
    double_star = families_parser.add_parser("double-star")
    double_star.add_argument("m", type=int)
    double_star.add_argument("n", type=int)
    families_parser.add_parser("lobster").add_argument("-p", type=int, required=True)
    families_parser.add_parser("cycle").add_argument("-l", type=int, required=True)
    kmn = families_parser.add_parser("kmn")
    kmn.add_argument("m", type=int)
    kmn.add_argument("n", type=int)
    families_parser.add_parser("path").add_argument("-n", type=int, required=True)
    families_parser.add_parser("star").add_argument("-p", type=int, required=True)

    construct = commands.add_parser("construct", help="явная разметка семейства")
    constructions = construct.add_subparsers(dest="construction", required=True)
    constructions.add_parser("caterpillar-beta").add_argument(
        "--spine", type=spine, required=True
    )
    constructions.add_parser("caterpillar-super").add_argument(
        "--spine", type=spine, required=True
    )
    construct_star = constructions.add_parser("double-star")
    construct_star.add_argument("m", type=int)
    construct_star.add_argument("n", type=int)
    construct_star.add_argument("--variant", type=int, choices=(1, 2), default=1)

    transform = commands.add_parser("transform", help="преобразовать разметку")
    transform.add_argument("kind", choices=("dual", "lambda-star", "graceful", "super"))
    transform.add_argument("source", nargs="?", default=STDIN)

    verify = commands.add_parser("verify", help="классифицировать разметку")
    verify.add_argument("source", nargs="?", default=STDIN)
    verify.add_argument("labeling", nargs="?", default=None)
    verify.add_argument("--b", type=int, default=None)

    search = commands.add_parser("search", help="перебор разметок")
    search.add_argument("--graph", required=True)
    search.add_argument("--b", type=_b_value, default=None)
    search.add_argument("--k", type=int, default=None)
    search.add_argument("--limit", type=int, default=None)
    search.add_argument("--canonical", action="store_true")
    search.add_argument("--constants-only", action="store_true")
    search.add_argument("--no-prune", action="store_true")

    analyze = commands.add_parser("analyze", help="предсказания для графа")
    analyses = analyze.add_subparsers(dest="analysis", required=True)
    constant_form = analyses.add_parser("constant-form")
    for name in ("m", "n", "k"):
        constant_form.add_argument(name, type=int)
    analyses.add_parser("predict").add_argument("graph", nargs="?", default=STDIN)
    analyses.add_parser("trichotomy").add_argument("graph", nargs="?", default=STDIN)

    suite = commands.add_parser("suite", help="проверка утверждений перебором")
    suite.add_argument(
        "name", choices=("closing", "caterpillar", "lobster", "double-star")
    )
    return parser


class Commands:
    def __init__(
        self,
        graph_repo: GraphRepositoryProtocol,
        labeling_repo: LabelingRepositoryProtocol,
        search: SearchServiceProtocol,
        theorems: TheoremUseCase,
        output_format: str | None,
    ):
        self._graph_repo = graph_repo
        self._labeling_repo = labeling_repo
        self._search = search
        self._theorems = theorems
        self._format = output_format

    def dispatch(self, args: argparse.Namespace) -> int:
        handler: Callable[[argparse.Namespace], int] = getattr(self, args.command)
        return handler(args)

    def _resolved_format(self, default: str = JSON) -> str:
        return self._format or default

    def gen(self, args: argparse.Namespace) -> int:
        match args.family:
            case "caterpillar":
                handle = families.build_caterpillar(args.spine)
            case "double-star":
                handle = families.build_double_star(args.m, args.n)
            case "lobster":
                handle = families.build_lobster(args.p)
            case "cycle":
                handle = families.build_cycle(args.l)
            case "kmn":
                handle = families.build_complete_bipartite(args.m, args.n)
            case "path":
                handle = families.build_path(args.n)
            case _:
                handle = families.build_star(args.p)
        match self._resolved_format():
            case "dot":
                self._print(render_dot(handle))
            case "table":
                names = {vertex: name for name, vertex in handle.name_map.items()}
                rows = [
                    (vertex, names.get(vertex, ""), handle.graph.degrees()[vertex])
                    for vertex in range(handle.graph.vertex_count)
                ]
                self._print(render_table(("vertex", "name", "degree"), rows))
            case _:
                self._print(self._graph_repo.dump_handle(handle))
        return 0

    def construct(self, args: argparse.Namespace) -> int:
        match args.construction:
            case "caterpillar-beta":
                handle = families.build_caterpillar(args.spine)
                labeling = caterpillar_beta_labeling(args.spine)
            case "caterpillar-super":
                handle = families.build_caterpillar(args.spine)
                labeling = caterpillar_super_labeling(args.spine)
            case _:
                handle = families.build_double_star(args.m, args.n)
                labeling = double_star_consecutive(args.m, args.n, args.variant)
        self._print_bundle(handle, labeling)
        return 0

    def transform(self, args: argparse.Namespace) -> int:
        handle, labeling = self._labeling_repo.load_bundle(args.source)
        graph, bipartition = handle.graph, handle.bipartition
        if bipartition is None and is_connected(graph):
            bipartition = bipartition_of(graph)
        match args.kind:
            case "dual":
                result = transforms.dual(graph, labeling)
            case "lambda-star":
                result = transforms.lambda_star(graph, bipartition, labeling)
            case "super":
                result = transforms.to_super_edge_magic(graph, bipartition, labeling)
            case _:
                graceful = transforms.to_graceful(graph, bipartition, labeling)
                holds = is_graceful(graph, graceful)
                match self._resolved_format():
                    case "dot":
                        self._print(render_dot(handle, graceful.vertex_labels))
                    case "table":
                        self._print(
                            render_table(
                                ("vertex", "label"), enumerate(graceful.vertex_labels)
                            )
                        )
                    case _:
                        self._print(
                            self._labeling_repo.dump_graceful(handle, graceful, holds)
                        )
                return 0 if holds else 1
        self._print_bundle(handle, result)
        return 0

    def verify(self, args: argparse.Namespace) -> int:
        handle = self._graph_repo.load_handle(args.source)
        labeling = self._labeling_repo.load_labeling(args.labeling or args.source)
        classification = classify(handle.graph, labeling, handle.bipartition)
        report = classification.report()
        match self._resolved_format():
            case "dot":
                self._print(
                    render_dot(handle, labeling.vertex_labels, labeling.edge_labels)
                )
            case "table":
                self._print(render_table(("field", "value"), list(report.items())))
            case _:
                self._print(json.dumps(report, indent=config.cli.indent))
        if classification.magic_constant is None:
            return 1
        if args.b is not None and classification.consecutive_index != args.b:
            return 1
        return 0

    def search(self, args: argparse.Namespace) -> int:
        handle = self._graph_repo.load_handle(args.graph)
        graph = handle.graph
        prune = not args.no_prune
        if args.b == "all":
            feasible = sorted(
                self._search.feasible_b_set(graph, use_theorem_pruning=prune)
            )
            if self._resolved_format() == TABLE:
                rows = [(handle.describe(), feasible)]
                self._print(render_table(("graph", "feasible b"), rows))
            else:
                self._print(
                    json.dumps({"feasible": feasible}, indent=config.cli.indent)
                )
            return 0
        report = self._search.search(
            SearchQuery(
                graph=graph,
                b=args.b,
                magic_constant=args.k,
                limit=args.limit,
                canonical_only=args.canonical,
                use_theorem_pruning=prune,
                constants_only=args.constants_only,
            )
        )
        match self._resolved_format():
            case "dot":
                first = report.labelings[0] if report.labelings else None
                self._print(
                    render_dot(
                        handle,
                        first.vertex_labels if first else None,
                        first.edge_labels if first else None,
                    )
                )
            case "table":
                rows = [
                    (list(labeling.vertex_labels), list(labeling.edge_labels))
                    for labeling in report.labelings
                ]
                self._print(render_table(("vertex labels", "edge labels"), rows))
                self._print(
                    f"constants: {list(report.constants_found)}; "
                    f"exhausted: {report.exhausted}"
                )
            case _:
                self._print(json.dumps(report.to_document(), indent=config.cli.indent))
        return 0

    def analyze(self, args: argparse.Namespace) -> int:
        match args.analysis:
            case "constant-form":
                witness = constant_form_check(args.m, args.n, args.k)
                if self._resolved_format() == TABLE:
                    self._print(
                        render_table(
                            ("field", "value"), list(witness.model_dump().items())
                        )
                    )
                else:
                    self._print(witness.model_dump_json(indent=config.cli.indent))
                return 0
            case "predict":
                handle = self._graph_repo.load_handle(args.graph)
                candidates = sorted(
                    predicted_b_candidates(handle.graph, handle.bipartition)
                )
                self._print(
                    json.dumps({"candidates": candidates}, indent=config.cli.indent)
                )
                return 0
            case _:
                handle = self._graph_repo.load_handle(args.graph)
                report = asyncio.run(self._theorems.trichotomy_report(handle))
                return self._print_reports([report])

    def suite(self, args: argparse.Namespace) -> int:
        runners = {
            "closing": self._theorems.closing_claims_suite,
            "caterpillar": self._theorems.caterpillar_suite,
            "lobster": self._theorems.lobster_suite,
            "double-star": self._theorems.double_star_suite,
        }
        reports = asyncio.run(runners[args.name]())
        return self._print_reports(reports)

    def _print_reports(self, reports: list[TheoremReport]) -> int:
        if self._resolved_format(TABLE) == TABLE:
            rows = [report.row() for report in reports]
            self._print(render_table(REPORT_HEADERS, rows))
        else:
            documents = [report.model_dump(mode="json") for report in reports]
            self._print(
                json.dumps(documents, indent=config.cli.indent, ensure_ascii=False)
            )
        return 1 if any(report.verdict is Verdict.FAIL for report in reports) else 0

    def _print_bundle(self, handle: FamilyHandle, labeling: TotalLabeling) -> None:
        classification = classify(handle.graph, labeling, handle.bipartition)
        match self._resolved_format():
            case "dot":
                self._print(
                    render_dot(handle, labeling.vertex_labels, labeling.edge_labels)
                )
            case "table":
                names = {vertex: name for name, vertex in handle.name_map.items()}
                rows = [
                    (names.get(vertex, str(vertex)), label)
                    for vertex, label in enumerate(labeling.vertex_labels)
                ]
                rows += [
                    (f"{names.get(u, u)}-{names.get(v, v)}", label)
                    for (u, v), label in zip(
                        handle.graph.edges, labeling.edge_labels, strict=True
                    )
                ]
                self._print(render_table(("element", "label"), rows))
                self._print(
                    f"k={classification.magic_constant}, "
                    f"b={classification.consecutive_index}"
                )
            case _:
                self._print(
                    self._labeling_repo.dump_bundle(handle, labeling, classification)
                )

    @staticmethod
    def _print(text: str) -> None:
        print(text.rstrip("\n"))


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    configure_logging(args.log_level)
    graph_repo = JsonGraphRepository()
    search = SearchUseCase(budget=config.budget, workers=config.workers)
    commands = Commands(
        graph_repo=graph_repo,
        labeling_repo=JsonLabelingRepository(graph_repo),
        search=search,
        theorems=TheoremUseCase(search),
        output_format=args.format,
    )
    try:
        return commands.dispatch(args)
    except BudgetExceededError as err:
        print(f"magilab: превышен бюджет поиска: {err}", file=sys.stderr)
        return 2
    except (MagilabError, ValidationError, ValueError) as err:
        print(f"magilab: ошибка: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
