from collections.abc import Sequence
from typing import Protocol

from pydantic import ValidationError

from app.apps.graph.dto.document import GraphDocument
from app.apps.graph.dto.graph import FamilyHandle
from app.apps.graph.repository.graph import GraphRepositoryProtocol
from app.apps.labeling.dto.document import GracefulDocument, LabelingBundle
from app.apps.labeling.dto.labeling import (
    LabelingClassification,
    TotalLabeling,
    VertexLabeling,
)
from core.config import config
from core.exceptions import LabelingError


class LabelingRepositoryProtocol(Protocol):
    def load_labeling(self, source: str) -> TotalLabeling:
        """Загружает разметку из файла или комплекта"""
        pass

    def load_bundle(self, source: str) -> tuple[FamilyHandle, TotalLabeling]:
        """Загружает граф вместе с разметкой"""
        pass

    def dump_bundle(
        self,
        handle: FamilyHandle,
        labeling: TotalLabeling,
        classification: LabelingClassification | None = None,
    ) -> str:
        """Сериализует комплект граф + разметка"""
        pass

    def dump_graceful(
        self, handle: FamilyHandle, labeling: VertexLabeling, graceful: bool
    ) -> str:
        """Сериализует граф с вершинной разметкой"""
        pass


class JsonLabelingRepository:
    def __init__(
        self, graph_repo: GraphRepositoryProtocol, indent: int = config.cli.indent
    ):
        self._graph_repo = graph_repo
        self._indent = indent

    def load_labeling(self, source: str) -> TotalLabeling:
        """Загружает разметку из файла или комплекта"""
        data = self._graph_repo.read_json(source)
        payload = data.get("labeling", data)
        try:
            return TotalLabeling.model_validate(payload)
        except ValidationError as err:
            raise LabelingError(f"Некорректная разметка в {source}: {err}") from err

    def load_bundle(self, source: str) -> tuple[FamilyHandle, TotalLabeling]:
        """Загружает граф вместе с разметкой"""
        return self._graph_repo.load_handle(source), self.load_labeling(source)

    def dump_bundle(
        self,
        handle: FamilyHandle,
        labeling: TotalLabeling,
        classification: LabelingClassification | None = None,
    ) -> str:
        """Сериализует комплект граф + разметка"""
        bundle = LabelingBundle(
            graph=GraphDocument.from_handle(handle),
            labeling=labeling,
            classification=classification.report() if classification else None,
        )
        return bundle.model_dump_json(indent=self._indent, exclude_none=True)

    def dump_graceful(
        self, handle: FamilyHandle, labeling: VertexLabeling, graceful: bool
    ) -> str:
        """Сериализует граф с вершинной разметкой"""
        document = GracefulDocument(
            graph=GraphDocument.from_handle(handle),
            vertex_labels=list(labeling.vertex_labels),
            graceful=graceful,
        )
        return document.model_dump_json(indent=self._indent, exclude_none=True)


def render_dot(
    handle: FamilyHandle,
    vertex_labels: Sequence[int] | None = None,
    edge_labels: Sequence[int] | None = None,
) -> str:
    """DOT-описание графа: метки вершин на узлах, метки рёбер на рёбрах"""
    names = {vertex: name for name, vertex in handle.name_map.items()}
    dot = f'graph "{handle.describe()}" {{\n'
    for vertex in range(handle.graph.vertex_count):
        text = names.get(vertex, str(vertex))
        if vertex_labels is not None:
            text += f"\\n{vertex_labels[vertex]}"
        dot += f'    {vertex} [label="{text}"];\n'
    for index, (u, v) in enumerate(handle.graph.edges):
        attributes = ""
        if edge_labels is not None:
            attributes = f' [label="{edge_labels[index]}"]'
        dot += f"    {u} -- {v}{attributes};\n"
    dot += "}\n"
    return dot
