import json
import sys

from pathlib import Path
from typing import Protocol, TextIO

from pydantic import ValidationError

from app.apps.graph.dto.document import GraphDocument
from app.apps.graph.dto.graph import FamilyHandle
from core.config import config
from core.exceptions import GraphError
from tools.reporting import report_message


STDIN = "-"


class GraphRepositoryProtocol(Protocol):
    def read_json(self, source: str) -> dict:
        """Читает JSON-документ из файла или стандартного ввода"""
        pass

    def load_handle(self, source: str) -> FamilyHandle:
        """Загружает граф (или граф из комплекта с разметкой)"""
        pass

    def dump_handle(self, handle: FamilyHandle) -> str:
        """Сериализует граф в JSON"""
        pass


class JsonGraphRepository:
    def __init__(self, stdin: TextIO | None = None, indent: int = config.cli.indent):
        self._stdin = stdin
        self._indent = indent
        self._stdin_cache: dict | None = None

    def read_json(self, source: str) -> dict:
        """Читает JSON-документ из файла или стандартного ввода"""
        if source == STDIN:
            if self._stdin_cache is None:
                text = (self._stdin or sys.stdin).read()
                self._stdin_cache = self._parse(text, source)
            return self._stdin_cache
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as err:
            raise GraphError(f"Не удалось прочитать файл {source}: {err}") from err
        return self._parse(text, source)

    @staticmethod
    def _parse(text: str, source: str) -> dict:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            report_message(message=str(err), title=f"JSON:{source}", level="warning")
            raise GraphError(f"Некорректный JSON в {source}") from err
        if not isinstance(data, dict):
            raise GraphError(f"Ожидался JSON-объект в {source}")
        return data

    def load_handle(self, source: str) -> FamilyHandle:
        """Загружает граф (или граф из комплекта с разметкой)"""
        data = self.read_json(source)
        document = data.get("graph", data)
        try:
            return GraphDocument.model_validate(document).to_handle()
        except ValidationError as err:
            raise GraphError(f"Некорректное описание графа в {source}: {err}") from err

    def dump_handle(self, handle: FamilyHandle) -> str:
        """Сериализует граф в JSON"""
        return GraphDocument.from_handle(handle).model_dump_json(
            indent=self._indent, exclude_none=True
        )
