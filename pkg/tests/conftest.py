import pytest

from app.apps.graph.dto.graph import FamilyHandle, Graph
from app.apps.graph.entity.families import build_path
from app.apps.graph.repository.graph import JsonGraphRepository
from app.apps.labeling.dto.labeling import TotalLabeling
from app.apps.labeling.repository.labeling import JsonLabelingRepository
from app.apps.search.usecase.search import SearchUseCase


@pytest.fixture(scope="session")
def search_use_case() -> SearchUseCase:
    return SearchUseCase(budget=22, workers=1, automorphism_vertex_limit=16)


@pytest.fixture(scope="function")
def path3() -> FamilyHandle:
    return build_path(3)


@pytest.fixture(scope="function")
def path3_labeling() -> TotalLabeling:
    # P_3 с метками 1, 5, 2: k = 10, рёбра {3, 4}
    return TotalLabeling(vertex_labels=(1, 5, 2), edge_labels=(4, 3))


@pytest.fixture(scope="function")
def two_edges_apart() -> Graph:
    return Graph(vertex_count=4, edges=((0, 1), (2, 3)))


@pytest.fixture(scope="function")
def graph_repo() -> JsonGraphRepository:
    return JsonGraphRepository(indent=2)


@pytest.fixture(scope="function")
def labeling_repo(graph_repo) -> JsonLabelingRepository:
    return JsonLabelingRepository(graph_repo, indent=2)
