import pytest

from app.apps.graph.entity.families import build_cycle, build_lobster, build_path
from app.apps.labeling.dto.labeling import VertexLabeling
from app.apps.labeling.entity.verify import is_graceful
from app.apps.search.entity.graceful import find_graceful


@pytest.mark.search
def test_all_graceful_labelings_of_path(path3):
    found = find_graceful(path3.graph, limit=None)
    assert sorted(found) == [(0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1)]


@pytest.mark.search
@pytest.mark.parametrize(
    "handle",
    [build_path(5), build_cycle(4), build_lobster(3)],
    ids=lambda handle: handle.describe(),
)
def test_found_labelings_are_graceful(handle):
    found = find_graceful(handle.graph)
    assert len(found) == 1
    assert is_graceful(handle.graph, VertexLabeling(vertex_labels=found[0]))


@pytest.mark.search
def test_no_graceful_labeling():
    # C_5: |E| ≡ 1 (mod 4)
    assert find_graceful(build_cycle(5).graph, limit=None) == []
