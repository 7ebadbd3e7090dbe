import pytest

from pydantic import ValidationError

from app.apps.graph.dto.graph import (
    Bipartition,
    CaterpillarSpec,
    FamilyHandle,
    Graph,
    PartiteSide,
)
from core.exceptions import GraphError


@pytest.mark.graph
def test_edges_are_canonical():
    graph = Graph(vertex_count=3, edges=((2, 1), (1, 0)))
    assert graph.edges == ((0, 1), (1, 2))
    assert graph.edge_count == 2
    assert graph.label_count == 5


@pytest.mark.graph
@pytest.mark.parametrize(
    "edges",
    [
        ((0, 0),),
        ((0, 1), (1, 0)),
        ((0, 3),),
        ((-1, 1),),
    ],
)
def test_invalid_edges(edges):
    with pytest.raises(ValidationError):
        Graph(vertex_count=3, edges=edges)


@pytest.mark.graph
def test_neighbors_and_degrees():
    graph = Graph(vertex_count=4, edges=((0, 1), (0, 2), (0, 3)))
    assert graph.neighbors() == ((1, 2, 3), (0,), (0,), (0,))
    assert graph.degrees() == (3, 1, 1, 1)
    assert graph.edge_index() == {(0, 1): 0, (0, 2): 1, (0, 3): 2}


@pytest.mark.graph
def test_to_networkx_keeps_isolated_vertices():
    nx_graph = Graph(vertex_count=3, edges=((0, 1),)).to_networkx()
    assert sorted(nx_graph.nodes) == [0, 1, 2]
    assert nx_graph.number_of_edges() == 1


@pytest.mark.graph
def test_bipartition_sides():
    bipartition = Bipartition(side_x=(2, 0), side_y=(1,))
    graph = Graph(vertex_count=3, edges=((0, 1), (1, 2)))
    assert bipartition.side_x == (0, 2)
    assert bipartition.side(PartiteSide.Y) == (1,)
    assert bipartition.fits(graph)
    assert not Bipartition(side_x=(0, 1), side_y=(2,)).fits(graph)


@pytest.mark.graph
def test_bipartition_sides_must_be_disjoint():
    with pytest.raises(ValidationError):
        Bipartition(side_x=(0, 1), side_y=(1, 2))


@pytest.mark.graph
def test_caterpillar_spec_sizes():
    spec = CaterpillarSpec.parse("2,1,2")
    assert spec.leaf_counts == (2, 1, 2)
    assert spec.spine_length == 3
    assert (spec.x_size, spec.y_size) == (3, 5)
    assert spec.vertex_count == 8
    assert spec.edge_count == 7
    assert str(spec) == "S(2,1,2)"


@pytest.mark.graph
@pytest.mark.parametrize("text", ["", "a,b", "1,-1"])
def test_caterpillar_spec_parse_errors(text):
    with pytest.raises(GraphError):
        CaterpillarSpec.parse(text)


@pytest.mark.graph
def test_caterpillar_spec_length_mismatch():
    with pytest.raises(ValidationError):
        CaterpillarSpec(spine_length=2, leaf_counts=(1,))


@pytest.mark.graph
def test_family_handle_checks_names():
    graph = Graph(vertex_count=2, edges=((0, 1),))
    with pytest.raises(ValidationError):
        FamilyHandle(graph=graph, name_map={"a": 0})
    with pytest.raises(ValidationError):
        FamilyHandle(graph=graph, bipartition=Bipartition(side_x=(0, 1)))
    handle = FamilyHandle(graph=graph, name_map={"a": 0, "b": 1})
    assert handle.vertex("b") == 1
    assert handle.describe() == "graph"
    with pytest.raises(GraphError):
        handle.vertex("c")
