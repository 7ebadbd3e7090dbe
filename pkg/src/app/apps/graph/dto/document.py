from pydantic import BaseModel

from app.apps.graph.dto.graph import Bipartition, FamilyHandle, Graph


class FamilyDocument(BaseModel):
    name: str
    params: dict[str, int | list[int]] = {}
    name_map: dict[str, int] = {}
    bipartition: Bipartition | None = None


class GraphDocument(BaseModel):
    vertex_count: int
    edges: list[tuple[int, int]]
    family: FamilyDocument | None = None

    @classmethod
    def from_handle(cls, handle: FamilyHandle) -> "GraphDocument":
        family = None
        if handle.family != "graph" or handle.bipartition or handle.name_map:
            family = FamilyDocument(
                name=handle.family,
                params=handle.params,
                name_map=handle.name_map,
                bipartition=handle.bipartition,
            )
        return cls(
            vertex_count=handle.graph.vertex_count,
            edges=list(handle.graph.edges),
            family=family,
        )

    def to_handle(self) -> FamilyHandle:
        graph = Graph(vertex_count=self.vertex_count, edges=tuple(self.edges))
        if self.family is None:
            return FamilyHandle(graph=graph)
        return FamilyHandle(
            family=self.family.name,
            params=self.family.params,
            graph=graph,
            bipartition=self.family.bipartition,
            name_map=self.family.name_map,
        )
