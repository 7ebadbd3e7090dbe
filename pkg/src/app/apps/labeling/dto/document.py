from pydantic import BaseModel

from app.apps.graph.dto.document import GraphDocument
from app.apps.labeling.dto.labeling import TotalLabeling


class LabelingBundle(BaseModel):
    graph: GraphDocument
    labeling: TotalLabeling
    classification: dict | None = None


class GracefulDocument(BaseModel):
    graph: GraphDocument
    vertex_labels: list[int]
    graceful: bool
