"""
Dual graph wire schemas.
"""
from typing import List, Optional

from pydantic import BaseModel, validator

from qres.models.graph import ABSTRACT, ARROW, EMBEDDED, EXCEPTIONAL, DualGraph, Edge, Vertex
from qres.schemas.common import CyclicTypeSchema, RationalSchema


class VertexSchema(BaseModel):
    id: int
    kind: str = EXCEPTIONAL
    m: RationalSchema
    self_int: Optional[RationalSchema] = None
    genus: int = 0
    sing0: List[CyclicTypeSchema] = []
    branch: Optional[int] = None
    label: Optional[str] = None

    @validator("kind")
    def known_kind(cls, value):
        if value not in (EXCEPTIONAL, ARROW):
            raise ValueError(f"kind must be {EXCEPTIONAL!r} or {ARROW!r}")
        return value

    @validator("genus")
    def nonnegative_genus(cls, value):
        if value < 0:
            raise ValueError("genus must be nonnegative")
        return value

    def to_model(self) -> Vertex:
        return Vertex(
            id=self.id,
            kind=self.kind,
            m=self.m.to_fraction(),
            self_int=self.self_int.to_fraction() if self.self_int else None,
            genus=self.genus,
            sing0=tuple(t.to_model() for t in self.sing0),
            branch=self.branch,
            label=self.label,
        )

    class Config:
        orm_mode = True


class EdgeSchema(BaseModel):
    """Double point; type.a belongs to v1."""
    v1: int
    v2: int
    type: CyclicTypeSchema = CyclicTypeSchema(d=1, a=0, b=0)
    point: Optional[int] = None

    def to_model(self) -> Edge:
        return Edge(self.v1, self.v2, self.type.to_model(), self.point)

    class Config:
        orm_mode = True


class DualGraphSchema(BaseModel):
    """Weighted dual graph of an embedded or abstract Q-resolution."""
    kind: str = EMBEDDED
    ambient: CyclicTypeSchema = CyclicTypeSchema(d=1, a=0, b=0)
    vertices: List[VertexSchema]
    edges: List[EdgeSchema] = []

    @validator("kind")
    def known_kind(cls, value):
        if value not in (EMBEDDED, ABSTRACT):
            raise ValueError(f"kind must be {EMBEDDED!r} or {ABSTRACT!r}")
        return value

    def to_model(self) -> DualGraph:
        return DualGraph(
            tuple(v.to_model() for v in self.vertices),
            tuple(e.to_model() for e in self.edges),
            kind=self.kind,
            ambient=self.ambient.to_model(),
        )

    @classmethod
    def from_model(cls, graph: DualGraph) -> "DualGraphSchema":
        return cls.from_orm(graph)

    class Config:
        orm_mode = True
