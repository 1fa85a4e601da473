"""
Dual graph of a Q-resolution.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import networkx as nx

from qres.core.exceptions import MalformedGraph
from qres.models.quotient import CyclicType

EXCEPTIONAL = "exceptional"
ARROW = "arrow"

EMBEDDED = "embedded"
ABSTRACT = "abstract"


@dataclass(frozen=True)
class Vertex:
    """
    One divisor of the resolution.

    Exceptional vertices carry multiplicity, self-intersection, genus and the types of
    their singular points that are not double points (sing0, each oriented so the divisor
    is the image of {y=0}). Arrow vertices stand for strict transforms of branches.
    """

    id: int
    kind: str
    m: Fraction
    self_int: Optional[Fraction] = None
    genus: int = 0
    sing0: Tuple[CyclicType, ...] = ()
    branch: Optional[int] = None
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "m", Fraction(self.m))
        object.__setattr__(self, "sing0", tuple(self.sing0))
        if self.self_int is not None:
            object.__setattr__(self, "self_int", Fraction(self.self_int))
        if self.kind not in (EXCEPTIONAL, ARROW):
            raise MalformedGraph(f"vertex {self.id}: unknown kind {self.kind!r}")

    @property
    def is_exceptional(self) -> bool:
        return self.kind == EXCEPTIONAL

    def __repr__(self):
        if self.is_exceptional:
            return f"<Vertex(E{self.id}, m={self.m}, self={self.self_int}, g={self.genus})>"
        return f"<Vertex(arrow {self.id}, branch={self.branch}, m={self.m})>"


@dataclass(frozen=True)
class Edge:
    """A double point between ``v1 < v2``; ``type.a`` belongs to ``v1`` (the image of {x=0})."""

    v1: int
    v2: int
    type: CyclicType
    point: Optional[int] = None

    def __post_init__(self):
        if self.v1 > self.v2:
            v1, v2 = self.v2, self.v1
            object.__setattr__(self, "v1", v1)
            object.__setattr__(self, "v2", v2)
            object.__setattr__(self, "type", self.type.swap())
        if self.v1 == self.v2:
            raise MalformedGraph(f"edge loops on vertex {self.v1}")

    def other(self, vertex: int) -> int:
        return self.v2 if vertex == self.v1 else self.v1

    def type_seen_from(self, vertex: int) -> CyclicType:
        """The edge type with ``vertex`` as the image of {y=0}."""
        if vertex == self.v1:
            return self.type.swap()
        if vertex == self.v2:
            return self.type
        raise MalformedGraph(f"vertex {vertex} is not an end of edge {self.v1}-{self.v2}")


@dataclass(frozen=True)
class BranchAttachment:
    """Where the strict transform of a branch meets the exceptional locus."""

    branch: int
    arrow: int
    k: Optional[int]
    d: int
    point: CyclicType


@dataclass(frozen=True)
class DualGraph:
    """Weighted graph of an embedded (with arrows) or abstract Q-resolution."""

    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()
    kind: str = EMBEDDED
    ambient: CyclicType = field(default_factory=CyclicType.smooth)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise MalformedGraph("vertex ids must be unique")
        known = set(ids)
        for edge in self.edges:
            if edge.v1 not in known or edge.v2 not in known:
                raise MalformedGraph(f"edge {edge.v1}-{edge.v2} references an unknown vertex")

    @property
    def by_id(self) -> Dict[int, Vertex]:
        return {v.id: v for v in self.vertices}

    def vertex(self, vertex_id: int) -> Vertex:
        try:
            return self.by_id[vertex_id]
        except KeyError:
            raise MalformedGraph(f"no vertex with id {vertex_id}")

    @property
    def exceptional(self) -> List[Vertex]:
        return [v for v in self.vertices if v.is_exceptional]

    @property
    def arrows(self) -> List[Vertex]:
        return [v for v in self.vertices if not v.is_exceptional]

    def edges_at(self, vertex_id: int) -> List[Edge]:
        return [e for e in self.edges if vertex_id in (e.v1, e.v2)]

    def singular_points(self, vertex_id: int) -> List[CyclicType]:
        """Every non-smooth point of a divisor: its sing0 plus singular double points."""
        points = list(self.vertex(vertex_id).sing0)
        for edge in self.edges_at(vertex_id):
            if not edge.type.is_smooth:
                points.append(edge.type_seen_from(vertex_id))
        return points

    def arrow_for_branch(self, branch: int) -> Optional[Vertex]:
        for vertex in self.arrows:
            if vertex.branch == branch:
                return vertex
        return None

    def attachments(self) -> List[BranchAttachment]:
        result = []
        for arrow in self.arrows:
            incident = self.edges_at(arrow.id)
            if not incident:
                # a lone branch already in normal crossing with nothing to meet
                result.append(BranchAttachment(arrow.branch, arrow.id, None, self.ambient.d, self.ambient))
                continue
            if len(incident) > 1:
                raise MalformedGraph(f"arrow {arrow.id} meets {len(incident)} divisors")
            edge = incident[0]
            other = self.vertex(edge.other(arrow.id))
            k = other.id if other.is_exceptional else None
            result.append(BranchAttachment(arrow.branch, arrow.id, k, edge.type.d, edge.type))
        return result

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for v in self.vertices:
            graph.add_node(v.id, kind=v.kind, m=v.m, self_int=v.self_int)
        for e in self.edges:
            graph.add_edge(e.v1, e.v2, type=e.type)
        return graph

    def __repr__(self):
        return (
            f"<DualGraph(kind={self.kind}, exceptional={len(self.exceptional)}, "
            f"arrows={len(self.arrows)}, edges={len(self.edges)})>"
        )
