"""
DOT export of dual graphs.
"""
from typing import List, Optional

from qres.core.config import settings
from qres.models.graph import DualGraph, Edge, Vertex


def _quote(text: str) -> str:
    return '"%s"' % text.replace("\\", "\\\\").replace('"', '\\"')


class DotService:
    """Graphviz text for a dual graph; exceptional divisors are boxes, strict transforms end in arrowheads."""

    def vertex_label(self, vertex: Vertex) -> str:
        if not vertex.is_exceptional:
            return f"{vertex.label or f'C{vertex.branch}'} ({vertex.m})"
        sing0 = ", ".join(str(t) for t in vertex.sing0)
        return (
            f"{vertex.label or f'E{vertex.id}'}: m={vertex.m}, e={vertex.self_int}, "
            f"g={vertex.genus}, sing0=[{sing0}]"
        )

    def edge_line(self, edge: Edge, by_id) -> str:
        v1, v2 = edge.v1, edge.v2
        attributes = []
        if not by_id[v1].is_exceptional and by_id[v2].is_exceptional:
            v1, v2 = v2, v1
        if not by_id[v2].is_exceptional:
            attributes.append("dir=both" if not by_id[v1].is_exceptional else "dir=forward")
            attributes.append("arrowhead=normal")
        if not edge.type.is_smooth:
            attributes.append("label=%s" % _quote(str(edge.type)))
        line = "    v%d -- v%d" % (v1, v2)
        if attributes:
            line += " [%s]" % ",".join(attributes)
        return line + ";"

    def render(self, graph: DualGraph, rankdir: Optional[str] = None) -> str:
        result: List[str] = [
            "graph G {",
            "    rankdir=%s;" % (rankdir or settings.DOT_RANKDIR),
            "    node [fontname=Helvetica];",
        ]
        for vertex in graph.vertices:
            if vertex.is_exceptional:
                result.append("    v%d [shape=box,label=%s];" % (vertex.id, _quote(self.vertex_label(vertex))))
            else:
                # the arrowhead sits on the edge; the point only anchors it
                result.append(
                    "    v%d [shape=point,width=0.05,xlabel=%s];" % (vertex.id, _quote(self.vertex_label(vertex)))
                )
        by_id = graph.by_id
        for edge in graph.edges:
            result.append(self.edge_line(edge, by_id))
        result.append("}")
        return "\n".join(result)


# Singleton instance
dot_service = DotService()
