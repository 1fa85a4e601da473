import re

import networkx as nx
import pytest

from qres.models.graph import ARROW, EXCEPTIONAL, DualGraph, Edge, Vertex
from qres.models.jung import SurfaceGerm
from qres.models.quotient import CyclicType
from qres.services.dot_service import dot_service
from qres.services.jung_service import jung_service

TOKEN = re.compile(r'\s*(?:(--)|([{}\[\];,=])|("(?:[^"\\]|\\.)*")|([A-Za-z_][A-Za-z0-9_.]*|-?\d+(?:\.\d+)?))')


def _tokens(text):
    position, result = 0, []
    text = text.rstrip()
    while position < len(text):
        match = TOKEN.match(text, position)
        if not match or match.end() == position:
            raise SyntaxError(f"unexpected character at {position}: {text[position:position + 10]!r}")
        result.append(next(group for group in match.groups() if group is not None))
        position = match.end()
    return result


class _DotChecker:
    """Recursive descent over the undirected subset of the DOT grammar the exporter writes."""

    def __init__(self, text):
        self.tokens = _tokens(text)
        self.position = 0
        self.nodes, self.edges = set(), []

    def peek(self):
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self, expected=None):
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise SyntaxError(f"expected {expected!r}, got {token!r}")
        self.position += 1
        return token

    def identifier(self):
        token = self.take()
        if token in ("{", "}", "[", "]", ";", ",", "=", "--"):
            raise SyntaxError(f"expected an identifier, got {token!r}")
        return token

    def graph(self):
        self.take("graph")
        if self.peek() != "{":
            self.identifier()
        self.take("{")
        while self.peek() != "}":
            self.statement()
        self.take("}")
        if self.peek() is not None:
            raise SyntaxError("trailing input after the graph")
        return self

    def attributes(self):
        self.take("[")
        while self.peek() != "]":
            self.identifier()
            self.take("=")
            self.identifier()
            if self.peek() == ",":
                self.take(",")
        self.take("]")

    def statement(self):
        first = self.identifier()
        if self.peek() == "=":
            self.take("=")
            self.identifier()
        elif self.peek() == "--":
            self.take("--")
            self.edges.append((first, self.identifier()))
        elif first not in ("node", "edge"):
            self.nodes.add(first)
        if self.peek() == "[":
            self.attributes()
        self.take(";")


class TestDotGrammar:
    def test_five_curve(self, five_curve_graph):
        checker = _DotChecker(dot_service.render(five_curve_graph)).graph()
        assert checker.nodes == {f"v{v.id}" for v in five_curve_graph.vertices}
        assert len(checker.edges) == len(five_curve_graph.edges)

    def test_abstract_graph(self, cusps_graph):
        graph = jung_service.jung_resolution(SurfaceGerm(20, cusps_graph))
        checker = _DotChecker(dot_service.render(graph, rankdir="TB")).graph()
        assert len(checker.edges) == 2

    def test_quotes_labels(self):
        graph = DualGraph((Vertex(1, EXCEPTIONAL, m=2, self_int=-1, label='E"1'),))
        _DotChecker(dot_service.render(graph)).graph()

    def test_checker_rejects_broken_text(self):
        with pytest.raises(SyntaxError):
            _DotChecker("graph G { v1 -- ; }").graph()


class TestLabels:
    def test_exceptional(self):
        vertex = Vertex(1, EXCEPTIONAL, m=6, self_int=-1, genus=2, sing0=(CyclicType(2, 1, 1),))
        assert dot_service.vertex_label(vertex) == "E1: m=6, e=-1, g=2, sing0=[(2;1,1)]"

    def test_arrow(self):
        assert dot_service.vertex_label(Vertex(3, ARROW, m=1, branch=2)) == "C2 (1)"

    def test_smooth_divisor_label(self):
        vertex = Vertex(2, EXCEPTIONAL, m=1, self_int=-1)
        assert dot_service.vertex_label(vertex) == "E2: m=1, e=-1, g=0, sing0=[]"

    def test_singular_edge_label(self, cusps_graph):
        assert "[label=" in dot_service.render(cusps_graph)


class TestArrows:
    def _graph(self, first, second):
        return DualGraph(
            (Vertex(1, EXCEPTIONAL, m=1, self_int=-1), Vertex(2, ARROW, m=1, branch=1), Vertex(3, ARROW, m=1, branch=2)),
            (Edge(first, second, CyclicType.smooth()), Edge(2, 3, CyclicType(2, 1, 1))),
        )

    @pytest.mark.parametrize("first, second", [(1, 2), (2, 1)])
    def test_arrowhead_points_at_strict_transform(self, first, second):
        text = dot_service.render(self._graph(first, second))
        assert "    v1 -- v2 [dir=forward,arrowhead=normal];" in text
        assert "    v2 [shape=point,width=0.05,xlabel=\"C1 (1)\"];" in text
        _DotChecker(text).graph()

    def test_two_strict_transforms(self):
        text = dot_service.render(self._graph(1, 2))
        assert '    v2 -- v3 [dir=both,arrowhead=normal,label="(2;1,1)"];' in text


class TestNetworkxView:
    def test_five_curve_is_a_tree(self, five_curve_graph):
        graph = five_curve_graph.to_networkx()
        assert nx.is_connected(graph)
        assert graph.number_of_edges() == graph.number_of_nodes() - 1
        assert graph.nodes[1]["kind"] == EXCEPTIONAL

    @pytest.mark.parametrize("n, cycles", [(3, 0), (4, 1), (15, 0), (20, 1)])
    def test_jung_cycle_rank(self, cusps_graph, n, cycles):
        graph = jung_service.jung_resolution(SurfaceGerm(n, cusps_graph)).to_networkx()
        assert nx.is_connected(graph)
        assert graph.number_of_edges() - graph.number_of_nodes() + 1 == cycles

    def test_edges_keep_types(self):
        graph = DualGraph(
            (Vertex(1, EXCEPTIONAL, m=1, self_int=-1), Vertex(2, ARROW, m=1, branch=1)),
            (Edge(1, 2, CyclicType(2, 1, 1)),),
        ).to_networkx()
        assert graph.edges[1, 2, 0]["type"] == CyclicType(2, 1, 1)
