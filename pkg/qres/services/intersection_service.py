"""
Rational intersection theory on a Q-resolution: intersection matrix, curvette
pairing B = -A^-1 and local intersection numbers of branches.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import sympy

from qres.core.exceptions import DetachedBranch, MalformedGraph, SameBranch, SingularMatrix
from qres.models.graph import BranchAttachment, DualGraph
from qres.models.intersection import CurvetteMatrix, IntersectionMatrix, to_fraction, to_rational
from qres.services.quotient_service import quotient_service

logger = logging.getLogger(__name__)


class IntersectionService:
    """Intersection numbers read off a dual graph."""

    def intersection_matrix(self, graph: DualGraph) -> IntersectionMatrix:
        """Diagonal from stored self-intersections, off-diagonal 1/index per shared double point."""
        ids = tuple(v.id for v in graph.exceptional)
        if not ids:
            raise MalformedGraph("the graph has no exceptional divisors")
        position = {vertex_id: i for i, vertex_id in enumerate(ids)}
        entries = sympy.zeros(len(ids), len(ids))
        for vertex in graph.exceptional:
            if vertex.self_int is None:
                raise MalformedGraph(f"E{vertex.id} has no self-intersection")
            entries[position[vertex.id], position[vertex.id]] = to_rational(vertex.self_int)
        for edge in graph.edges:
            if edge.v1 in position and edge.v2 in position:
                value = sympy.Rational(1, quotient_service.index(edge.type))
                i, j = position[edge.v1], position[edge.v2]
                entries[i, j] += value
                entries[j, i] += value
        return IntersectionMatrix(ids, sympy.ImmutableMatrix(entries))

    def curvette_matrix(self, a: IntersectionMatrix) -> CurvetteMatrix:
        if a.matrix.det(method="bareiss") == 0:
            raise SingularMatrix("the intersection matrix is singular; the graph is not a resolution")
        inverse = a.matrix.inv(method="LU")
        return CurvetteMatrix(a.ids, sympy.ImmutableMatrix(-inverse))

    def leading_minors(self, a: IntersectionMatrix) -> List[Fraction]:
        n = a.matrix.shape[0]
        return [to_fraction(a.matrix[:k, :k].det(method="bareiss")) for k in range(1, n + 1)]

    def check_negative_definite(self, a) -> bool:
        """Leading principal minors alternate in sign, starting negative."""
        if not isinstance(a, IntersectionMatrix):
            rows = [[to_rational(x) for x in row] for row in a]
            a = IntersectionMatrix(tuple(range(len(rows))), sympy.ImmutableMatrix(rows))
        for k, minor in enumerate(self.leading_minors(a), start=1):
            if minor == 0 or (minor < 0) != (k % 2 == 1):
                return False
        return True

    def _attachment(self, graph: DualGraph, branch: int) -> BranchAttachment:
        for attachment in graph.attachments():
            if attachment.branch == branch:
                return attachment
        raise DetachedBranch(f"branch {branch} has no arrow in the graph")

    def _index(self, attachment: BranchAttachment) -> int:
        return quotient_service.index(attachment.point)

    def local_intersection(
        self, graph: DualGraph, i: int, j: int, b: Optional[CurvetteMatrix] = None
    ) -> Fraction:
        """(C_i . C_j) = b_{k_i k_j} / (d(C_i) d(C_j))."""
        if i == j:
            raise SameBranch(f"branch {i} paired with itself")
        first, second = self._attachment(graph, i), self._attachment(graph, j)

        # two strict transforms already crossing at one point
        for edge in graph.edges:
            if {edge.v1, edge.v2} == {first.arrow, second.arrow}:
                return Fraction(1, quotient_service.index(edge.type))

        if first.k is None or second.k is None:
            raise DetachedBranch(f"branches {i} and {j} do not both meet the exceptional locus")
        if b is None:
            b = self.curvette_matrix(self.intersection_matrix(graph))
        return b.entry(first.k, second.k) / (self._index(first) * self._index(second))

    def pullback_coefficients(self, graph: DualGraph, i: int, b: Optional[CurvetteMatrix] = None) -> Dict[int, Fraction]:
        """Coefficients c_ij of E_j in the total transform of C_i: row k_i of B over d(C_i)."""
        attachment = self._attachment(graph, i)
        if attachment.k is None:
            raise DetachedBranch(f"branch {i} does not meet the exceptional locus")
        if b is None:
            b = self.curvette_matrix(self.intersection_matrix(graph))
        d = self._index(attachment)
        return {vertex_id: b.entry(attachment.k, vertex_id) / d for vertex_id in b.ids}

    def pullback_check(self, graph: DualGraph, i: int) -> Dict[int, Fraction]:
        """
        Total transform of C_i paired with every E_k; all entries vanish on a valid graph.

        The strict transform meets only E_{k_i}, with local number 1/d(C_i).
        """
        a = self.intersection_matrix(graph)
        b = self.curvette_matrix(a)
        attachment = self._attachment(graph, i)
        coefficients = self.pullback_coefficients(graph, i, b)
        d = self._index(attachment)
        result = {}
        for k in a.ids:
            strict = Fraction(1, d) if k == attachment.k else Fraction(0)
            result[k] = strict + sum((coefficients[j] * a.entry(j, k) for j in a.ids), Fraction(0))
        return result

    def schur_complement(self, a: IntersectionMatrix, keep: Sequence[int]) -> IntersectionMatrix:
        """Intersection form on ``keep`` after contracting the other divisors."""
        keep_pos = [a.ids.index(i) for i in keep]
        drop_pos = [p for p in range(len(a.ids)) if p not in keep_pos]
        m = sympy.Matrix(a.matrix)
        kk = m.extract(keep_pos, keep_pos)
        if not drop_pos:
            return IntersectionMatrix(tuple(keep), sympy.ImmutableMatrix(kk))
        kd = m.extract(keep_pos, drop_pos)
        dd = m.extract(drop_pos, drop_pos)
        result = kk - kd * dd.inv(method="LU") * kd.T
        return IntersectionMatrix(tuple(keep), sympy.ImmutableMatrix(result))


# Singleton instance
intersection_service = IntersectionService()
