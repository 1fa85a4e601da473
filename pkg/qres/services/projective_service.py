"""
Weighted projective planes P^2_w(d; a, b, c): weight normalization, projection
degrees and the weighted Bezout theorem.
"""
import logging
from fractions import Fraction
from functools import reduce
from math import gcd, prod
from typing import Dict, Iterable, Sequence, Tuple

from qres.core.exceptions import DegenerateInput, EmptySupport, InputParseError, NonCoprimeWeights
from qres.models.projective import WPPlane
from qres.models.quotient import CyclicType, TwoRowType
from qres.services.quotient_service import quotient_service

logger = logging.getLogger(__name__)


class ProjectiveService:
    """Intersection numbers on quotient weighted projective planes."""

    def normalize_weights(self, weights: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """
        P(q_0, ..., q_n) is isomorphic to P(q_0/e_0, ..., q_n/e_n).

        d_i is the gcd of every weight but q_i, e_i the product of every d_j but d_i;
        the isomorphism is [x_i] -> [x_i^(d_i)].
        """
        weights = tuple(int(q) for q in weights)
        if len(weights) < 2:
            raise InputParseError("a weighted projective space needs at least two weights")
        if min(weights) < 1:
            raise InputParseError(f"weights must be positive, got {weights}")
        if reduce(gcd, weights) != 1:
            raise NonCoprimeWeights(f"gcd of the weights {weights} must be 1")

        d = tuple(reduce(gcd, weights[:i] + weights[i + 1:]) for i in range(len(weights)))
        e = tuple(prod(d[:i] + d[i + 1:]) for i in range(len(weights)))
        reduced = tuple(q // e_i for q, e_i in zip(weights, e))
        return reduced, d

    def projection_degree(self, row1: CyclicType, row2: CyclicType) -> int:
        """Degree of C^2/mu_d -> C^2/(mu_d x mu_e) for rows (d; a, b) and (e; r, s)."""
        d, a, b = row1.d, row1.a, row1.b
        e, r, s = row2.d, row2.a, row2.b
        denominator = gcd(d * gcd(e, r, s), e * gcd(d, a, b), a * s - b * r)
        return d * e // denominator

    def chart_types(self, plane: WPPlane) -> Dict[str, TwoRowType]:
        """Two-row types of the three vertices [1:0:0], [0:1:0], [0:0:1]."""
        p, q, r, d = plane.p, plane.q, plane.r, plane.d
        m1, m2, m3 = plane.m1, plane.m2, plane.m3
        return {
            "[1:0:0]": TwoRowType(p, p * d, ((q, r), (m1, m2))),
            "[0:1:0]": TwoRowType(q, q * d, ((p, r), (-m1, m3))),
            "[0:0:1]": TwoRowType(r, r * d, ((p, q), (-m2, -m3))),
        }

    def singular_vertices(self, plane: WPPlane) -> Dict[str, CyclicType]:
        return {
            vertex: quotient_service.reduce_two_row(chart)
            for vertex, chart in self.chart_types(plane).items()
        }

    def deg_tau(self, plane: WPPlane) -> int:
        """Degree of P^2 -> P^2_w(d;a,b,c), computed in the chart at [1:0:0]; equals dpqr/e."""
        p, q, r, d = plane.p, plane.q, plane.r, plane.d
        local = self.projection_degree(CyclicType(p, q, r), CyclicType(p * d, plane.m1, plane.m2))
        return q * r * local

    def bezout(self, plane: WPPlane, deg1: int, deg2: int) -> Fraction:
        """D1 . D2 = e deg1 deg2 / (dpqr)."""
        if deg1 < 0 or deg2 < 0:
            raise InputParseError(f"degrees must be nonnegative, got {deg1} and {deg2}")
        return Fraction(plane.e * deg1 * deg2, plane.dpqr)

    def axes_table(self, plane: WPPlane) -> Dict[str, Fraction]:
        """Pairings of the axes X={x=0}, Y={y=0}, Z={z=0}; Z^2 = er/(dpq)."""
        p, q, r = plane.weights
        return {
            "X2": self.bezout(plane, p, p),
            "Y2": self.bezout(plane, q, q),
            "Z2": self.bezout(plane, r, r),
            "XY": self.bezout(plane, p, q),
            "XZ": self.bezout(plane, p, r),
            "YZ": self.bezout(plane, q, r),
        }

    def weighted_degree(self, monomials: Iterable[Sequence[int]], weights: Sequence[int]) -> int:
        """w-degree of a quasi-homogeneous polynomial given by its exponent vectors."""
        degrees = {sum(w * i for w, i in zip(weights, exponents)) for exponents in monomials}
        if not degrees:
            raise EmptySupport("cannot take the degree of the zero polynomial")
        if len(degrees) > 1:
            raise DegenerateInput(
                f"polynomial is not quasi-homogeneous for weights {tuple(weights)}: degrees {sorted(degrees)}"
            )
        return degrees.pop()


# Singleton instance
projective_service = ProjectiveService()
