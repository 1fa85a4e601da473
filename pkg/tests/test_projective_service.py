import random
from fractions import Fraction
from math import gcd

import pytest

from qres.core.exceptions import DegenerateInput, EmptySupport, InputParseError, NonCoprimeWeights
from qres.models.projective import WPPlane
from qres.models.quotient import CyclicType, Weight
from qres.services.blowup_service import blowup_service
from qres.services.parser_service import monomials
from qres.services.projective_service import projective_service
from qres.services.quotient_service import quotient_service


def _random_planes(rng, count):
    planes = []
    while len(planes) < count:
        p, q, r = (rng.randint(1, 9) for _ in range(3))
        if gcd(p, q) != 1 or gcd(p, r) != 1 or gcd(q, r) != 1:
            continue
        d = rng.randint(1, 12)
        planes.append(WPPlane(p, q, r, d, rng.randrange(d), rng.randrange(d), rng.randrange(d)))
    return planes


class TestNormalizeWeights:
    @pytest.mark.parametrize(
        "weights, reduced, divisors",
        [
            ((6, 10, 15), (1, 1, 1), (5, 3, 2)),
            ((2, 3), (1, 1), (3, 2)),
            ((1, 2, 3), (1, 2, 3), (1, 1, 1)),
        ],
    )
    def test_examples(self, weights, reduced, divisors):
        assert projective_service.normalize_weights(weights) == (reduced, divisors)

    def test_non_coprime(self):
        with pytest.raises(NonCoprimeWeights):
            projective_service.normalize_weights((2, 4, 6))

    @pytest.mark.parametrize("weights", [(3,), (0, 1, 2)])
    def test_bad_input(self, weights):
        with pytest.raises(InputParseError):
            projective_service.normalize_weights(weights)


class TestPlane:
    def test_invariants(self):
        plane = WPPlane(1, 1, 1, 3, 0, 1, 2)
        assert (plane.m1, plane.m2, plane.m3) == (1, 2, 1)
        assert plane.e == 1
        assert plane.dpqr == 3

    def test_non_coprime_weights(self):
        with pytest.raises(NonCoprimeWeights):
            WPPlane(2, 4, 6)

    def test_bad_order(self):
        with pytest.raises(InputParseError):
            WPPlane(1, 2, 3, d=0)


class TestDegrees:
    @pytest.mark.parametrize(
        "row1, row2, expected",
        [
            (CyclicType.smooth(), CyclicType.smooth(), 1),
            (CyclicType(2, 1, 1), CyclicType(2, 1, 1), 2),
            (CyclicType(3, 1, 2), CyclicType.smooth(), 3),
        ],
    )
    def test_projection_degree(self, row1, row2, expected):
        assert projective_service.projection_degree(row1, row2) == expected

    def test_projection_degree_under_row_moves(self):
        rng = random.Random(37)
        for _ in range(300):
            d, e = rng.randint(1, 10), rng.randint(1, 10)
            row1 = CyclicType(d, rng.randrange(d), rng.randrange(d))
            row2 = CyclicType(e, rng.randrange(e), rng.randrange(e))
            degree = projective_service.projection_degree(row1, row2)
            unit = rng.choice([u for u in range(1, 4 * d * e + 2) if gcd(u, d * e) == 1])
            moved = [
                (CyclicType(d, unit * row1.a, unit * row1.b), row2),
                (row1, CyclicType(e, unit * row2.a, unit * row2.b)),
                (row2, row1),
                (row1.swap(), row2.swap()),
            ]
            for first, second in moved:
                assert projective_service.projection_degree(first, second) == degree, (row1, row2, first, second)

    def test_deg_tau_example(self):
        assert projective_service.deg_tau(WPPlane(1, 1, 1, 3, 0, 1, 2)) == 3
        assert projective_service.deg_tau(WPPlane(2, 3, 5)) == 30

    def test_deg_tau_random(self):
        for plane in _random_planes(random.Random(29), 200):
            assert plane.dpqr % plane.e == 0
            assert projective_service.deg_tau(plane) == plane.dpqr // plane.e, plane

    def test_bezout_times_degree(self):
        rng = random.Random(31)
        for plane in _random_planes(rng, 200):
            d1, d2 = rng.randint(0, 30), rng.randint(0, 30)
            assert projective_service.deg_tau(plane) * projective_service.bezout(plane, d1, d2) == d1 * d2

    def test_negative_degree(self):
        with pytest.raises(InputParseError):
            projective_service.bezout(WPPlane(1, 1, 1), -1, 2)


class TestAxes:
    def test_p235(self):
        assert projective_service.axes_table(WPPlane(2, 3, 5)) == {
            "X2": Fraction(2, 15),
            "Y2": Fraction(3, 10),
            "Z2": Fraction(5, 6),
            "XY": Fraction(1, 5),
            "XZ": Fraction(1, 3),
            "YZ": Fraction(1, 2),
        }

    def test_quotient_plane(self):
        table = projective_service.axes_table(WPPlane(1, 1, 1, 3, 0, 1, 2))
        assert set(table.values()) == {Fraction(1, 3)}


class TestSingularVertices:
    def test_p123(self):
        vertices = projective_service.singular_vertices(WPPlane(1, 2, 3))
        assert vertices["[1:0:0]"].is_smooth
        assert quotient_service.equivalent(vertices["[0:1:0]"], CyclicType(2, 1, 1))
        assert quotient_service.equivalent(vertices["[0:0:1]"], CyclicType(3, 1, 2))

    def test_chart_types(self):
        charts = projective_service.chart_types(WPPlane(2, 3, 5))
        assert charts["[0:0:1]"].orders == (5, 5)


class TestStrictTransformOnBlowup:
    """x^5 - z^2 on P(2,3,5) through [0:1:0], blown up with weight (2,5)."""

    def test_self_intersection_drops_to_zero(self):
        plane = WPPlane(2, 3, 5)
        degree = projective_service.weighted_degree(monomials("x^5-z^2"), plane.weights)
        assert degree == 10
        square = projective_service.bezout(plane, degree, degree)
        assert square == Fraction(10, 3)

        point = CyclicType(3, 2, 5)
        weight = Weight(2, 5)
        result = blowup_service.blowup(point, weight)
        assert result.e == 3
        assert result.exc_self_intersection == Fraction(-3, 10)
        order = blowup_service.wt_order([(5, 0), (0, 2)], weight)
        assert order == 10
        assert blowup_service.strict_self_intersection_update(square, point, weight, order) == 0


class TestWeightedDegree:
    def test_quasi_homogeneous(self):
        assert projective_service.weighted_degree(monomials("x^3+y^2"), (2, 3, 5)) == 6
        assert projective_service.weighted_degree([(1, 1, 1)], (2, 3, 5)) == 10

    def test_empty(self):
        with pytest.raises(EmptySupport):
            projective_service.weighted_degree([], (1, 1, 1))

    def test_not_quasi_homogeneous(self):
        with pytest.raises(DegenerateInput):
            projective_service.weighted_degree(monomials("x^2+y"), (1, 1, 1))
