from fractions import Fraction
from math import gcd

import pytest

from qres.core.exceptions import ArithmeticInvariantError, BadWeight, EmptySupport, NotNormalized
from qres.models.graph import EXCEPTIONAL, DualGraph, Vertex
from qres.models.quotient import CyclicType, Weight
from qres.services.blowup_service import blowup_service
from qres.services.intersection_service import intersection_service
from qres.services.jung_service import jung_service
from qres.services.quotient_service import quotient_service


class TestBlowup:
    def test_smooth_point(self):
        result = blowup_service.blowup(CyclicType.smooth(), Weight(2, 3))
        assert result.e == 1
        assert result.chart1_origin == CyclicType(2, 1, 1)
        assert result.chart2_origin == CyclicType(3, 1, 1)
        assert result.exc_self_intersection == Fraction(-1, 6)

    def test_quotient_point(self):
        result = blowup_service.blowup(CyclicType(5, 2, 3), Weight(2, 3))
        assert result.e == 5
        assert result.exc_self_intersection == Fraction(-5, 6)
        assert result.chart1_origin == CyclicType(2, 1, 1)
        assert result.chart2_origin == CyclicType(3, 2, 1)

    def test_charts_are_normalized(self):
        for d in range(1, 12):
            for a in range(1, d + 1):
                for b in range(1, d + 1):
                    t = CyclicType(d, a, b)
                    if not t.normalized:
                        continue
                    for w in (Weight(1, 1), Weight(2, 3), Weight(3, 2), Weight(1, 4)):
                        result = blowup_service.blowup(t, w)
                        assert result.chart1_origin.normalized
                        assert result.chart2_origin.normalized
                        assert result.exc_self_intersection < 0

    def test_requires_normalized_center(self):
        with pytest.raises(NotNormalized):
            blowup_service.blowup(CyclicType(4, 2, 1), Weight(1, 1))

    def test_chart_maps(self):
        result = blowup_service.blowup(CyclicType.smooth(), Weight(1, 1))
        assert result.chart_maps[0].startswith("x=X^p")


class TestWeight:
    @pytest.mark.parametrize("p, q", [(2, 4), (0, 1), (3, -1)])
    def test_bad_weights(self, p, q):
        with pytest.raises(BadWeight):
            Weight(p, q)


class TestTransforms:
    def test_wt_order(self):
        assert blowup_service.wt_order([(3, 0), (0, 2)], Weight(2, 3)) == 6
        assert blowup_service.wt_order([(6, 0), (3, 2), (0, 4), (4, 3)], Weight(2, 3)) == 12

    def test_wt_order_empty(self):
        with pytest.raises(EmptySupport):
            blowup_service.wt_order([], Weight(1, 1))

    def test_total_transform(self):
        assert blowup_service.total_transform(CyclicType.smooth(), Weight(2, 3), 29) == 29
        assert blowup_service.total_transform(CyclicType(5, 2, 3), Weight(2, 3), 30) == 6

    def test_total_transform_not_integral(self):
        with pytest.raises(ArithmeticInvariantError):
            blowup_service.total_transform(CyclicType(5, 2, 3), Weight(2, 3), 6)
        value = blowup_service.total_transform(CyclicType(5, 2, 3), Weight(2, 3), 6, require_integral=False)
        assert value == Fraction(6, 5)

    def test_exc_dot_strict(self):
        assert blowup_service.exc_dot_strict(CyclicType.smooth(), Weight(2, 3), 6) == 1
        assert blowup_service.exc_dot_strict(CyclicType(5, 2, 3), Weight(2, 3), 6) == 1

    def test_strict_self_intersection_update(self):
        value = blowup_service.strict_self_intersection_update(Fraction(-1, 6), CyclicType.smooth(), Weight(1, 2), 3)
        assert value == Fraction(-1, 6) - Fraction(9, 2)

    def test_axis_multiplicities(self):
        assert blowup_service.axis_multiplicities(Weight(2, 3)) == (2, 3)


class TestAbBlowup:
    """The (a,b) blow-up of X(d;a,b): E^2 = -d/(ab), points (a;-d,b) and (b;a,-d)."""

    @pytest.mark.parametrize("t", [CyclicType(7, 1, 3), CyclicType(5, 2, 3), CyclicType(11, 3, 4)])
    def test_formulas(self, t):
        result = jung_service.ab_blowup_step(t)
        d, a, b = t.as_tuple()
        assert result.exc_self_intersection == Fraction(-d, a * b)
        assert quotient_service.equivalent(result.chart1_origin, CyclicType(a, -d, b))
        assert quotient_service.equivalent(result.chart2_origin, CyclicType(b, a, -d))


def _normalized_types(d):
    if d == 1:
        yield CyclicType.smooth()
        return
    for a in range(1, d):
        for b in range(1, d):
            t = CyclicType(d, a, b)
            if t.normalized:
                yield t


def _weights(max_w):
    return [Weight(p, q) for p in range(1, max_w + 1) for q in range(1, max_w + 1) if gcd(p, q) == 1]


class TestBlowupExamples:
    @pytest.mark.parametrize("d, p, q", [(5, 2, 3), (7, 2, 3), (7, 3, 5), (11, 4, 5)])
    def test_center_of_matching_type(self, d, p, q):
        result = blowup_service.blowup(CyclicType(d, p, q), Weight(p, q))
        assert result.e == d
        assert result.exc_self_intersection == Fraction(-d, p * q)
        assert quotient_service.equivalent(result.chart1_origin, CyclicType(p, -d, q))
        assert quotient_service.equivalent(result.chart2_origin, CyclicType(q, p, -d))

    @pytest.mark.parametrize("p, q", [(1, 2), (2, 3), (3, 4), (3, 5)])
    def test_second_center_of_two_branch_family(self, p, q):
        s = q * q - p * p
        result = blowup_service.blowup(CyclicType(q, p, s), Weight(p, s))
        assert result.e == q
        assert result.exc_self_intersection == Fraction(-q, p * s)
        assert quotient_service.equivalent(result.chart1_origin, CyclicType(p, -1, q))
        assert quotient_service.equivalent(result.chart2_origin, CyclicType(s, p, -q))

    @pytest.mark.parametrize(
        "t, w",
        [(CyclicType.smooth(), Weight(1, 1)), (CyclicType.smooth(), Weight(2, 3)), (CyclicType(5, 2, 3), Weight(2, 3)),
         (CyclicType(7, 1, 3), Weight(3, 2)), (CyclicType(3, 2, 5), Weight(2, 5))],
    )
    def test_curvette_of_single_divisor(self, t, w):
        result = blowup_service.blowup(t, w)
        graph = DualGraph((Vertex(1, EXCEPTIONAL, m=1, self_int=result.exc_self_intersection),))
        b = intersection_service.curvette_matrix(intersection_service.intersection_matrix(graph))
        assert b.entry(1, 1) == Fraction(t.d * w.p * w.q, result.e ** 2)


class TestTransformIdentities:
    @pytest.mark.parametrize("d", range(1, 13))
    def test_pullback_orthogonality(self, d):
        for t in _normalized_types(d):
            for w in _weights(12):
                result = blowup_service.blowup(t, w)
                for nu in (w.p * w.q, result.e * 7):
                    multiplicity = blowup_service.total_transform(t, w, nu, require_integral=False)
                    assert multiplicity * result.exc_self_intersection + blowup_service.exc_dot_strict(t, w, nu) == 0

    @pytest.mark.parametrize("d", range(1, 13))
    def test_axis_meets_divisor_at_chart_origin(self, d):
        for t in _normalized_types(d):
            for w in _weights(12):
                result = blowup_service.blowup(t, w)
                mult_x, mult_y = blowup_service.axis_multiplicities(w)
                # {x=0} goes through the origin of chart 2, {y=0} through chart 1
                assert blowup_service.exc_dot_strict(t, w, mult_x) == Fraction(1, result.chart2_origin.d)
                assert blowup_service.exc_dot_strict(t, w, mult_y) == Fraction(1, result.chart1_origin.d)

    def test_five_curve_updates(self):
        assert blowup_service.exc_dot_strict(CyclicType.smooth(), Weight(2, 5), 2) == Fraction(1, 5)
        value = blowup_service.strict_self_intersection_update(Fraction(-1, 6), CyclicType.smooth(), Weight(2, 5), 2)
        assert value == Fraction(-17, 30)

    @pytest.mark.parametrize("p, q", [(1, 2), (2, 3), (3, 4), (3, 5)])
    def test_two_branch_family_update(self, p, q):
        s = q * q - p * p
        value = blowup_service.strict_self_intersection_update(Fraction(-1, p * q), CyclicType(q, p, s), Weight(p, s), p)
        assert value == Fraction(-q, p * s)

    def test_update_without_contact(self):
        assert blowup_service.strict_self_intersection_update(Fraction(-2, 3), CyclicType.smooth(), Weight(2, 3), 0) == Fraction(-2, 3)
        assert blowup_service.exc_dot_strict(CyclicType(5, 2, 3), Weight(2, 3), 0) == 0

    @pytest.mark.parametrize("p, q", [(2, 3), (3, 5), (1, 4)])
    def test_wt_order_of_binomial(self, p, q):
        assert blowup_service.wt_order([(p, 0), (0, q)], Weight(q, p)) == p * q
        assert blowup_service.wt_order([(1, 0)], Weight(p, q)) == p
