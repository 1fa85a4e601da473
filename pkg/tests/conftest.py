"""
Shared fixtures: the germs every test module resolves.
"""
from fractions import Fraction

import pytest

from qres.models.branch import Coefficient, CurveGerm, PuiseuxBranch
from qres.models.quotient import CyclicType
from qres.services.resolution_service import resolution_service

SMOOTH = CyclicType.smooth()


def _five_curve_branches():
    """((x^3-y^2)^2 - x^4 y^3)(x^3-y^2)(x^3+y^2) x y, one branch per factor."""
    return (
        PuiseuxBranch.from_pairs([(1, Fraction(3, 2)), (Fraction(1, 2), Fraction(11, 4))], label="C1"),
        PuiseuxBranch.from_pairs([(1, Fraction(3, 2))], label="C2"),
        PuiseuxBranch.from_pairs([(Coefficient.one().rotate(Fraction(1, 4)), Fraction(3, 2))], label="C3"),
        PuiseuxBranch(axis="x", label="C4"),
        PuiseuxBranch(axis="y", label="C5"),
    )


def _two_branch_germ(p: int, q: int) -> CurveGerm:
    """(x^p + y^q)(x^q + y^p) for coprime p < q."""
    minus_one = Coefficient.from_rational(-1)
    return CurveGerm(
        SMOOTH,
        (
            PuiseuxBranch.from_pairs([(minus_one.power(Fraction(1, q)), Fraction(p, q))], label="C1"),
            PuiseuxBranch.from_pairs([(minus_one.power(Fraction(1, p)), Fraction(q, p))], label="C2"),
        ),
    )


@pytest.fixture
def two_branch_germ():
    return _two_branch_germ


@pytest.fixture
def five_curve_equations():
    """Equations of the five branches, in branch order."""
    return ("(x^3-y^2)^2-x^4*y^3", "x^3-y^2", "x^3+y^2", "x", "y")


@pytest.fixture
def five_curve() -> CurveGerm:
    return CurveGerm(SMOOTH, _five_curve_branches())


@pytest.fixture
def five_curve_graph(five_curve):
    return resolution_service.resolve(five_curve)


@pytest.fixture
def quotient_five_curve() -> CurveGerm:
    return CurveGerm(CyclicType(5, 2, 3), _five_curve_branches())


@pytest.fixture
def quotient_five_curve_graph(quotient_five_curve):
    return resolution_service.resolve_quotient(quotient_five_curve)


@pytest.fixture
def cusps_graph():
    """Embedded resolution of (x^2+y^3)(x^3+y^2)."""
    return resolution_service.resolve(_two_branch_germ(2, 3))
