"""
Polynomial input: turn equations like "(x^2+y^3)(x^3+y^2)" or monomial lists
into curve germs given branch by branch.

Supported factor shapes: coordinate axes, binomials c1 x^a + c2 y^b, and
(x^a - s y^b)^m plus one monomial above the Newton edge.
"""
import logging
from fractions import Fraction
from math import gcd
from tokenize import TokenError
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from qres.core.exceptions import InputParseError, UnsupportedFactorShape
from qres.models.branch import Coefficient, CurveGerm, PuiseuxBranch, PuiseuxTerm
from qres.models.quotient import CyclicType

logger = logging.getLogger(__name__)

X, Y, Z = sympy.symbols("x y z")
TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application, convert_xor)

MonomialTerm = Tuple[Fraction, int, int]


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def parse_polynomial(text: str, symbols: Sequence[sympy.Symbol] = (X, Y), evaluate: bool = True) -> sympy.Expr:
    """Parse ``text`` with ^ for powers and implicit multiplication."""
    names = {str(s): s for s in symbols}
    try:
        expr = parse_expr(text, local_dict=names, transformations=TRANSFORMATIONS, evaluate=evaluate)
    except (SyntaxError, TypeError, sympy.SympifyError, TokenError) as exc:
        raise InputParseError(f"cannot parse polynomial {text!r}: {exc}")
    unknown = expr.free_symbols - set(symbols)
    if unknown:
        raise InputParseError(f"unknown variables {sorted(map(str, unknown))} in {text!r}")
    return expr


def monomials(text: str, symbols: Sequence[sympy.Symbol] = (X, Y, Z)) -> List[Tuple[int, ...]]:
    """Exponent vectors of the expanded polynomial."""
    expr = parse_polynomial(text, symbols)
    try:
        poly = sympy.Poly(sympy.expand(expr), *symbols)
    except sympy.PolynomialError as exc:
        raise InputParseError(f"{text!r} is not a polynomial: {exc}")
    return [tuple(int(i) for i in exponents) for exponents in poly.monoms()]


def _top_level(expr: sympy.Expr, multiplicity: int = 1) -> Iterator[Tuple[sympy.Expr, int]]:
    """Written factors, left to right."""
    if expr.is_Mul:
        for arg in expr.args:
            yield from _top_level(arg, multiplicity)
    elif expr.is_Pow and expr.exp.is_Integer and expr.exp > 0:
        yield from _top_level(expr.base, multiplicity * int(expr.exp))
    elif not expr.is_Number:
        yield expr, multiplicity


class ParserService:
    """Newton-Puiseux expansions for the supported factor shapes."""

    def _binomial(self, c1: Fraction, a: int, c2: Fraction, b: int, multiplicity: int, label: str) -> List[PuiseuxBranch]:
        """c1 x^a + c2 y^b: gcd(a, b) branches y = zeta (-c1/c2)^(1/b) x^(a/b)."""
        root = Coefficient.from_rational(-c1 / c2).power(Fraction(1, b))
        count = gcd(a, b)
        branches = []
        for j in range(count):
            coeff = root.rotate(Fraction(j, b))
            branches.append(
                PuiseuxBranch(
                    (PuiseuxTerm(coeff, Fraction(a, b)),),
                    multiplicity=multiplicity,
                    label=label if count == 1 else f"{label}#{j + 1}",
                )
            )
        return branches

    def _newton_pair(self, terms: Sequence[MonomialTerm], multiplicity: int, label: str) -> PuiseuxBranch:
        """
        k (x^A - s y^B)^m + t x^c y^d with gcd(A, B) = 1 and (c, d) above the edge.

        y = c0 x^(A/B) (1 + h), c0^B = 1/s, h^m = -t c0^d / (k (-B)^m) x^(c + Ad/B - Am).
        """
        on_x = [i for c, i, j in terms if j == 0]
        on_y = [j for c, i, j in terms if i == 0]
        if not on_x or not on_y:
            raise UnsupportedFactorShape(f"factor {label} contains an axis")
        x0, y0 = min(on_x), min(on_y)
        m = gcd(x0, y0)
        a, b = x0 // m, y0 // m

        edge, above = [], []
        for c, i, j in terms:
            height = Fraction(i, x0) + Fraction(j, y0)
            if height < 1:
                raise UnsupportedFactorShape(f"factor {label} has a Newton polygon with several edges")
            (edge if height == 1 else above).append((c, i, j))
        if len(above) != 1:
            raise UnsupportedFactorShape(f"factor {label} needs exactly one monomial above its Newton edge")

        k = next(c for c, i, j in edge if (i, j) == (x0, 0))
        second = next((c for c, i, j in edge if (i, j) == (a * (m - 1), b)), None)
        if second is None:
            raise UnsupportedFactorShape(f"Newton edge of {label} is not a power of a binomial")
        s = -second / (k * m)
        edge_poly = sum(
            (sympy.Rational(c.numerator, c.denominator) * X ** i * Y ** j for c, i, j in edge), sympy.Integer(0)
        )
        expected = sympy.Rational(k.numerator, k.denominator) * (X ** a - sympy.Rational(s.numerator, s.denominator) * Y ** b) ** m
        if sympy.expand(expected - edge_poly) != 0:
            raise UnsupportedFactorShape(f"Newton edge of {label} is not a power of a binomial")

        t, c, d = above[0]
        c0 = Coefficient.from_rational(s).inverse().power(Fraction(1, b))
        ratio = Coefficient.from_rational(-t / (k * Fraction(-b) ** m))
        h1 = (ratio * c0.power(d)).power(Fraction(1, m))
        shift = (c + Fraction(a * d, b) - a * m) / m
        branch = PuiseuxBranch(
            (PuiseuxTerm(c0, Fraction(a, b)), PuiseuxTerm(c0 * h1, Fraction(a, b) + shift)),
            multiplicity=multiplicity,
            label=label,
        )
        if branch.conjugacy_degree != b * m:
            raise UnsupportedFactorShape(f"factor {label} is not irreducible with one Puiseux pair")
        return branch

    def factor_branches(self, terms: Sequence[MonomialTerm], multiplicity: int = 1, label: str = "") -> List[PuiseuxBranch]:
        """Branches of one factor through the origin; a unit factor has none."""
        terms = [(Fraction(c), int(i), int(j)) for c, i, j in terms if c != 0]
        if not terms:
            raise InputParseError(f"factor {label} is zero")
        if any(i == 0 and j == 0 for _, i, j in terms):
            logger.debug("factor %s does not pass through the origin", label)
            return []
        if len(terms) == 1:
            _, i, j = terms[0]
            branches = []
            if i:
                branches.append(PuiseuxBranch(axis="x", multiplicity=i * multiplicity, label=f"{label}:x" if j else label))
            if j:
                branches.append(PuiseuxBranch(axis="y", multiplicity=j * multiplicity, label=f"{label}:y" if i else label))
            return branches
        if len(terms) == 2:
            (c1, i1, j1), (c2, i2, j2) = sorted(terms, key=lambda term: term[2])
            if j1 != 0 or i2 != 0:
                raise UnsupportedFactorShape(f"binomial {label} is not of the form c1 x^a + c2 y^b")
            return self._binomial(c1, i1, c2, j2, multiplicity, label)
        return [self._newton_pair(terms, multiplicity, label)]

    def _expr_terms(self, expr: sympy.Expr) -> List[MonomialTerm]:
        try:
            poly = sympy.Poly(sympy.expand(expr), X, Y)
        except sympy.PolynomialError as exc:
            raise InputParseError(f"{expr} is not a polynomial in x, y: {exc}")
        return [(_fraction(c), int(i), int(j)) for (i, j), c in poly.terms()]

    def parse_binomial_curve(self, text: str, ambient: Optional[CyclicType] = None) -> CurveGerm:
        """
        Branches of a polynomial equation, written factors in order.

        Each written factor is split further into its irreducible factors over Q.
        """
        expr = parse_polynomial(text, evaluate=False)
        branches: List[PuiseuxBranch] = []
        for written, multiplicity in _top_level(expr):
            _, irreducible = sympy.factor_list(sympy.expand(written), X, Y)
            for factor, power in irreducible:
                label = sympy.sstr(factor).replace("**", "^")
                branches.extend(self.factor_branches(self._expr_terms(factor), multiplicity * power, label))
        if not branches:
            raise InputParseError(f"{text!r} does not vanish at the origin")
        germ = CurveGerm(ambient or CyclicType.smooth(), tuple(branches))
        logger.debug("parsed %r into %d branches", text, len(branches))
        return germ

    def parse_monomial_factors(
        self, factors: Iterable[Tuple[Sequence[MonomialTerm], int]], ambient: Optional[CyclicType] = None
    ) -> CurveGerm:
        """Branches of factors given as (terms, multiplicity), terms being (coefficient, i, j)."""
        branches: List[PuiseuxBranch] = []
        for position, (terms, multiplicity) in enumerate(factors, start=1):
            branches.extend(self.factor_branches(terms, multiplicity, f"F{position}"))
        if not branches:
            raise InputParseError("no factor vanishes at the origin")
        return CurveGerm(ambient or CyclicType.smooth(), tuple(branches))


# Singleton instance
parser_service = ParserService()
