"""
Quotient type service: normalization, comparison and two-row reduction of
abelian quotient surface types (d; a, b).
"""
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Tuple

from sympy import mod_inverse

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from qres.core.exceptions import ArithmeticInvariantError, NonEffectiveAction, NotNormalized
from qres.models.quotient import CyclicType, TwoRowType

logger = logging.getLogger(__name__)


def exact_div(numerator: int, denominator: int, what: str = "division") -> int:
    """Integer division that theory guarantees exact."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticInvariantError(f"{what}: {numerator}/{denominator} is not an integer")
    return quotient


def bezout_pair(a: int, c: int) -> Tuple[int, int, int]:
    """Return (alpha, beta, m) with alpha*a + beta*c = m = gcd(a, c) >= 0."""
    x, y, m = igcdex(abs(a), abs(c))
    alpha = int(x) * (1 if a >= 0 else -1)
    beta = int(y) * (1 if c >= 0 else -1)
    return alpha, beta, int(m)


def inverse_mod(value: int, modulus: int) -> int:
    """Inverse of ``value`` modulo ``modulus``; 0 when the modulus is 1."""
    if modulus == 1:
        return 0
    return int(mod_inverse(value % modulus, modulus))


class QuotientService:
    """Operations on cyclic quotient types."""

    def _require_effective(self, t: CyclicType) -> None:
        if not t.is_effective:
            raise NonEffectiveAction(
                f"type {t} does not act effectively: gcd(d,a,b) = {gcd(t.d, t.a, t.b)}"
            )

    def is_normalized(self, t: CyclicType) -> bool:
        return t.normalized

    def normalize(self, t: CyclicType) -> Tuple[CyclicType, Tuple[int, int]]:
        """
        Remove the reflections of the action.

        Returns:
            The normalized type and the exponents ((d,b), (d,a)) of the isomorphism
            [(x, y)] -> [(x^(d,b), y^(d,a))].
        """
        self._require_effective(t)
        ga, gb = gcd(t.d, t.a), gcd(t.d, t.b)
        d = exact_div(t.d, ga * gb, "normalized order")
        result = CyclicType(d, t.a // ga, t.b // gb)
        return result, (gb, ga)

    def index(self, t: CyclicType) -> int:
        return self.normalize(t)[0].d

    def swap(self, t: CyclicType) -> CyclicType:
        return t.swap()

    def unit_form(self, t: CyclicType) -> CyclicType:
        """Scale a normalized type by a^-1 to the form (d; 1, k)."""
        if not t.normalized:
            raise NotNormalized(f"type {t} is not normalized")
        if t.is_smooth:
            return t
        return CyclicType(t.d, 1, t.b * inverse_mod(t.a, t.d))

    def refinement_ratio(self, t: CyclicType) -> Fraction:
        """
        k/d for a point of type t on a divisor that is the image of {y=0}.

        The (1,k) blow-up of (d;1,k) lowers the divisor's self-intersection by k/d.
        """
        t = self.normalize(t)[0]
        if t.is_smooth:
            return Fraction(0)
        return Fraction(self.unit_form(t).b, t.d)

    def equivalent(self, t1: CyclicType, t2: CyclicType) -> bool:
        """True iff the normalized types agree up to swap and a common unit."""
        n1, _ = self.normalize(t1)
        n2, _ = self.normalize(t2)
        if n1.d != n2.d:
            return False
        if n1.is_smooth:
            return True
        d = n1.d
        inv_a = inverse_mod(n1.a, d)
        for target_a, target_b in ((n2.a, n2.b), (n2.b, n2.a)):
            unit = target_a * inv_a % d
            if unit * n1.b % d == target_b:
                return True
        return False

    def reduce_two_row(self, t: TwoRowType) -> CyclicType:
        """
        Convert a two-row type into its normalized cyclic form.

        Rows are scaled to a common order r, combined with alpha*a + beta*c = m = gcd(a, c),
        and the resulting pure y-reflection of order r/t (t = gcd(r, (ad-bc)/m)) is
        divided out by y -> y^(r/t).
        """
        (a, b), (c, e) = t.matrix
        r = lcm(t.d1, t.d2)
        a, b = a * (r // t.d1), b * (r // t.d1)
        c, e = c * (r // t.d2), e * (r // t.d2)
        a, b, c, e = a % r, b % r, c % r, e % r
        if r == 1 or (a == 0 and c == 0):
            # every element fixes x: a reflection group
            return CyclicType.smooth()

        alpha, beta, m = bezout_pair(a, c)
        det = a * e - b * c
        t_gcd = gcd(r, exact_div(det, m, "two-row determinant"))
        weight = (alpha * b + beta * e) * (r // t_gcd)

        kernel = gcd(r, m, weight)
        cyclic = CyclicType(r // kernel, m // kernel, weight // kernel)
        result, _ = self.normalize(cyclic)
        logger.debug("two-row %s -> raw %s -> %s", t, cyclic, result)
        return result


# Singleton instance
quotient_service = QuotientService()
