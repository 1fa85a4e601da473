"""
Weighted blow-up service: charts, exceptional divisor data and transform formulas
of the (p,q)-blow-up of a normalized point X(d;a,b).
"""
import logging
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple

from qres.core.exceptions import ArithmeticInvariantError, EmptySupport, NotNormalized
from qres.models.quotient import BlowupResult, CyclicType, Weight
from qres.services.quotient_service import exact_div, inverse_mod

logger = logging.getLogger(__name__)


class BlowupService:
    """Formulas of a single weighted blow-up."""

    def blowup(self, t: CyclicType, w: Weight) -> BlowupResult:
        """
        Blow up X(d;a,b) with respect to w = (p,q).

        Chart 1 is x = X^p, y = X^q Y with cover coordinate u = X^e; chart 2 is
        x = X Y^p, y = Y^q with v = Y^e. Both origins come out normalized.
        """
        if not t.normalized:
            raise NotNormalized(f"type {t} is not normalized")
        d, a, b = t.as_tuple()
        p, q = w.p, w.q
        e = gcd(d, p * b - q * a)
        beta = inverse_mod(a, d)
        mu = inverse_mod(b, d)

        chart1 = CyclicType(p * d // e, 1, exact_div(-q + beta * p * b, e, "chart 1 weight"))
        chart2 = CyclicType(q * d // e, exact_div(-p + mu * q * a, e, "chart 2 weight"), 1)
        for chart in (chart1, chart2):
            if not chart.normalized:
                raise ArithmeticInvariantError(f"chart type {chart} of {t} under {w} is not normalized")

        result = BlowupResult(
            center=t,
            weight=w,
            e=e,
            chart1_origin=chart1,
            chart2_origin=chart2,
            exc_self_intersection=Fraction(-e * e, d * p * q),
            beta=beta,
            mu=mu,
        )
        logger.debug("blow-up of %s by %s: e=%d, charts %s %s", t, w, e, chart1, chart2)
        return result

    def wt_order(self, exponents: Iterable[Sequence[int]], w: Weight) -> int:
        """(p,q)-order of a polynomial given by its support: min of p*i + q*j."""
        orders = [w.p * i + w.q * j for i, j, *_ in exponents]
        if not orders:
            raise EmptySupport("cannot take the weighted order of an empty support")
        return min(orders)

    def total_transform(self, t: CyclicType, w: Weight, nu, require_integral: bool = True) -> Fraction:
        """Multiplicity nu/e of the new exceptional divisor in the total transform."""
        e = self.blowup(t, w).e
        multiplicity = Fraction(nu) / e
        if require_integral and multiplicity.denominator != 1:
            raise ArithmeticInvariantError(
                f"multiplicity {nu}/{e} of the exceptional divisor is not an integer"
            )
        return multiplicity

    def exc_dot_strict(self, t: CyclicType, w: Weight, nu) -> Fraction:
        """E . C_hat = e nu / (dpq)."""
        e = self.blowup(t, w).e
        return Fraction(e) * Fraction(nu) / (t.d * w.p * w.q)

    def strict_self_intersection_update(self, old, t: CyclicType, w: Weight, mu) -> Fraction:
        """D_hat^2 = D^2 - mu^2 / (dpq) for a compact divisor of (p,q)-multiplicity mu."""
        return Fraction(old) - Fraction(mu) ** 2 / (t.d * w.p * w.q)

    def axis_multiplicities(self, w: Weight) -> Tuple[int, int]:
        """(p,q)-multiplicities of the axes {x=0} and {y=0}."""
        return w.p, w.q


# Singleton instance
blowup_service = BlowupService()
