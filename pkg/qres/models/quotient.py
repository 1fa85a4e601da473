"""
Quotient type models: cyclic types (d; a, b), two-row types, weights and blow-up results.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Tuple

from qres.core.exceptions import BadWeight, InputParseError


@dataclass(frozen=True)
class CyclicType:
    """
    The quotient of the plane by xi.(x, y) = (xi^a x, xi^b y), xi in mu_d.

    Weights are stored reduced to [0, d) so equality is structural.
    """

    d: int
    a: int
    b: int

    def __post_init__(self):
        if self.d < 1:
            raise InputParseError(f"group order must be positive, got d={self.d}")
        object.__setattr__(self, "a", self.a % self.d)
        object.__setattr__(self, "b", self.b % self.d)

    @classmethod
    def smooth(cls) -> "CyclicType":
        return cls(1, 0, 0)

    @property
    def is_smooth(self) -> bool:
        return self.d == 1

    @property
    def is_effective(self) -> bool:
        return gcd(self.d, self.a, self.b) == 1

    @property
    def normalized(self) -> bool:
        return gcd(self.d, self.a) == 1 and gcd(self.d, self.b) == 1

    def swap(self) -> "CyclicType":
        return CyclicType(self.d, self.b, self.a)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.d, self.a, self.b)

    def __str__(self):
        return f"({self.d};{self.a},{self.b})"

    def __repr__(self):
        return f"<CyclicType(d={self.d}, a={self.a}, b={self.b})>"


@dataclass(frozen=True)
class TwoRowType:
    """
    Quotient by mu_d1 x mu_d2 acting with weight rows (a, b) and (c, e).

    ``matrix`` is ((a, b), (c, e)); row i acts through mu_{d_i}.
    """

    d1: int
    d2: int
    matrix: Tuple[Tuple[int, int], Tuple[int, int]]

    def __post_init__(self):
        if self.d1 < 1 or self.d2 < 1:
            raise InputParseError(f"group orders must be positive, got ({self.d1}, {self.d2})")
        (a, b), (c, e) = self.matrix
        object.__setattr__(self, "matrix", ((int(a), int(b)), (int(c), int(e))))

    @property
    def orders(self) -> Tuple[int, int]:
        return (self.d1, self.d2)

    def __str__(self):
        (a, b), (c, e) = self.matrix
        return f"({self.d1},{self.d2}|{a} {b};{c} {e})"


@dataclass(frozen=True)
class Weight:
    """Coprime weight vector (p, q) of a weighted blow-up."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise BadWeight(f"weights must be positive, got ({self.p},{self.q})")
        if gcd(self.p, self.q) != 1:
            raise BadWeight(f"weights must be coprime, got ({self.p},{self.q})")

    def __str__(self):
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class BlowupResult:
    """Charts and exceptional data of the (p,q)-blow-up of a normalized X(d;a,b)."""

    center: CyclicType
    weight: Weight
    e: int
    chart1_origin: CyclicType
    chart2_origin: CyclicType
    exc_self_intersection: Fraction
    beta: int
    mu: int
    chart_maps: Tuple[str, str] = field(default=("x=X^p, y=X^q*Y, u=X^e", "x=X*Y^p, y=Y^q, v=Y^e"))

    def __repr__(self):
        return (
            f"<BlowupResult(center={self.center}, weight={self.weight}, e={self.e}, "
            f"charts={self.chart1_origin},{self.chart2_origin}, E2={self.exc_self_intersection})>"
        )
