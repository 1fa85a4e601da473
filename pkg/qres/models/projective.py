"""
Quotient weighted projective plane P^2_w(d; a, b, c).
"""
from dataclasses import dataclass
from math import gcd

from qres.core.exceptions import InputParseError, NonCoprimeWeights


@dataclass(frozen=True)
class WPPlane:
    p: int
    q: int
    r: int
    d: int = 1
    a: int = 0
    b: int = 0
    c: int = 0

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 1:
            raise InputParseError(f"weights must be positive, got {self.weights}")
        if self.d < 1:
            raise InputParseError(f"group order must be positive, got d={self.d}")
        if gcd(self.p, self.q, self.r) != 1:
            raise NonCoprimeWeights(f"gcd of the weights {self.weights} must be 1")

    @property
    def weights(self):
        return (self.p, self.q, self.r)

    @property
    def m1(self) -> int:
        return self.p * self.b - self.q * self.a

    @property
    def m2(self) -> int:
        return self.p * self.c - self.r * self.a

    @property
    def m3(self) -> int:
        return self.q * self.c - self.r * self.b

    @property
    def e(self) -> int:
        return gcd(self.d, self.m1, self.m2, self.m3)

    @property
    def dpqr(self) -> int:
        return self.d * self.p * self.q * self.r

    def __repr__(self):
        return f"<WPPlane(w=({self.p},{self.q},{self.r}), action=({self.d};{self.a},{self.b},{self.c}), e={self.e})>"
