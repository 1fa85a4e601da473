"""
Intersection and curvette matrices indexed by exceptional vertices.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import sympy


def to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def to_rational(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class IntersectionMatrix:
    """A = (E_i . E_j) over the exceptional vertices ``ids``."""

    ids: Tuple[int, ...]
    matrix: sympy.ImmutableMatrix

    def entry(self, i: int, j: int) -> Fraction:
        return to_fraction(self.matrix[self.ids.index(i), self.ids.index(j)])

    def rows(self) -> List[List[Fraction]]:
        n = len(self.ids)
        return [[to_fraction(self.matrix[i, j]) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class CurvetteMatrix:
    """B = -A^-1; b_ij is the pairing of curvettes through E_i and E_j."""

    ids: Tuple[int, ...]
    matrix: sympy.ImmutableMatrix

    def entry(self, i: int, j: int) -> Fraction:
        return to_fraction(self.matrix[self.ids.index(i), self.ids.index(j)])

    def rows(self) -> List[List[Fraction]]:
        n = len(self.ids)
        return [[to_fraction(self.matrix[i, j]) for j in range(n)] for i in range(n)]
