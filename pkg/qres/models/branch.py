"""
Curve branch models: exact coefficients, Puiseux branches and curve germs.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Dict, Optional, Tuple, Union

import sympy

from qres.core.exceptions import InputParseError
from qres.models.quotient import CyclicType

Rational = Union[int, Fraction]


def _frac_mod1(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)


@dataclass(frozen=True)
class Coefficient:
    """
    Nonzero exact number ``|c| * exp(2 pi i phase)``.

    ``|c|`` is stored as prime powers with rational exponents, so products, inverses
    and rational powers stay exact. Sums are never needed.
    """

    radical: Tuple[Tuple[int, Fraction], ...] = ()
    phase: Fraction = Fraction(0)

    def __post_init__(self):
        cleaned = tuple(sorted((int(p), Fraction(e)) for p, e in self.radical if e != 0))
        object.__setattr__(self, "radical", cleaned)
        object.__setattr__(self, "phase", _frac_mod1(Fraction(self.phase)))

    @classmethod
    def one(cls) -> "Coefficient":
        return cls()

    @classmethod
    def from_rational(cls, value: Rational) -> "Coefficient":
        value = Fraction(value)
        if value == 0:
            raise InputParseError("branch coefficients must be nonzero")
        phase = Fraction(1, 2) if value < 0 else Fraction(0)
        value = abs(value)
        exponents: Dict[int, Fraction] = {}
        for prime, power in sympy.factorint(value.numerator).items():
            exponents[int(prime)] = Fraction(power)
        for prime, power in sympy.factorint(value.denominator).items():
            exponents[int(prime)] = exponents.get(int(prime), Fraction(0)) - power
        return cls(tuple(exponents.items()), phase)

    @classmethod
    def from_wire(cls, num: int, den: int = 1, root: int = 1, phase: Rational = 0) -> "Coefficient":
        """Build ``(num/den)^(1/root) * exp(2 pi i phase)``."""
        if root < 1:
            raise InputParseError(f"coefficient root must be positive, got {root}")
        if root > 1 and Fraction(num, den) < 0:
            raise InputParseError("a rooted coefficient needs a positive radicand; use phase for signs")
        base = cls.from_rational(Fraction(num, den))
        return base.power(Fraction(1, root)).rotate(Fraction(phase))

    @property
    def magnitude(self) -> Dict[int, Fraction]:
        return dict(self.radical)

    @property
    def is_rational(self) -> bool:
        return all(e.denominator == 1 for _, e in self.radical) and self.phase in (0, Fraction(1, 2))

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        value = Fraction(1)
        for prime, power in self.radical:
            value *= Fraction(prime) ** int(power)
        return -value if self.phase else value

    def to_wire(self) -> Tuple[int, int, int, Fraction]:
        """Return (num, den, root, phase) with the value (num/den)^(1/root) * e(phase)."""
        if self.is_rational:
            value = self.to_fraction()
            return value.numerator, value.denominator, 1, Fraction(0)
        root = reduce(lcm, (e.denominator for _, e in self.radical), 1)
        num, den = 1, 1
        for prime, power in self.radical:
            scaled = int(power * root)
            if scaled > 0:
                num *= prime ** scaled
            else:
                den *= prime ** (-scaled)
        phase = self.phase
        if root == 1 and phase == Fraction(1, 2):
            return -num, den, 1, Fraction(0)
        return num, den, root, phase

    def __mul__(self, other: "Coefficient") -> "Coefficient":
        merged = dict(self.radical)
        for prime, power in other.radical:
            merged[prime] = merged.get(prime, Fraction(0)) + power
        return Coefficient(tuple(merged.items()), self.phase + other.phase)

    def inverse(self) -> "Coefficient":
        return Coefficient(tuple((p, -e) for p, e in self.radical), -self.phase)

    def __truediv__(self, other: "Coefficient") -> "Coefficient":
        return self * other.inverse()

    def power(self, exponent: Rational) -> "Coefficient":
        """Principal branch of ``self ** exponent``."""
        exponent = Fraction(exponent)
        return Coefficient(tuple((p, e * exponent) for p, e in self.radical), self.phase * exponent)

    def rotate(self, turns: Rational) -> "Coefficient":
        """Multiply by ``exp(2 pi i turns)``."""
        return Coefficient(self.radical, self.phase + Fraction(turns))

    def same_magnitude(self, other: "Coefficient") -> bool:
        return self.radical == other.radical

    def to_sympy(self) -> sympy.Expr:
        value = sympy.Integer(1)
        for prime, power in self.radical:
            value *= sympy.Integer(prime) ** sympy.Rational(power.numerator, power.denominator)
        if self.phase:
            value *= sympy.exp(2 * sympy.pi * sympy.I * sympy.Rational(self.phase.numerator, self.phase.denominator))
        return value

    def __str__(self):
        if self.is_rational:
            return str(self.to_fraction())
        num, den, root, phase = self.to_wire()
        text = f"({num}/{den})^(1/{root})" if den != 1 else f"{num}^(1/{root})"
        return f"{text}*e({phase})" if phase else text


@dataclass(frozen=True)
class PuiseuxTerm:
    coeff: Coefficient
    exp: Fraction

    def __str__(self):
        return f"{self.coeff}*x^({self.exp})"


@dataclass(frozen=True)
class PuiseuxBranch:
    """
    One branch ``y = sum c_k x^f_k`` (or a coordinate axis).

    ``axis`` is "x" for {x=0} and "y" for {y=0}; an empty expansion is the axis {y=0}.
    ``multiplicity`` is the power with which the branch appears in the equation.
    """

    terms: Tuple[PuiseuxTerm, ...] = ()
    axis: Optional[str] = None
    multiplicity: int = 1
    label: Optional[str] = None

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if self.axis not in (None, "x", "y"):
            raise InputParseError(f"axis must be 'x', 'y' or null, got {self.axis!r}")
        if self.axis and terms:
            raise InputParseError("an axis branch carries no expansion terms")
        if not terms and self.axis is None:
            object.__setattr__(self, "axis", "y")
        if self.multiplicity < 1:
            raise InputParseError(f"branch multiplicity must be positive, got {self.multiplicity}")
        previous = Fraction(0)
        for term in terms:
            if term.exp <= previous:
                raise InputParseError("Puiseux exponents must be positive and strictly increasing")
            previous = term.exp

    @classmethod
    def from_pairs(cls, pairs, **kwargs) -> "PuiseuxBranch":
        """Build from ``[(coefficient, exponent), ...]`` with rational or Coefficient entries."""
        terms = []
        for coeff, exp in pairs:
            if not isinstance(coeff, Coefficient):
                coeff = Coefficient.from_rational(coeff)
            terms.append(PuiseuxTerm(coeff, Fraction(exp)))
        return cls(tuple(terms), **kwargs)

    @property
    def is_axis(self) -> bool:
        return self.axis is not None

    @property
    def exponents(self) -> Tuple[Fraction, ...]:
        return tuple(t.exp for t in self.terms)

    @property
    def conjugacy_degree(self) -> int:
        return reduce(lcm, (f.denominator for f in self.exponents), 1)

    def __str__(self):
        if self.axis:
            return f"{{{self.axis}=0}}"
        return "y = " + " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class CurveGerm:
    """A plane curve germ at the origin of X(d;a,b), given branch by branch."""

    ambient: CyclicType
    branches: Tuple[PuiseuxBranch, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))

    def __repr__(self):
        return f"<CurveGerm(ambient={self.ambient}, branches={len(self.branches)})>"
