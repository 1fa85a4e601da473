"""
Curve wire schemas: exact coefficients, Puiseux branches, germs and monomial input.
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, validator

from qres.models.branch import Coefficient, CurveGerm, PuiseuxBranch, PuiseuxTerm
from qres.models.quotient import CyclicType
from qres.schemas.common import CyclicTypeSchema, RationalSchema


class CoefficientSchema(BaseModel):
    """(num/den)^(1/root) * exp(2 pi i phase); root and phase are omitted for rationals."""
    num: int
    den: int = 1
    root: Optional[int] = Field(None, ge=1)
    phase: Optional[RationalSchema] = None

    @classmethod
    def validate(cls, value):
        if isinstance(value, Coefficient):
            return cls.from_model(value)
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            rational = RationalSchema.validate(value)
            return cls(num=rational.num, den=rational.den)
        return super().validate(value)

    @validator("den")
    def nonzero_den(cls, value):
        if value == 0:
            raise ValueError("denominator must be nonzero")
        return value

    def to_model(self) -> Coefficient:
        phase = self.phase.to_fraction() if self.phase else 0
        return Coefficient.from_wire(self.num, self.den, self.root or 1, phase)

    @classmethod
    def from_model(cls, coeff: Coefficient) -> "CoefficientSchema":
        num, den, root, phase = coeff.to_wire()
        return cls(
            num=num,
            den=den,
            root=root if root != 1 else None,
            phase=RationalSchema.validate(phase) if phase else None,
        )


class PuiseuxTermSchema(BaseModel):
    coeff: CoefficientSchema
    exp: RationalSchema

    class Config:
        orm_mode = True


class PuiseuxBranchSchema(BaseModel):
    """One branch y = sum coeff x^exp, or an axis ("x" for {x=0}, "y" for {y=0})."""
    terms: List[PuiseuxTermSchema] = []
    axis: Optional[str] = None
    multiplicity: int = Field(1, ge=1)
    label: Optional[str] = None

    @validator("axis")
    def known_axis(cls, value):
        if value not in (None, "x", "y"):
            raise ValueError("axis must be 'x', 'y' or null")
        return value

    def to_model(self) -> PuiseuxBranch:
        terms = tuple(PuiseuxTerm(t.coeff.to_model(), t.exp.to_fraction()) for t in self.terms)
        axis = self.axis if not terms else None
        return PuiseuxBranch(terms, axis=axis, multiplicity=self.multiplicity, label=self.label)

    class Config:
        orm_mode = True


class CurveGermSchema(BaseModel):
    ambient: CyclicTypeSchema = CyclicTypeSchema(d=1, a=0, b=0)
    branches: List[PuiseuxBranchSchema]

    def to_model(self) -> CurveGerm:
        return CurveGerm(self.ambient.to_model(), tuple(b.to_model() for b in self.branches))

    class Config:
        orm_mode = True


class MonomialFactorSchema(BaseModel):
    """A factor as (coefficient, x-exponent, y-exponent) triples."""
    terms: List[Tuple[RationalSchema, int, int]]
    multiplicity: int = Field(1, ge=1)

    @classmethod
    def validate(cls, value):
        if isinstance(value, list):
            value = {"terms": value}
        return super().validate(value)

    @validator("terms")
    def nonnegative_exponents(cls, value):
        if not value:
            raise ValueError("a factor needs at least one term")
        for _, i, j in value:
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
        return value


class MonomialCurveInput(BaseModel):
    factors: List[MonomialFactorSchema]
    ambient: CyclicTypeSchema = CyclicTypeSchema(d=1, a=0, b=0)

    def factor_terms(self):
        return [
            ([(c.to_fraction(), i, j) for c, i, j in factor.terms], factor.multiplicity)
            for factor in self.factors
        ]

    def ambient_type(self) -> CyclicType:
        return self.ambient.to_model()
