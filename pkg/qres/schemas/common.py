"""
Shared wire schemas: exact rationals and quotient types.
"""
import re
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, root_validator, validator

from qres.models.quotient import BlowupResult, CyclicType, TwoRowType, Weight

_TYPE_PATTERN = re.compile(r"^\s*\(?\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*$")


def parse_cyclic_type(text: str) -> CyclicType:
    """Read "d;a,b" (parentheses optional)."""
    match = _TYPE_PATTERN.match(text)
    if not match:
        raise ValueError(f"expected a type 'd;a,b', got {text!r}")
    d, a, b = (int(g) for g in match.groups())
    if d < 1:
        raise ValueError(f"group order must be positive, got d={d}")
    return CyclicType(d, a, b)


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace(";", ",").split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"expected comma separated integers, got {text!r}")


class RationalSchema(BaseModel):
    """Exact rational {"num","den"}, den > 0, in lowest terms."""
    num: int
    den: int = 1

    @classmethod
    def validate(cls, value):
        if isinstance(value, bool):
            raise TypeError("booleans are not rationals")
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            return cls(num=value.numerator, den=value.denominator)
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"not an exact rational: {value!r}")
            return cls(num=value.numerator, den=value.denominator)
        if isinstance(value, float):
            raise TypeError("floating point numbers are not accepted; use {num, den}")
        return super().validate(value)

    @root_validator(skip_on_failure=True)
    def lowest_terms(cls, values: dict) -> dict:
        num, den = values["num"], values["den"]
        if den == 0:
            raise ValueError("denominator must be nonzero")
        g = gcd(num, den) * (1 if den > 0 else -1)
        values["num"], values["den"] = num // g, den // g
        return values

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    class Config:
        orm_mode = True


class CyclicTypeSchema(BaseModel):
    """Type (d; a, b) of X(d;a,b)."""
    d: int = Field(..., ge=1, description="group order")
    a: int
    b: int

    @classmethod
    def validate(cls, value):
        if isinstance(value, str):
            value = parse_cyclic_type(value)
        if isinstance(value, (list, tuple)):
            value = CyclicType(*value)
        return super().validate(value)

    def to_model(self) -> CyclicType:
        return CyclicType(self.d, self.a, self.b)

    class Config:
        orm_mode = True


class TwoRowTypeSchema(BaseModel):
    """Type (d1, d2 | a b; c e): row i acts through mu_{d_i}."""
    d: Tuple[int, int]
    A: Tuple[Tuple[int, int], Tuple[int, int]]

    @validator("d")
    def positive_orders(cls, value):
        if min(value) < 1:
            raise ValueError("group orders must be positive")
        return value

    def to_model(self) -> TwoRowType:
        return TwoRowType(self.d[0], self.d[1], self.A)

    @classmethod
    def from_model(cls, t: TwoRowType) -> "TwoRowTypeSchema":
        return cls(d=t.orders, A=t.matrix)


def parse_two_row_type(text: str) -> TwoRowType:
    """Read "d1,d2;a,b;c,e": the two orders, then one row per order."""
    values = parse_int_list(text)
    if len(values) != 6:
        raise ValueError(f"expected six integers 'd1,d2;a,b;c,e', got {text!r}")
    d1, d2, a, b, c, e = values
    return TwoRowTypeSchema(d=(d1, d2), A=((a, b), (c, e))).to_model()


class WeightSchema(BaseModel):
    p: int
    q: int

    def to_model(self) -> Weight:
        return Weight(self.p, self.q)

    class Config:
        orm_mode = True


class NormalizeResponse(BaseModel):
    type: CyclicTypeSchema
    exponents: Optional[Tuple[int, int]] = None
    normalized: Optional[bool] = None
    index: int
    two_row: Optional[TwoRowTypeSchema] = None


class BlowupResultSchema(BaseModel):
    """Charts and exceptional data of one weighted blow-up."""
    center: CyclicTypeSchema
    weight: WeightSchema
    e: int
    chart1_origin: CyclicTypeSchema
    chart2_origin: CyclicTypeSchema
    exc_self_intersection: RationalSchema
    beta: int
    mu: int
    chart_maps: Dict[str, str]

    @validator("chart_maps", pre=True)
    def name_charts(cls, value):
        if isinstance(value, (list, tuple)):
            return {"chart1": value[0], "chart2": value[1]}
        return value

    @classmethod
    def from_model(cls, result: BlowupResult) -> "BlowupResultSchema":
        return cls.from_orm(result)

    class Config:
        orm_mode = True
