"""
Weighted Bezout request and response.
"""
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, Field, root_validator, validator

from qres.models.projective import WPPlane
from qres.schemas.common import RationalSchema


class BezoutRequest(BaseModel):
    """Two divisors on P^2_w(d;a,b,c), given by w-degree or by polynomial in x, y, z."""
    w: Tuple[int, int, int]
    action: Tuple[int, int, int, int] = (1, 0, 0, 0)
    deg1: Optional[int] = Field(None, ge=0)
    deg2: Optional[int] = Field(None, ge=0)
    poly1: Optional[str] = None
    poly2: Optional[str] = None

    @validator("w")
    def positive_weights(cls, value):
        if min(value) < 1:
            raise ValueError("weights must be positive")
        return value

    @root_validator(skip_on_failure=True)
    def one_form_per_divisor(cls, values: dict) -> dict:
        for position in ("1", "2"):
            if (values.get(f"deg{position}") is None) == (values.get(f"poly{position}") is None):
                raise ValueError(f"give exactly one of deg{position} and poly{position}")
        return values

    def plane(self) -> WPPlane:
        d, a, b, c = self.action
        return WPPlane(*self.w, d=d, a=a, b=b, c=c)


class BezoutResponse(BaseModel):
    value: RationalSchema
    e: int
    dpqr: int
    deg_tau: int
    degrees: Tuple[int, int]
    axes: Dict[str, RationalSchema]
