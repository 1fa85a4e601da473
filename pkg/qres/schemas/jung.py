"""
Jung method and Hirzebruch-Jung schemas.
"""
from typing import List, Optional

from pydantic import BaseModel, Field

from qres.schemas.common import CyclicTypeSchema, RationalSchema
from qres.schemas.graph import DualGraphSchema


class JungRequest(BaseModel):
    n: int = Field(..., ge=1, description="covering degree of z^n = f(x,y)")
    base: DualGraphSchema


class ChainStepSchema(BaseModel):
    center: CyclicTypeSchema
    k: int
    self_int: RationalSchema
    m: RationalSchema

    class Config:
        orm_mode = True


class ChainSchema(BaseModel):
    """Hirzebruch-Jung chain of a cyclic point."""
    type: CyclicTypeSchema
    unit_form: CyclicTypeSchema
    fraction: List[int]
    chain: List[int]
    steps: List[ChainStepSchema] = []
    determinant: Optional[int] = None
