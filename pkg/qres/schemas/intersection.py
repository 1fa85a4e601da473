"""
Intersection theory responses.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel

from qres.schemas.common import RationalSchema


class AttachmentSchema(BaseModel):
    """Where a branch meets the exceptional locus: divisor k and index d."""
    branch: int
    arrow: int
    k: Optional[int] = None
    d: int

    class Config:
        orm_mode = True


class PairingSchema(BaseModel):
    i: int
    j: int
    value: RationalSchema


class IntersectionResponse(BaseModel):
    ids: List[int]
    A: List[List[RationalSchema]]
    B: List[List[RationalSchema]]
    negative_definite: Optional[bool] = None
    minors: List[RationalSchema]
    attachments: List[AttachmentSchema] = []
    pairs: List[PairingSchema] = []
    value: Optional[RationalSchema] = None
    checks: Dict[int, Dict[int, RationalSchema]] = {}
