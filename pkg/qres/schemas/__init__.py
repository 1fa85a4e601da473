"""
Pydantic schemas for JSON input and output.
"""
from qres.schemas.common import (
    BlowupResultSchema,
    CyclicTypeSchema,
    NormalizeResponse,
    RationalSchema,
    TwoRowTypeSchema,
    WeightSchema,
    parse_cyclic_type,
    parse_int_list,
    parse_two_row_type,
)
from qres.schemas.curve import (
    CoefficientSchema,
    CurveGermSchema,
    MonomialCurveInput,
    MonomialFactorSchema,
    PuiseuxBranchSchema,
    PuiseuxTermSchema,
)
from qres.schemas.graph import DualGraphSchema, EdgeSchema, VertexSchema
from qres.schemas.intersection import AttachmentSchema, IntersectionResponse, PairingSchema
from qres.schemas.projective import BezoutRequest, BezoutResponse
from qres.schemas.jung import ChainSchema, ChainStepSchema, JungRequest

__all__ = [
    "BlowupResultSchema", "CyclicTypeSchema", "NormalizeResponse", "RationalSchema",
    "TwoRowTypeSchema", "WeightSchema", "parse_cyclic_type", "parse_int_list", "parse_two_row_type",
    "CoefficientSchema", "CurveGermSchema", "MonomialCurveInput", "MonomialFactorSchema",
    "PuiseuxBranchSchema", "PuiseuxTermSchema",
    "DualGraphSchema", "EdgeSchema", "VertexSchema",
    "AttachmentSchema", "IntersectionResponse", "PairingSchema",
    "BezoutRequest", "BezoutResponse",
    "ChainSchema", "ChainStepSchema", "JungRequest",
]
