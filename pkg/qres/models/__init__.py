"""
Domain models package.
Import all models here for easy access.
"""
from qres.models.quotient import BlowupResult, CyclicType, TwoRowType, Weight
from qres.models.branch import Coefficient, CurveGerm, PuiseuxBranch, PuiseuxTerm
from qres.models.graph import ABSTRACT, ARROW, EMBEDDED, EXCEPTIONAL, BranchAttachment, DualGraph, Edge, Vertex
from qres.models.intersection import CurvetteMatrix, IntersectionMatrix
from qres.models.projective import WPPlane
from qres.models.jung import (
    ChainStep,
    ComponentTransform,
    DoublePointTransform,
    HirzebruchJungChain,
    Sing0Transform,
    SurfaceGerm,
)

__all__ = [
    "BlowupResult", "CyclicType", "TwoRowType", "Weight",
    "Coefficient", "CurveGerm", "PuiseuxBranch", "PuiseuxTerm",
    "ABSTRACT", "ARROW", "EMBEDDED", "EXCEPTIONAL", "BranchAttachment", "DualGraph", "Edge", "Vertex",
    "CurvetteMatrix", "IntersectionMatrix",
    "WPPlane",
    "ChainStep", "ComponentTransform", "DoublePointTransform", "HirzebruchJungChain",
    "Sing0Transform", "SurfaceGerm",
]
