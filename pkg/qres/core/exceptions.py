"""
Exception hierarchy for every domain error.
Each error carries a stable ``code``, a human ``detail`` and the CLI exit code.
"""
from typing import Optional


class QResError(Exception):
    """Base error, raised like ``QResError(detail=...)``."""

    code = "qres_error"
    exit_code = 1

    def __init__(self, detail: str, *, code: Optional[str] = None):
        super().__init__(detail)
        self.detail = detail
        if code is not None:
            self.code = code

    def to_dict(self) -> dict:
        return {"error": {"code": self.code, "detail": self.detail}}

    def __repr__(self):
        return f"<{type(self).__name__}(code='{self.code}', detail='{self.detail}')>"


class InputParseError(QResError):
    """Malformed JSON, schema violations or bad flag syntax."""
    code = "input_parse_error"
    exit_code = 2


class ArithmeticInvariantError(QResError):
    """A division the theory guarantees exact was not. Signals a bug."""
    code = "internal_invariant"


# quotient types
class NonEffectiveAction(QResError):
    code = "non_effective_action"


class NotNormalized(QResError):
    code = "not_normalized"


# weighted blow-ups
class BadWeight(QResError):
    code = "bad_weight"


class EmptySupport(QResError):
    code = "empty_support"


# curve resolution
class NonInvariantCurve(QResError):
    code = "non_invariant_curve"


class DegenerateInput(QResError):
    code = "degenerate_input"


class ResolutionLimitExceeded(QResError):
    code = "resolution_limit_exceeded"


# intersection theory
class MalformedGraph(QResError):
    code = "malformed_graph"


class SingularMatrix(QResError):
    code = "singular_matrix"


class SameBranch(QResError):
    code = "same_branch"


class DetachedBranch(QResError):
    code = "detached_branch"


# weighted projective planes
class NonCoprimeWeights(QResError):
    code = "non_coprime_weights"


# jung method
class DivisibilityViolation(QResError):
    code = "divisibility_violation"


class InconsistentData(QResError):
    code = "inconsistent_data"


class BadFraction(QResError):
    code = "bad_fraction"


class IntegralityViolation(QResError):
    code = "integrality_violation"


# cli
class UnsupportedFactorShape(QResError):
    code = "unsupported_factor_shape"
