"""
Input loading shared by the commands: JSON payloads from --file or stdin,
graphs from --graph and curves from --curve.
"""
import json
import logging
import sys
from argparse import Namespace
from typing import Any, Optional

from pydantic import ValidationError

from qres.core.exceptions import InputParseError
from qres.models.branch import CurveGerm
from qres.models.graph import DualGraph
from qres.models.quotient import CyclicType
from qres.schemas.common import CyclicTypeSchema
from qres.schemas.curve import CurveGermSchema, MonomialCurveInput
from qres.schemas.graph import DualGraphSchema
from qres.services.parser_service import parser_service

logger = logging.getLogger(__name__)


def _load_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputParseError(f"invalid JSON in {source}: {exc}")


def read_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as handle:
            return _load_json(handle.read(), path)
    except OSError as exc:
        raise InputParseError(f"cannot read {path}: {exc.strerror}")


def get_payload(args: Namespace) -> Any:
    """JSON from --file, else from stdin."""
    if getattr(args, "file", None):
        return read_file(args.file)
    if sys.stdin is None or sys.stdin.isatty():
        raise InputParseError("no input: pass flags, --file PATH or JSON on stdin")
    logger.debug("reading JSON from stdin")
    return _load_json(sys.stdin.read(), "stdin")


def parse_type(value: Any) -> CyclicType:
    """A type from {"d","a","b"}, [d, a, b] or "d;a,b"."""
    try:
        return CyclicTypeSchema.validate(value).to_model()
    except (ValidationError, ValueError, TypeError) as exc:
        raise InputParseError(f"invalid type {value!r}: {exc}")


def parse_model(schema, payload: Any):
    try:
        return schema.parse_obj(payload)
    except ValidationError as exc:
        raise InputParseError(f"invalid {schema.__name__}: {exc}")


def graph_from_payload(payload: Any) -> DualGraph:
    return parse_model(DualGraphSchema, payload).to_model()


def get_graph(args: Namespace) -> DualGraph:
    """Graph from --graph PATH, else from the JSON payload."""
    if getattr(args, "graph", None):
        return graph_from_payload(read_file(args.graph))
    return graph_from_payload(get_payload(args))


def germ_from_payload(payload: Any) -> CurveGerm:
    """A germ from CurveGerm JSON, monomial factors or {"curve": text, "ambient": type}."""
    if not isinstance(payload, dict):
        raise InputParseError("expected a JSON object describing a curve")
    if "branches" in payload:
        return parse_model(CurveGermSchema, payload).to_model()
    if "factors" in payload:
        data = parse_model(MonomialCurveInput, payload)
        return parser_service.parse_monomial_factors(data.factor_terms(), data.ambient_type())
    if "curve" in payload:
        ambient = payload.get("ambient")
        t = parse_type(ambient) if ambient is not None else None
        return parser_service.parse_binomial_curve(str(payload["curve"]), t)
    raise InputParseError("a curve needs 'branches', 'factors' or 'curve'")


def get_germ(args: Namespace, ambient=None) -> CurveGerm:
    if getattr(args, "curve", None):
        return parser_service.parse_binomial_curve(args.curve, ambient)
    return germ_from_payload(get_payload(args))
