"""
Jung method: abstract Q-resolution of z^n = f(x, y).
"""
from argparse import Namespace

from qres.cli.dependencies import get_payload, graph_from_payload, parse_model, read_file
from qres.cli.router import CommandRouter, argument
from qres.core.exceptions import InputParseError
from qres.models.graph import DualGraph
from qres.models.jung import SurfaceGerm
from qres.schemas.common import parse_cyclic_type
from qres.schemas.jung import JungRequest
from qres.services.jung_service import jung_service
from qres.services.parser_service import parser_service
from qres.services.resolution_service import resolution_service

router = CommandRouter(tags=["Jung"])


def _germ(args: Namespace) -> SurfaceGerm:
    if args.n is None:
        request = parse_model(JungRequest, get_payload(args))
        return SurfaceGerm(request.n, request.base.to_model())
    if args.n < 1:
        raise InputParseError("--n must be positive")
    if args.curve:
        base = resolution_service.resolve(parser_service.parse_binomial_curve(args.curve, args.ambient))
    elif args.graph:
        base = graph_from_payload(read_file(args.graph))
    else:
        base = graph_from_payload(get_payload(args))
    return SurfaceGerm(args.n, base)


@router.command(
    "jung",
    help="abstract Q-resolution of z^n = f(x,y)",
    arguments=[
        argument("--n", type=int, help="covering degree"),
        argument("--graph", help="embedded Q-resolution of f (JSON file)"),
        argument("--curve", help="equation of f; resolved first"),
        argument("--ambient", type=parse_cyclic_type, help='ambient type "d;a,b"'),
    ],
    reads_input=True,
    graph_output=True,
)
def jung(args: Namespace) -> DualGraph:
    return jung_service.jung_resolution(_germ(args))
