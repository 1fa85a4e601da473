"""
Weighted Bezout on P^2_w(d;a,b,c).
"""
from argparse import Namespace

from qres.cli.dependencies import get_payload, parse_model
from qres.cli.router import CommandRouter, argument
from qres.schemas.common import parse_int_list
from qres.schemas.projective import BezoutRequest, BezoutResponse
from qres.services.parser_service import monomials
from qres.services.projective_service import projective_service

router = CommandRouter(tags=["Projective"])


def _request(args: Namespace) -> BezoutRequest:
    if args.w is None:
        return parse_model(BezoutRequest, get_payload(args))
    data = {"w": args.w, "deg1": args.deg1, "deg2": args.deg2, "poly1": args.poly1, "poly2": args.poly2}
    if args.action is not None:
        data["action"] = args.action
    return parse_model(BezoutRequest, data)


@router.command(
    "bezout",
    help="intersection number of two divisors on a weighted projective plane",
    arguments=[
        argument("--w", type=parse_int_list, help='weights "p,q,r"'),
        argument("--action", type=parse_int_list, help='action "d;a,b,c"'),
        argument("--deg1", type=int),
        argument("--deg2", type=int),
        argument("--poly1", help="quasi-homogeneous polynomial in x, y, z"),
        argument("--poly2"),
    ],
    reads_input=True,
)
def bezout(args: Namespace) -> BezoutResponse:
    request = _request(args)
    plane = request.plane()
    degrees = []
    for degree, poly in ((request.deg1, request.poly1), (request.deg2, request.poly2)):
        if degree is None:
            degree = projective_service.weighted_degree(monomials(poly), plane.weights)
        degrees.append(degree)
    value = projective_service.bezout(plane, *degrees)
    return BezoutResponse(
        value=value,
        e=plane.e,
        dpqr=plane.dpqr,
        deg_tau=projective_service.deg_tau(plane),
        degrees=tuple(degrees),
        axes=projective_service.axes_table(plane),
    )
