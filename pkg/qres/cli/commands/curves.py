"""
Curve commands: resolve, intersect, refine.
"""
import logging
from argparse import Namespace

from qres.cli.dependencies import get_germ, get_graph
from qres.cli.router import CommandRouter, argument
from qres.models.branch import CurveGerm
from qres.models.graph import DualGraph
from qres.schemas.common import RationalSchema, parse_cyclic_type
from qres.schemas.intersection import AttachmentSchema, IntersectionResponse, PairingSchema
from qres.services.intersection_service import intersection_service
from qres.services.jung_service import jung_service
from qres.services.resolution_service import resolution_service

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Curves"])

GRAPH = argument("--graph", help="dual graph JSON file (default: --file or stdin)")


@router.command(
    "resolve",
    help="embedded Q-resolution of a plane curve germ",
    arguments=[
        argument("--curve", help='equation, e.g. "(x^2+y^3)(x^3+y^2)"'),
        argument("--ambient", type=parse_cyclic_type, help='ambient type "d;a,b" (default smooth)'),
    ],
    reads_input=True,
    graph_output=True,
)
def resolve(args: Namespace) -> DualGraph:
    germ = get_germ(args, args.ambient)
    if args.ambient is not None and not getattr(args, "curve", None):
        germ = CurveGerm(args.ambient, germ.branches)
    logger.info("resolving %r", germ)
    graph = resolution_service.resolve(germ)
    for problem in resolution_service.invariant_violations(graph):
        logger.warning("resolution graph: %s", problem)
    return graph


@router.command(
    "intersect",
    help="intersection matrix, curvette matrix and branch pairings",
    arguments=[
        GRAPH,
        argument("--pair", nargs=2, type=int, action="append", default=[], metavar=("I", "J"), help="branch pair"),
        argument("--check", action="store_true", help="also print the pull-back orthogonality vectors"),
    ],
    reads_input=True,
)
def intersect(args: Namespace) -> IntersectionResponse:
    graph = get_graph(args)
    a = b = None
    # strict transforms meeting at a point of the ambient need no matrix
    if graph.exceptional:
        a = intersection_service.intersection_matrix(graph)
        b = intersection_service.curvette_matrix(a)

    pairs = [
        PairingSchema(i=i, j=j, value=intersection_service.local_intersection(graph, i, j, b))
        for i, j in args.pair
    ]
    checks = {}
    if args.check and a is not None:
        for attachment in graph.attachments():
            if attachment.k is not None:
                checks[attachment.branch] = intersection_service.pullback_check(graph, attachment.branch)
    return IntersectionResponse(
        ids=list(a.ids) if a is not None else [],
        A=a.rows() if a is not None else [],
        B=b.rows() if b is not None else [],
        negative_definite=intersection_service.check_negative_definite(a) if a is not None else None,
        minors=intersection_service.leading_minors(a) if a is not None else [],
        attachments=[AttachmentSchema.from_orm(att) for att in graph.attachments()],
        pairs=pairs,
        value=pairs[-1].value if pairs else None,
        checks={branch: {k: RationalSchema.validate(v) for k, v in row.items()} for branch, row in checks.items()},
    )


@router.command(
    "refine",
    help="replace every cyclic point by its Hirzebruch-Jung chain",
    arguments=[GRAPH],
    reads_input=True,
    graph_output=True,
)
def refine(args: Namespace) -> DualGraph:
    return jung_service.smooth_refinement(get_graph(args))
