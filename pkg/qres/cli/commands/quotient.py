"""
Quotient type commands: normalize, blowup, hj.
"""
import logging
from argparse import Namespace

from qres.cli.dependencies import get_payload, parse_model, parse_type
from qres.cli.router import CommandRouter, argument
from qres.core.exceptions import InputParseError
from qres.models.quotient import Weight
from qres.schemas.common import (
    BlowupResultSchema,
    CyclicTypeSchema,
    NormalizeResponse,
    TwoRowTypeSchema,
    parse_cyclic_type,
    parse_int_list,
    parse_two_row_type,
)
from qres.schemas.jung import ChainSchema, ChainStepSchema
from qres.services.blowup_service import blowup_service
from qres.services.jung_service import jung_service
from qres.services.quotient_service import quotient_service

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Quotient"])

TYPE = argument("--type", dest="type", required=True, type=parse_cyclic_type, help='cyclic type "d;a,b"')


@router.command(
    "normalize",
    help="normalize a cyclic or two-row quotient type",
    arguments=[
        argument("--type", dest="type", type=parse_cyclic_type, help='cyclic type "d;a,b"'),
        argument("--two-row", dest="two_row", type=parse_two_row_type, help='two-row type "d1,d2;a,b;c,e"'),
    ],
    reads_input=True,
)
def normalize(args: Namespace) -> NormalizeResponse:
    """
    Remove the reflections of X(d;a,b); prints the type and the exponents of the isomorphism.
    A two-row type is first reduced to a single cyclic action.
    """
    if args.type is not None and args.two_row is not None:
        raise InputParseError("pass either --type or --two-row")
    if args.type is None and args.two_row is None:
        payload = get_payload(args)
        if isinstance(payload, dict) and "A" in payload:
            args.two_row = parse_model(TwoRowTypeSchema, payload).to_model()
        else:
            args.type = parse_type(payload)

    if args.two_row is not None:
        result = quotient_service.reduce_two_row(args.two_row)
        logger.info("two-row %s reduces to %s", args.two_row, result)
        return NormalizeResponse(
            type=CyclicTypeSchema.from_orm(result),
            index=result.d,
            two_row=TwoRowTypeSchema.from_model(args.two_row),
        )

    result, exponents = quotient_service.normalize(args.type)
    return NormalizeResponse(
        type=CyclicTypeSchema.from_orm(result),
        exponents=exponents,
        normalized=quotient_service.is_normalized(args.type),
        index=result.d,
    )


@router.command(
    "blowup",
    help="(p,q)-blow-up of a normalized point",
    arguments=[TYPE, argument("--weight", required=True, type=parse_int_list, help='weight "p,q"')],
)
def blowup(args: Namespace) -> BlowupResultSchema:
    if len(args.weight) != 2:
        raise InputParseError("--weight takes exactly two integers")
    result = blowup_service.blowup(args.type, Weight(*args.weight))
    return BlowupResultSchema.from_model(result)


@router.command("hj", help="Hirzebruch-Jung chain of a cyclic point", arguments=[TYPE])
def hj(args: Namespace) -> ChainSchema:
    """Continued fraction of d/k for the unit form (d;1,k) and the chain -q1, ..., -qn."""
    chain = jung_service.resolve_cyclic_point(args.type)
    determinant = None
    if chain.fraction:
        matrix = jung_service.chain_matrix(chain.fraction).matrix
        determinant = abs(int(matrix.det(method="bareiss")))
    logger.info("chain of %s: %s", args.type, list(chain.chain))
    return ChainSchema(
        type=CyclicTypeSchema.from_orm(chain.point),
        unit_form=CyclicTypeSchema.from_orm(chain.unit_form),
        fraction=list(chain.fraction),
        chain=list(chain.chain),
        steps=[ChainStepSchema.from_orm(step) for step in chain.steps],
        determinant=determinant,
    )
