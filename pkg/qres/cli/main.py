"""
qres command-line entry point.

Every command prints JSON on stdout (DOT with --dot for graph results); logs go
to stderr. Exit codes: 0 success, 1 domain error, 2 input error.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from qres.cli.commands import curves, jung, projective, quotient
from qres.cli.router import CommandRouter
from qres.core.config import settings
from qres.core.exceptions import InputParseError, QResError
from qres.core.logging import configure_logging
from qres.models.graph import DualGraph
from qres.schemas.graph import DualGraphSchema
from qres.services.dot_service import dot_service

logger = logging.getLogger("qres.cli")

ROUTERS = (quotient.router, curves.router, projective.router, jung.router)


def include_router(subparsers, router: CommandRouter) -> None:
    for command in router.commands:
        parser = subparsers.add_parser(command.name, help=command.help, description=command.handler.__doc__)
        for flags, kwargs in command.arguments:
            parser.add_argument(*flags, **kwargs)
        if command.reads_input:
            parser.add_argument("--file", help="read the JSON input from this file instead of stdin")
        if command.graph_output:
            parser.add_argument("--dot", action="store_true", help="print the graph in DOT format")
        parser.set_defaults(command=command)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qres",
        description="Exact Q-resolutions of plane curve and cyclic surface singularities.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--indent", type=int, default=None, help="indent JSON output")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="name", metavar="COMMAND", required=True)
    for router in ROUTERS:
        include_router(subparsers, router)
    return parser


def render(result, args: argparse.Namespace) -> str:
    indent = args.indent if args.indent is not None else settings.JSON_INDENT
    if isinstance(result, DualGraph):
        if getattr(args, "dot", False):
            return dot_service.render(result)
        result = DualGraphSchema.from_model(result)
    if isinstance(result, BaseModel):
        return result.json(indent=indent, exclude_none=True)
    return json.dumps(result, indent=indent)


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run one command and write its output; returns the exit code."""
    args = build_parser().parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None)
    logger.info("🚀 Starting %s v%s (%s)", settings.APP_NAME, settings.APP_VERSION, settings.ENVIRONMENT)

    try:
        result = args.command.handler(args)
        output = render(result, args)
    except ValidationError as exc:
        error = InputParseError(str(exc))
    except QResError as exc:
        error = exc
    else:
        sys.stdout.write(output + "\n")
        logger.info("✅ %s done", args.name)
        return 0

    logger.error("❌ %s failed: %s", args.name, error.detail)
    sys.stdout.write(json.dumps(error.to_dict()) + "\n")
    return error.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
