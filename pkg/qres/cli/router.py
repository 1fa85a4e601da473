"""
Command routers: each commands module declares its subcommands on a router and
main includes them, the way HTTP routers are included in an application.
"""
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Sequence, Tuple

Argument = Tuple[Tuple[str, ...], Dict[str, Any]]


def argument(*flags: str, **kwargs: Any) -> Argument:
    """Arguments of ``ArgumentParser.add_argument``, kept for later registration."""
    return flags, kwargs


@dataclass
class Command:
    name: str
    help: str
    handler: Callable
    arguments: Sequence[Argument] = ()
    reads_input: bool = False
    graph_output: bool = False


@dataclass
class CommandRouter:
    tags: List[str] = field(default_factory=list)
    commands: List[Command] = field(default_factory=list)

    def command(
        self,
        name: str,
        help: str,
        arguments: Sequence[Argument] = (),
        reads_input: bool = False,
        graph_output: bool = False,
    ):
        """Register the decorated function as subcommand ``name``."""
        def decorator(func: Callable) -> Callable:
            self.commands.append(Command(name, help, func, tuple(arguments), reads_input, graph_output))
            return func
        return decorator
