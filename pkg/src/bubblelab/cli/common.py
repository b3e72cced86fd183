"""Options and error handling shared by the bubble commands."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Annotated

import typer

from bubblelab.core.limits import Limits, ResourceCapError
from bubblelab.word import Params

logger = logging.getLogger(__name__)

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

MOption = Annotated[int, typer.Option("--m", min=0, help="Number of x-letters.")]
NOption = Annotated[int, typer.Option("--n", min=0, help="Number of y-letters.")]
JsonOption = Annotated[bool, typer.Option("--json", help="Emit JSON instead of text.")]
ForceOption = Annotated[
    bool, typer.Option("--force", help="Disable resource caps (may exhaust memory).")
]


def limits_for(force: bool) -> Limits | None:
    """Default caps, or no caps at all under ``--force``."""
    if not force:
        return None
    logger.warning("Resource caps disabled by --force")
    return Limits.unbounded()


@contextmanager
def reporting_errors() -> Iterator[None]:
    """Translate library errors into messages on stderr and exit codes.

    Raises:
        typer.Exit: Code 3 for an exceeded resource cap, 2 for invalid input.
    """
    try:
        yield
    except ResourceCapError as e:
        typer.echo(f"Error: {e}. Pass --force to lift the cap.", err=True)
        raise typer.Exit(EXIT_RESOURCE) from e
    except ValueError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(EXIT_USAGE) from e


def params(m: int, n: int) -> Params:
    """Validated alphabet sizes."""
    return Params(m, n)
