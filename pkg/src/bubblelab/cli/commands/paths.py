"""CLI paths command: count and list colored Delannoy and Schröder paths."""

from __future__ import annotations

from typing import Annotated

import typer

from bubblelab.cli.common import (
    ForceOption,
    MOption,
    NOption,
    limits_for,
    reporting_errors,
)
from bubblelab.paths import SchroderKind, count_closed, enumerate_delannoy, schroder_filter


def paths_command(
    m: MOption,
    n: NOption,
    q: Annotated[int, typer.Option("--q", min=0, help="Number of diagonal colors.")],
    list_paths: Annotated[bool, typer.Option("--list", help="Print every path.")] = False,
    schroder: Annotated[
        bool, typer.Option("--schroder", help="Keep paths weakly below the diagonal.")
    ] = False,
    little: Annotated[
        bool, typer.Option("--little", help="Schröder paths without diagonal steps on it.")
    ] = False,
    force: ForceOption = False,
) -> None:
    """Count q-Delannoy paths to ``(m, n)``, optionally restricted to Schröder paths."""
    if schroder and little:
        raise typer.BadParameter("use at most one of --schroder and --little")
    with reporting_errors():
        paths = enumerate_delannoy(m, n, q, limits_for(force))
        typer.echo(f"delannoy {len(paths)} (closed form {count_closed(m, n, q)})")
        if schroder or little:
            kind = SchroderKind.LITTLE if little else SchroderKind.SCHRODER
            paths = schroder_filter(paths, kind)
            typer.echo(f"{kind.value} {len(paths)}")
    if list_paths:
        for path in paths:
            typer.echo(str(path))
