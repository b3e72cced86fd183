"""CLI verify command: check identities at one ``(m, n)``."""

from __future__ import annotations

from typing import Annotated

import typer

from bubblelab.cli.common import (
    EXIT_FAIL,
    ForceOption,
    JsonOption,
    MOption,
    NOption,
    limits_for,
    params,
    reporting_errors,
)
from bubblelab.triangle import reports_to_json, resolve_identity_names, verify_all


def verify_command(
    m: MOption,
    n: NOption,
    identity: Annotated[
        str, typer.Option("--identity", help="Identity name, comma-separated names, or 'all'.")
    ],
    as_json: JsonOption = False,
    force: ForceOption = False,
) -> None:
    """Check identities and print one ``IDENTITY m n PASS|FAIL [witness]`` line each.

    Raises:
        typer.Exit: 1 if any identity fails, 2 on an unknown name, 3 on a resource cap.
    """
    limits = limits_for(force)
    with reporting_errors():
        names = resolve_identity_names(identity)
        reports = verify_all(params(m, n), names, limits)
    if as_json:
        typer.echo(reports_to_json(reports).decode())
    else:
        for report in reports:
            typer.echo(report.line())
    if not all(report.passed for report in reports):
        raise typer.Exit(EXIT_FAIL)
