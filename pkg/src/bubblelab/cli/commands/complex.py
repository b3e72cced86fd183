"""CLI complex command: facets or f-vector of Γ, Δ and their relatives."""

from __future__ import annotations

from enum import StrEnum
from typing import Annotated

import typer

from bubblelab.cli.common import (
    ForceOption,
    MOption,
    NOption,
    limits_for,
    params,
    reporting_errors,
)
from bubblelab.complex import ComplexKind, build_complex, complex_to_json


class ComplexFormat(StrEnum):
    """Output formats of the complex command."""

    JSON = "json"
    FVECTOR = "fvector"


def complex_command(
    m: MOption,
    n: NOption,
    which: Annotated[
        ComplexKind, typer.Option("--which", help="gamma, gamma+, delta, delta+ or left.")
    ] = ComplexKind.GAMMA,
    out: Annotated[
        ComplexFormat, typer.Option("--out", help="json or fvector.")
    ] = ComplexFormat.FVECTOR,
    force: ForceOption = False,
) -> None:
    """Print a complex as JSON or its f-vector ``f_-1 f_0 …``."""
    with reporting_errors():
        complex_ = build_complex(which, params(m, n), limits_for(force))
        if out is ComplexFormat.JSON:
            typer.echo(complex_to_json(complex_).decode())
        else:
            typer.echo(" ".join(str(count) for count in complex_.f_vector()))
