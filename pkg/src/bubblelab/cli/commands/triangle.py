"""CLI triangle command: print H-, F-, M-triangles and their variants."""

from __future__ import annotations

from collections.abc import Callable
from enum import StrEnum
from typing import Annotated

import typer

from bubblelab.cli.common import (
    EXIT_FAIL,
    ForceOption,
    MOption,
    NOption,
    limits_for,
    params,
    reporting_errors,
)
from bubblelab.complex import ComplexKind, build_complex
from bubblelab.core.limits import Limits
from bubblelab.triangle import (
    MultiPoly,
    TriangleMode,
    bw_triangles,
    char_poly,
    extended_triangles,
    f_triangle,
    gamma_bw_closed,
    h_triangle,
    m_triangle,
)
from bubblelab.word import Params


class TriangleChoice(StrEnum):
    """Polynomials the triangle command can print."""

    H = "h"
    F = "f"
    M = "m"
    CHAR = "char"
    BW_F = "bw-f"
    BW_H = "bw-h"
    EXT_H = "ext-h"
    EXT_F = "ext-f"


Builder = Callable[[Params, TriangleMode, Limits | None], MultiPoly]


def _bw(p: Params, mode: TriangleMode, limits: Limits | None) -> tuple[MultiPoly, MultiPoly]:
    if mode is TriangleMode.CLOSED:
        f_bw = gamma_bw_closed(p, limits)
        return f_bw, f_bw.substitute({"t": MultiPoly.variable("t", f_bw.variables) - 1})
    return bw_triangles(build_complex(ComplexKind.GAMMA, p, limits))


def _extended(p: Params, mode: TriangleMode, limits: Limits | None) -> tuple[MultiPoly, MultiPoly]:
    if mode is TriangleMode.CLOSED:
        raise ValueError("the extended triangles have no closed form")
    return extended_triangles(p, limits)


BUILDERS: dict[TriangleChoice, Builder] = {
    TriangleChoice.H: lambda p, mode, limits: h_triangle(p, mode, limits),
    TriangleChoice.F: lambda p, mode, limits: f_triangle(p, mode, limits),
    TriangleChoice.M: lambda p, mode, limits: m_triangle(p, mode, limits),
    TriangleChoice.CHAR: lambda p, mode, limits: char_poly(p, mode, limits),
    TriangleChoice.BW_F: lambda p, mode, limits: _bw(p, mode, limits)[0],
    TriangleChoice.BW_H: lambda p, mode, limits: _bw(p, mode, limits)[1],
    TriangleChoice.EXT_F: lambda p, mode, limits: _extended(p, mode, limits)[0],
    TriangleChoice.EXT_H: lambda p, mode, limits: _extended(p, mode, limits)[1],
}


def _modes(closed: bool, definitional: bool, both: bool) -> list[TriangleMode]:
    if closed + definitional + both > 1:
        raise typer.BadParameter("use at most one of --closed, --definitional and --both")
    if both:
        return [TriangleMode.DEFINITIONAL, TriangleMode.CLOSED]
    return [TriangleMode.CLOSED] if closed else [TriangleMode.DEFINITIONAL]


def triangle_command(
    m: MOption,
    n: NOption,
    which: Annotated[TriangleChoice, typer.Option("--which", help="Polynomial to print.")],
    closed: Annotated[bool, typer.Option("--closed", help="Use the closed formula.")] = False,
    definitional: Annotated[
        bool, typer.Option("--definitional", help="Compute from the definition (default).")
    ] = False,
    both: Annotated[
        bool, typer.Option("--both", help="Compute both ways and require equality.")
    ] = False,
    force: ForceOption = False,
) -> None:
    """Print a triangle polynomial in graded-lex order.

    With ``--both`` the polynomial is printed once if both computations agree;
    otherwise both are printed and the command exits with code 1.

    Raises:
        typer.Exit: 1 on disagreement, 2 on invalid input, 3 on a resource cap.
    """
    modes = _modes(closed, definitional, both)
    limits = limits_for(force)
    with reporting_errors():
        p = params(m, n)
        polys = [BUILDERS[which](p, mode, limits) for mode in modes]
    first = polys[0]
    if all(poly == first for poly in polys[1:]):
        typer.echo(str(first))
        return
    for mode, poly in zip(modes, polys, strict=True):
        typer.echo(f"{mode.value}: {poly}")
    typer.echo("Error: closed and definitional forms differ", err=True)
    raise typer.Exit(EXIT_FAIL)
