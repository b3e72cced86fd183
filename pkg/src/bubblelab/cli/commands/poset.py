"""CLI poset command: export the Hasse diagram of Bub(m,n) or Shuf(m,n)."""

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
from bubblelab.poset import WordOrder, to_dot, to_json, word_hasse_graph, word_poset


class PosetFormat(StrEnum):
    """Output formats of the poset command."""

    DOT = "dot"
    JSON = "json"


def poset_command(
    m: MOption,
    n: NOption,
    which: Annotated[WordOrder, typer.Option("--which", help="bub or shuf.")] = WordOrder.BUBBLE,
    out: Annotated[PosetFormat, typer.Option("--out", help="dot or json.")] = PosetFormat.DOT,
    labels: Annotated[
        bool, typer.Option("--labels", help="Label bubble covers with their cover label.")
    ] = False,
    force: ForceOption = False,
) -> None:
    """Print the Hasse diagram of a word lattice."""
    with reporting_errors():
        p = params(m, n)
        poset = word_poset(p, which, limits_for(force))
        graph = word_hasse_graph(poset, which, labels=labels)
    if out is PosetFormat.DOT:
        typer.echo(to_dot(graph), nl=False)
    else:
        typer.echo(to_json(graph, order=which.value, m=p.m, n=p.n).decode())
