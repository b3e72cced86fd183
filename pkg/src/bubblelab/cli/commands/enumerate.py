"""CLI enumerate command: list shuffle words with their statistics."""

from __future__ import annotations

from typing import Any

import orjson
import typer

from bubblelab.cli.common import (
    ForceOption,
    JsonOption,
    MOption,
    NOption,
    limits_for,
    params,
    reporting_errors,
)
from bubblelab.word import (
    Letter,
    ShuffleWord,
    enumerate_words,
    in_degrees,
    interface_residue,
    shuf_rank,
)


def _letters(letters: frozenset[Letter]) -> list[str]:
    return [str(letter) for letter in sorted(letters)]


def word_record(w: ShuffleWord) -> dict[str, Any]:
    """Word, shuffle rank, bubble in-degrees and interface/residue letters."""
    swaps, indels = in_degrees(w)
    interface, residue = interface_residue(w)
    return {
        "word": str(w),
        "rank": shuf_rank(w),
        "in_transposition": swaps,
        "in_indel": indels,
        "interface": _letters(interface),
        "residue": _letters(residue),
    }


def enumerate_command(
    m: MOption,
    n: NOption,
    as_json: JsonOption = False,
    force: ForceOption = False,
) -> None:
    """List every word of Shuf(m,n) in canonical order.

    Each line shows the word, its rank in the shuffle lattice, its bubble
    in-degrees (transpositions, indels) and its interface and residue letters.
    """
    with reporting_errors():
        words = enumerate_words(params(m, n), limits_for(force))
    records = [word_record(w) for w in words]
    if as_json:
        typer.echo(orjson.dumps(records).decode())
        return
    for record in records:
        typer.echo(
            f"{record['word']}\trank={record['rank']}"
            f"\tin=({record['in_transposition']},{record['in_indel']})"
            f"\tinterface={' '.join(record['interface']) or '-'}"
            f"\tresidue={' '.join(record['residue']) or '-'}"
        )
