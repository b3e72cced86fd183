"""JSON export of complexes."""

from __future__ import annotations

import orjson

from bubblelab.complex.engine import SimplicialComplex
from bubblelab.word import sorted_face, vertex_key


def complex_payload(complex_: SimplicialComplex) -> dict[str, object]:
    """Plain-data form: kind, alphabet sizes, vertex strings and sorted facets."""
    facets = sorted(
        (sorted_face(facet) for facet in complex_.facets),
        key=lambda face: [vertex_key(v) for v in face],
    )
    params = complex_.params
    return {
        "kind": complex_.kind.value,
        "m": params.m if params is not None else None,
        "n": params.n if params is not None else None,
        "vertices": [str(v) for v in complex_.vertices],
        "facets": [[str(v) for v in facet] for facet in facets],
    }


def complex_to_json(complex_: SimplicialComplex) -> bytes:
    """Serialize a complex as ``{"kind","m","n","vertices","facets"}``."""
    return orjson.dumps(complex_payload(complex_))
