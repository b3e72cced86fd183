"""Simplicial complexes on loops and edges: Γ(m,n), Δ(m,n) and relatives.

Example:
    >>> from bubblelab.word import Params
    >>> build_complex(ComplexKind.DELTA, Params(1, 1)).f_vector()
    [1, 5, 5]
"""

from bubblelab.complex.constructions import (
    build_complex,
    classify_ridge,
    delta_compatible,
    delta_vertices,
    delta_violation,
    face_to_covering_word,
    gamma_compatible,
    gamma_vertices,
    is_delta_face,
    k_interval,
    loop_link,
    phi,
)
from bubblelab.complex.decomposition import (
    chain_end_matches,
    chain_links_match,
    edge_link_matches,
    shedding_chain,
    shift_vertex,
    validate_witness,
    vertex_decomposition,
)
from bubblelab.complex.engine import SimplicialComplex, flag_complex, join
from bubblelab.complex.export import complex_payload, complex_to_json
from bubblelab.complex.models import (
    BWTables,
    ComplexKind,
    FaceNotInComplexError,
    IntervalMismatchError,
    JoinOverlapError,
    KInterval,
    NotADeltaFaceError,
    NotAFacetPermutationError,
    NotPureError,
    RidgeType,
    ShellingResult,
    StructuralReport,
    VDNode,
)

__all__ = [
    "BWTables",
    "ComplexKind",
    "FaceNotInComplexError",
    "IntervalMismatchError",
    "JoinOverlapError",
    "KInterval",
    "NotADeltaFaceError",
    "NotAFacetPermutationError",
    "NotPureError",
    "RidgeType",
    "ShellingResult",
    "SimplicialComplex",
    "StructuralReport",
    "VDNode",
    "build_complex",
    "chain_end_matches",
    "chain_links_match",
    "classify_ridge",
    "complex_payload",
    "complex_to_json",
    "delta_compatible",
    "delta_vertices",
    "delta_violation",
    "edge_link_matches",
    "face_to_covering_word",
    "flag_complex",
    "gamma_compatible",
    "gamma_vertices",
    "is_delta_face",
    "join",
    "k_interval",
    "loop_link",
    "phi",
    "shedding_chain",
    "shift_vertex",
    "validate_witness",
    "vertex_decomposition",
]
