"""Exact polynomials for the H-, F- and M-triangles and the identities between them.

Example:
    >>> from bubblelab.word import Params
    >>> str(h_triangle(Params(2, 1)))
    'q^3*t^3 + 3*q^2*t^2 + 2*q^2*t + 3*q*t + 2*q + 1'
"""

from bubblelab.triangle.identities import (
    IDENTITY_NAMES,
    compare_on_grid,
    grid,
    identity,
    reports_to_json,
    resolve_identity_names,
    verify_all,
    verify_identity,
)
from bubblelab.triangle.models import (
    IdentityReport,
    IdentityStatus,
    Rat,
    TriangleMode,
    UnknownIdentityError,
    VariableMismatchError,
    Witness,
)
from bubblelab.triangle.poly import MultiPoly, poly_sum
from bubblelab.triangle.triangles import (
    bw_from_tables,
    bw_triangles,
    char_closed,
    char_poly,
    collapse_loop_variables,
    extended_triangles,
    extended_variables,
    f_closed,
    f_triangle,
    face_polynomial,
    gamma_bw_closed,
    h_closed,
    h_triangle,
    hochschild_f_triangle,
    m_closed,
    m_triangle,
    rank_generating,
)

__all__ = [
    "IDENTITY_NAMES",
    "IdentityReport",
    "IdentityStatus",
    "MultiPoly",
    "Rat",
    "TriangleMode",
    "UnknownIdentityError",
    "VariableMismatchError",
    "Witness",
    "bw_from_tables",
    "bw_triangles",
    "char_closed",
    "char_poly",
    "collapse_loop_variables",
    "compare_on_grid",
    "extended_triangles",
    "extended_variables",
    "f_closed",
    "f_triangle",
    "face_polynomial",
    "gamma_bw_closed",
    "grid",
    "h_closed",
    "h_triangle",
    "hochschild_f_triangle",
    "identity",
    "m_closed",
    "m_triangle",
    "poly_sum",
    "rank_generating",
    "reports_to_json",
    "resolve_identity_names",
    "verify_all",
    "verify_identity",
]
