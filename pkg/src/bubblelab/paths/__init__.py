"""Colored Delannoy and Schröder paths, with bijections to faces and flags of Γ⁺(m,n).

Paths are written as space-separated steps ``E``, ``N`` and ``D1 … Dq``
(``"E D2 N"``); the empty path is ``"-"``.
"""

from bubblelab.paths.delannoy import (
    count_closed,
    enumerate_delannoy,
    enumerate_flags,
    face_to_path,
    flag_to_path,
    format_path,
    is_schroder,
    matching_edges,
    narayana,
    parse_path,
    path_to_face,
    path_to_flag,
    schroder_filter,
)
from bubblelab.paths.models import (
    CrossingError,
    DelannoyPath,
    Flag,
    InvalidPathError,
    NotSquareError,
    SchroderKind,
    Step,
    StepKind,
)

__all__ = [
    "CrossingError",
    "DelannoyPath",
    "Flag",
    "InvalidPathError",
    "NotSquareError",
    "SchroderKind",
    "Step",
    "StepKind",
    "count_closed",
    "enumerate_delannoy",
    "enumerate_flags",
    "face_to_path",
    "flag_to_path",
    "format_path",
    "is_schroder",
    "matching_edges",
    "narayana",
    "parse_path",
    "path_to_face",
    "path_to_flag",
    "schroder_filter",
]
