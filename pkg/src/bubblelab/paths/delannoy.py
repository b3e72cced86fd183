"""q-Delannoy paths and their bijections with faces and flags of Γ⁺(m,n).

A face of Γ⁺(m,n) is a noncrossing matching: edges ``{x_s, y_t}`` with
strictly increasing ``s`` and ``t``. Listed in that order, each edge is
drawn through the unit square from ``(s-1, t-1)`` to ``(s, t)``:

- an edge of ``G_0`` as ``N E``, leaving a peak at ``(s-1, t)``;
- an edge first appearing in ``G_k`` as the diagonal ``Dk``.

Gaps between consecutive squares are filled with E steps followed by N
steps, which never create a peak, so peaks and diagonals recover the flag.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable, Sequence
from functools import lru_cache
from itertools import product
from math import comb

from bubblelab.complex import ComplexKind, build_complex
from bubblelab.core.limits import Limits, resolve_limits
from bubblelab.paths.models import (
    EAST,
    NORTH,
    CrossingError,
    DelannoyPath,
    Flag,
    InvalidPathError,
    NotSquareError,
    SchroderKind,
    Step,
    StepKind,
)
from bubblelab.word import Edge, Face, NotAGammaFaceError, Params, format_face

logger = logging.getLogger(__name__)


# -- Enumeration and counting -------------------------------------------------


def _check_caps(m: int, n: int, q: int, limits: Limits | None) -> None:
    caps = resolve_limits(limits)
    caps.check("max_r_paths", m + n)
    caps.check("max_colors", q)


def enumerate_delannoy(
    m: int, n: int, q: int, limits: Limits | None = None
) -> list[DelannoyPath]:
    """All q-Delannoy paths to ``(m, n)``, ordered by steps ``E < N < D1 < … < Dq``.

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_paths`` or ``q`` exceeds ``max_colors``.
        ValueError: If a coordinate or ``q`` is negative.
    """
    if min(m, n, q) < 0:
        raise ValueError(f"coordinates and colors must be non-negative, got ({m}, {n}, {q})")
    _check_caps(m, n, q, limits)
    start = time.perf_counter()
    paths = [DelannoyPath(m, n, q, steps) for steps in _step_sequences(m, n, q)]
    elapsed = time.perf_counter() - start
    logger.info(
        "Enumerated %d %d-Delannoy paths to (%d,%d) in %.2fs", len(paths), q, m, n, elapsed
    )
    return paths


@lru_cache(maxsize=128)
def _step_sequences(m: int, n: int, q: int) -> tuple[tuple[Step, ...], ...]:
    if m == 0 and n == 0:
        return ((),)
    found: list[tuple[Step, ...]] = []
    if m > 0:
        found.extend((EAST, *rest) for rest in _step_sequences(m - 1, n, q))
    if n > 0:
        found.extend((NORTH, *rest) for rest in _step_sequences(m, n - 1, q))
    if m > 0 and n > 0:
        for color in range(1, q + 1):
            diagonal = Step(StepKind.D, color)
            found.extend((diagonal, *rest) for rest in _step_sequences(m - 1, n - 1, q))
    return tuple(found)


def count_closed(m: int, n: int, q: int) -> int:
    """``Σ_a C(m,a) C(n,a) (q+1)^a``, the number of q-Delannoy paths to ``(m, n)``.

    Example:
        >>> count_closed(2, 2, 2)
        22
    """
    return sum(comb(m, a) * comb(n, a) * (q + 1) ** a for a in range(min(m, n) + 1))


def narayana(n: int, k: int) -> int:
    """``C(n,k) C(n,k+1) / n``: paths to ``(n, n)`` weakly below the diagonal with ``k`` peaks."""
    if n == 0:
        return 1 if k == 0 else 0
    return comb(n, k) * comb(n, k + 1) // n


# -- Serialization ------------------------------------------------------------


def format_path(path: DelannoyPath) -> str:
    """``"E D2 N"``; the empty path is ``"-"``."""
    return str(path)


def parse_path(text: str, m: int, n: int, q: int) -> DelannoyPath:
    """Inverse of :func:`format_path`.

    Raises:
        InvalidPathError: On an unknown token, a bad color or a wrong endpoint.
    """
    tokens = text.split()
    if tokens == ["-"]:
        tokens = []
    steps: list[Step] = []
    for token in tokens:
        if token in ("E", "N"):
            steps.append(Step(StepKind(token)))
        elif token.startswith("D") and token[1:].isdigit() and int(token[1:]) >= 1:
            steps.append(Step(StepKind.D, int(token[1:])))
        else:
            raise InvalidPathError(text, f"unknown step {token!r}")
    return DelannoyPath(m, n, q, tuple(steps))


# -- Faces and flags of Γ⁺ ----------------------------------------------------


def matching_edges(face: Face, p: Params) -> list[Edge]:
    """Edges of a Γ⁺(m,n) face sorted by letter index.

    Raises:
        NotAGammaFaceError: If the face contains a loop or an out-of-range edge.
        CrossingError: If two edges cross or share a letter.
    """
    edges: list[Edge] = []
    for vertex in face:
        if not isinstance(vertex, Edge):
            raise NotAGammaFaceError(format_face(face), f"{vertex} is not an edge")
        if not (1 <= vertex.x <= p.m and 1 <= vertex.y <= p.n):
            raise NotAGammaFaceError(format_face(face), f"edge {vertex} out of range")
        edges.append(vertex)
    edges.sort(key=lambda e: (e.x, e.y))
    for before, after in zip(edges, edges[1:], strict=False):
        if not (before.x < after.x and before.y < after.y):
            raise CrossingError(before, after)
    return edges


def _draw(p: Params, edges: Sequence[Edge], levels: Sequence[int]) -> tuple[Step, ...]:
    steps: list[Step] = []
    x, y = 0, 0
    for edge, level in zip(edges, levels, strict=True):
        steps += [EAST] * (edge.x - 1 - x) + [NORTH] * (edge.y - 1 - y)
        steps += [NORTH, EAST] if level == 0 else [Step(StepKind.D, level)]
        x, y = edge.x, edge.y
    steps += [EAST] * (p.m - x) + [NORTH] * (p.n - y)
    return tuple(steps)


def face_to_path(face: Face, p: Params) -> DelannoyPath:
    """The 0-Delannoy path whose peaks ``(s-1, t)`` are the edges ``{x_s, y_t}``.

    Raises:
        NotAGammaFaceError: If the face is not a face of Γ⁺(m,n).
        CrossingError: If two edges cross or share a letter.
    """
    edges = matching_edges(face, p)
    return DelannoyPath(p.m, p.n, 0, _draw(p, edges, [0] * len(edges)))


def path_to_face(path: DelannoyPath) -> Face:
    """Edges ``{x_{i+1}, y_j}`` for the peaks ``(i, j)`` of a 0-Delannoy path.

    Raises:
        InvalidPathError: If the path has diagonal steps.
    """
    if path.diagonals():
        raise InvalidPathError(str(path), "diagonal steps have no face counterpart")
    return frozenset(Edge(i + 1, j) for i, j in path.peaks())


def flag_to_path(flag: Flag, p: Params) -> DelannoyPath:
    """The q-Delannoy path drawing ``G_0`` as peaks and ``G_k \\ G_{k-1}`` as color ``k``.

    Raises:
        NotAGammaFaceError: If the top face is not a face of Γ⁺(m,n).
        CrossingError: If two edges of the top face cross or share a letter.
    """
    edges = matching_edges(flag.chain[-1], p)
    levels = [flag.level(edge) for edge in edges]
    return DelannoyPath(p.m, p.n, flag.q, _draw(p, edges, levels))


def path_to_flag(path: DelannoyPath) -> Flag:
    """Inverse of :func:`flag_to_path`.

    Raises:
        CrossingError: If the recovered edges are not a matching (not possible
            for paths built by this module).
    """
    levels = {Edge(i + 1, j): 0 for i, j in path.peaks()}
    levels.update({Edge(s, t): color for s, t, color in path.diagonals()})
    matching_edges(frozenset(levels), Params(path.m, path.n))
    chain = tuple(
        frozenset(edge for edge, level in levels.items() if level <= k)
        for k in range(path.q + 1)
    )
    return Flag(chain)


def enumerate_flags(p: Params, q: int, limits: Limits | None = None) -> list[Flag]:
    """All ``(q+1)``-flags of Γ⁺(m,n), grouped by top face.

    Raises:
        ResourceCapError: If a cap on paths, colors or Γ⁺ is exceeded.
    """
    _check_caps(p.m, p.n, q, limits)
    positive = build_complex(ComplexKind.GAMMA_PLUS, p, limits)
    flags: list[Flag] = []
    for face in sorted(positive.iter_faces(), key=lambda f: sorted((e.x, e.y) for e in f)):
        edges = matching_edges(face, p)
        for levels in product(range(q + 1), repeat=len(edges)):
            flags.append(
                Flag(
                    tuple(
                        frozenset(e for e, level in zip(edges, levels, strict=True) if level <= k)
                        for k in range(q + 1)
                    )
                )
            )
    return flags


# -- Schröder paths -----------------------------------------------------------


def is_schroder(path: DelannoyPath, kind: SchroderKind = SchroderKind.SCHRODER) -> bool:
    """Weakly below the diagonal; little Schröder paths also avoid diagonal steps on it."""
    if any(i < j for i, j in path.peaks()):
        return False
    if kind is SchroderKind.LITTLE:
        return all(s > t for s, t, _ in path.diagonals())
    return all(s >= t for s, t, _ in path.diagonals())


def schroder_filter(
    paths: Iterable[DelannoyPath], kind: SchroderKind = SchroderKind.SCHRODER
) -> list[DelannoyPath]:
    """Keep the (little) q-Schröder paths, in input order.

    Raises:
        NotSquareError: If a path does not end on the diagonal.
    """
    kept: list[DelannoyPath] = []
    for path in paths:
        if path.m != path.n:
            raise NotSquareError(path.m, path.n)
        if is_schroder(path, kind):
            kept.append(path)
    return kept
