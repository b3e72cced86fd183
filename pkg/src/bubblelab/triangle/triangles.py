"""H-, F-, M-triangles, their extended and Björner–Wachs variants, and closed forms.

Definitional computations read the combinatorial data directly:

- H: bubble in-degrees, ``Σ_u q^{in(u)} t^{in_indel(u)}``;
- F: faces of Δ(m,n) split into edges and loops, ``Σ_σ q^{#edges} t^{#loops}``;
- M: Möbius function of the shuffle lattice, ``Σ_{u≤v} μ(u,v) q^{rk u} t^{rk v}``;
- ch̃: ``Σ_v μ(0̂,v) q^{rk v}``.

Closed forms are sums over ``a`` of ``C(m,a) C(n,a)`` times a product of powers.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from collections.abc import Callable
from functools import lru_cache
from math import comb

from bubblelab.complex import ComplexKind, SimplicialComplex, build_complex
from bubblelab.core.limits import Limits, resolve_limits
from bubblelab.poset import mobius, shuffle_poset
from bubblelab.triangle.models import TriangleMode
from bubblelab.triangle.poly import MultiPoly
from bubblelab.word import (
    Loop,
    Params,
    downward_labels,
    enumerate_words,
    in_degrees,
    shuf_rank,
)

logger = logging.getLogger(__name__)

QT = ("q", "t")
Q = ("q",)


def _q() -> MultiPoly:
    return MultiPoly.variable("q", QT)


def _t() -> MultiPoly:
    return MultiPoly.variable("t", QT)


def _closed_sum(
    p: Params, summand: Callable[[int], MultiPoly], variables: tuple[str, ...]
) -> MultiPoly:
    total = MultiPoly.zero(variables)
    for a in range(min(p.m, p.n) + 1):
        total = total + comb(p.m, a) * comb(p.n, a) * summand(a)
    return total.with_variables(variables)


def _timed(label: str, p: Params, build: Callable[[], MultiPoly]) -> MultiPoly:
    start = time.perf_counter()
    poly = build()
    elapsed = time.perf_counter() - start
    logger.info("Computed %s(%d,%d) in %.2fs", label, p.m, p.n, elapsed)
    return poly


# -- H-triangle ---------------------------------------------------------------


def h_triangle(
    p: Params, mode: TriangleMode = TriangleMode.DEFINITIONAL, limits: Limits | None = None
) -> MultiPoly:
    """H-triangle of Bub(m,n) in ``q, t``.

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_words`` (definitional mode).

    Example:
        >>> str(h_triangle(Params(1, 1)))
        'q^2*t^2 + 2*q*t + q + 1'
    """
    if mode is TriangleMode.CLOSED:
        return h_closed(p)
    resolve_limits(limits).check("max_r_words", p.r)
    return _h_definitional(p)


@lru_cache(maxsize=64)
def _h_definitional(p: Params) -> MultiPoly:
    def build() -> MultiPoly:
        counts: Counter[tuple[int, int]] = Counter()
        for w in enumerate_words(p, Limits.unbounded()):
            swaps, indels = in_degrees(w)
            counts[(swaps + indels, indels)] += 1
        return MultiPoly.from_terms(QT, counts)

    return _timed("H", p, build)


def h_closed(p: Params) -> MultiPoly:
    """``Σ_a C(m,a) C(n,a) q^a (qt+1)^{m+n-2a}``."""
    q, t = _q(), _t()
    return _closed_sum(p, lambda a: q**a * (q * t + 1) ** (p.r - 2 * a), QT)


# -- F-triangle ---------------------------------------------------------------


def f_triangle(
    p: Params, mode: TriangleMode = TriangleMode.DEFINITIONAL, limits: Limits | None = None
) -> MultiPoly:
    """F-triangle of Δ(m,n) in ``q, t``: edges counted by ``q``, loops by ``t``.

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_delta`` (definitional mode).
    """
    if mode is TriangleMode.CLOSED:
        return f_closed(p)
    resolve_limits(limits).check("max_r_delta", p.r)
    return _f_definitional(p)


def _loop_mask(complex_: SimplicialComplex) -> int:
    return sum(1 << i for i, v in enumerate(complex_.vertices) if isinstance(v, Loop))


@lru_cache(maxsize=64)
def _f_definitional(p: Params) -> MultiPoly:
    def build() -> MultiPoly:
        delta = build_complex(ComplexKind.DELTA, p, Limits.unbounded())
        loops = _loop_mask(delta)
        counts: Counter[tuple[int, int]] = Counter()
        for mask in delta.iter_face_masks():
            looped = (mask & loops).bit_count()
            counts[(mask.bit_count() - looped, looped)] += 1
        return MultiPoly.from_terms(QT, counts)

    return _timed("F", p, build)


def f_closed(p: Params) -> MultiPoly:
    """``Σ_a C(m,a) C(n,a) q^a (q+1)^a (q+t+1)^{m+n-2a}``."""
    q, t = _q(), _t()
    return _closed_sum(p, lambda a: q**a * (q + 1) ** a * (q + t + 1) ** (p.r - 2 * a), QT)


def hochschild_f_triangle(m: int) -> MultiPoly:
    """``(q+t+1)^{m-1} ((m+1) q^2 + 2qt + (m+2) q + (t+1)^2)``, equal to ``F_{m,1}``.

    Raises:
        ValueError: If ``m < 1``.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    q, t = _q(), _t()
    return (q + t + 1) ** (m - 1) * ((m + 1) * q**2 + 2 * q * t + (m + 2) * q + (t + 1) ** 2)


# -- Extended triangles -------------------------------------------------------


def extended_variables(p: Params) -> tuple[str, ...]:
    """``q`` followed by one ``t_z`` per letter: ``t_x1 … t_xm, t_y1 … t_yn``."""
    xs = [f"t_x{s}" for s in range(1, p.m + 1)]
    ys = [f"t_y{t}" for t in range(1, p.n + 1)]
    return ("q", *xs, *ys)


def _loop_variable(loop: Loop) -> str:
    return f"t_{loop.letter}"


def extended_triangles(p: Params, limits: Limits | None = None) -> tuple[MultiPoly, MultiPoly]:
    """``(F̃, H̃)`` with one loop variable ``t_z`` per letter.

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_extended``.
    """
    resolve_limits(limits).check("max_r_extended", p.r)
    return _extended(p)


@lru_cache(maxsize=32)
def _extended(p: Params) -> tuple[MultiPoly, MultiPoly]:
    names = extended_variables(p)
    position = {name: i for i, name in enumerate(names)}

    def monomial(edges: int, loops: list[Loop]) -> tuple[int, ...]:
        exps = [0] * len(names)
        exps[0] = edges
        for loop in loops:
            exps[position[_loop_variable(loop)]] += 1
        return tuple(exps)

    def build_f() -> MultiPoly:
        delta = build_complex(ComplexKind.DELTA, p, Limits.unbounded())
        loop_bits = _loop_mask(delta)
        counts: Counter[tuple[int, ...]] = Counter()
        for mask in delta.iter_face_masks():
            face = delta.face_of(mask & loop_bits)
            loops = [v for v in face if isinstance(v, Loop)]
            counts[monomial(mask.bit_count() - len(loops), loops)] += 1
        return MultiPoly.from_terms(names, counts)

    def build_h() -> MultiPoly:
        counts: Counter[tuple[int, ...]] = Counter()
        for w in enumerate_words(p, Limits.unbounded()):
            labels = downward_labels(w)
            loops = [v for v in labels if isinstance(v, Loop)]
            exps = list(monomial(0, loops))
            exps[0] = len(labels)
            counts[tuple(exps)] += 1
        return MultiPoly.from_terms(names, counts)

    return _timed("F~", p, build_f), _timed("H~", p, build_h)


def collapse_loop_variables(poly: MultiPoly, p: Params) -> MultiPoly:
    """Set every ``t_z`` equal to ``t`` and return a polynomial in ``q, t``."""
    t = MultiPoly.variable("t", QT)
    loops = extended_variables(p)[1:]
    return poly.with_variables((*QT, *loops)).substitute(dict.fromkeys(loops, t)).with_variables(
        QT
    )


# -- Björner–Wachs triangles ---------------------------------------------------


def bw_triangles(complex_: SimplicialComplex) -> tuple[MultiPoly, MultiPoly]:
    """``(F^BW, H^BW)``: ``Σ_F q^{δ(F)} t^{δ(F)-|F|}`` and its value at ``t - 1``."""
    tables = complex_.bw_tables()
    f_bw = MultiPoly.from_terms(
        QT, {(i, i - j): count for (i, j), count in tables.f.items()}
    )
    h_bw = f_bw.substitute({"t": _t() - 1})
    return f_bw, h_bw


def bw_from_tables(complex_: SimplicialComplex) -> MultiPoly:
    """``Σ h_{i,j} q^i t^{i-j}`` read straight from the h-table."""
    tables = complex_.bw_tables()
    return MultiPoly.from_terms(QT, {(i, i - j): value for (i, j), value in tables.h.items()})


def gamma_bw_closed(p: Params, limits: Limits | None = None) -> MultiPoly:
    """``F^BW`` of Γ(m,n) from the H-triangle: ``q^{m+n} H(1/q, qt)``, expanded exactly.

    Each term ``q^{i} t^{j}`` of H becomes ``q^{m+n-i+j} t^{j}``.
    """
    h = h_triangle(p, TriangleMode.DEFINITIONAL, limits)
    return MultiPoly.from_terms(
        QT, {(p.r - i + j, j): c for (i, j), c in h.as_dict().items()}
    )


# -- M-triangle and characteristic polynomial ---------------------------------


def m_triangle(
    p: Params, mode: TriangleMode = TriangleMode.DEFINITIONAL, limits: Limits | None = None
) -> MultiPoly:
    """M-triangle of Shuf(m,n); the closed mode is the conjectured formula.

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_poset`` (definitional mode).
    """
    if mode is TriangleMode.CLOSED:
        return m_closed(p)
    resolve_limits(limits).check("max_r_poset", p.r)
    return _m_definitional(p)


@lru_cache(maxsize=32)
def _m_definitional(p: Params) -> MultiPoly:
    def build() -> MultiPoly:
        poset = shuffle_poset(p, Limits.unbounded())
        ranks = [shuf_rank(w) for w in poset.elements]
        counts: Counter[tuple[int, int]] = Counter()
        for (u, v), value in mobius(poset).items():
            counts[(ranks[u], ranks[v])] += value
        return MultiPoly.from_terms(QT, counts)

    return _timed("M", p, build)


def m_closed(p: Params) -> MultiPoly:
    """``Σ_a C(m,a) C(n,a) t^a (1-t)^a (q-1)^a (qt-t+1)^{m+n-2a}``."""
    q, t = _q(), _t()
    return _closed_sum(
        p,
        lambda a: t**a * (1 - t) ** a * (q - 1) ** a * (q * t - t + 1) ** (p.r - 2 * a),
        QT,
    )


def char_poly(
    p: Params, mode: TriangleMode = TriangleMode.DEFINITIONAL, limits: Limits | None = None
) -> MultiPoly:
    """Reversed characteristic polynomial ``Σ_v μ(0̂, v) q^{rk v}`` of Shuf(m,n).

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_poset`` (definitional mode).
    """
    if mode is TriangleMode.CLOSED:
        return char_closed(p)
    resolve_limits(limits).check("max_r_poset", p.r)
    return _char_definitional(p)


@lru_cache(maxsize=32)
def _char_definitional(p: Params) -> MultiPoly:
    def build() -> MultiPoly:
        poset = shuffle_poset(p, Limits.unbounded())
        (bottom,) = poset.minimal()
        values = mobius(poset)
        counts: Counter[tuple[int]] = Counter()
        for v, word in enumerate(poset.elements):
            counts[(shuf_rank(word),)] += values[bottom, v]
        return MultiPoly.from_terms(Q, counts)

    return _timed("char", p, build)


def char_closed(p: Params) -> MultiPoly:
    """``Σ_a C(m,a) C(n,a) (-q)^a (1-q)^{m+n-a}``."""
    q = MultiPoly.variable("q")
    return _closed_sum(p, lambda a: (-q) ** a * (1 - q) ** (p.r - a), Q)


def rank_generating(p: Params, limits: Limits | None = None) -> MultiPoly:
    """``Σ_w q^{rk w}`` over Shuf(m,n).

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_words``.
    """
    counts = Counter((shuf_rank(w),) for w in enumerate_words(p, limits))
    return MultiPoly.from_terms(Q, counts)


# -- Face polynomials ----------------------------------------------------------


def face_polynomial(vector: list[int]) -> MultiPoly:
    """``Σ_i v_i q^i`` of an f- or h-vector indexed from 0."""
    return MultiPoly.from_terms(Q, {(i,): value for i, value in enumerate(vector)})
