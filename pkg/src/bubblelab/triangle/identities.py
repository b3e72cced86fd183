"""Registered identities between triangle polynomials, checked by exact evaluation.

Identities that involve rational substitutions are decided by evaluating both
sides with exact rationals on an integer grid ``{2, …, 3(m+n)+5}`` per variable.
After clearing the denominators ``q``, ``q+1``, ``q-1`` and ``1-t``, every side
has degree at most ``3(m+n)`` in each variable, so agreement on the grid is
agreement as rational functions. Points where a denominator vanishes are skipped.

Identities between polynomials are compared coefficientwise; the grid is only
searched for a witness after a mismatch.

Usage:
    >>> report = verify_identity("fh", Params(2, 1))
    >>> report.line()
    'fh 2 1 PASS'
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction
from itertools import product
from math import comb

import orjson

from bubblelab.complex import ComplexKind, build_complex
from bubblelab.core.limits import Limits, resolve_limits
from bubblelab.poset import mobius, shuffle_poset
from bubblelab.triangle.models import (
    IdentityReport,
    IdentityStatus,
    Rat,
    UnknownIdentityError,
    Witness,
)
from bubblelab.triangle.poly import MultiPoly
from bubblelab.triangle.triangles import (
    bw_triangles,
    char_closed,
    char_poly,
    extended_triangles,
    extended_variables,
    f_closed,
    f_triangle,
    face_polynomial,
    gamma_bw_closed,
    h_closed,
    h_triangle,
    m_closed,
    m_triangle,
    rank_generating,
)
from bubblelab.word import Params, bottom_word, top_word

logger = logging.getLogger(__name__)

Point = dict[str, Rat]
Side = Callable[[Point], Rat]
IdentityCheck = Callable[[Params, Limits], Witness | None]

_REGISTRY: dict[str, IdentityCheck] = {}

EXTENDED_LOOP_VALUES = (2, 3)


def identity(name: str) -> Callable[[IdentityCheck], IdentityCheck]:
    """Register ``check`` under ``name``; it returns a witness on failure, else None."""

    def register(check: IdentityCheck) -> IdentityCheck:
        if name in _REGISTRY:
            raise ValueError(f"identity {name} registered twice")
        _REGISTRY[name] = check
        return check

    return register


# -- Grid evaluation ----------------------------------------------------------


def grid(p: Params) -> range:
    """Integer values ``2 … 3(m+n)+5`` tried for each variable."""
    return range(2, 3 * p.r + 6)


def compare_on_grid(
    variables: Sequence[str], axes: Sequence[Iterable[int]], lhs: Side, rhs: Side
) -> Witness | None:
    """First grid point where the sides differ, skipping vanishing denominators."""
    for values in product(*axes):
        point = {name: Fraction(value) for name, value in zip(variables, values, strict=True)}
        try:
            left, right = lhs(point), rhs(point)
        except ZeroDivisionError:
            continue
        if left != right:
            return Witness(point, left, right)
    return None


def _bivariate(p: Params, lhs: Side, rhs: Side) -> Witness | None:
    return compare_on_grid(("q", "t"), (grid(p), grid(p)), lhs, rhs)


def _univariate(p: Params, lhs: Side, rhs: Side) -> Witness | None:
    return compare_on_grid(("q",), (grid(p),), lhs, rhs)


def compare_polys(p: Params, lhs: MultiPoly, rhs: MultiPoly) -> Witness | None:
    """Coefficientwise comparison, with a grid witness when the polynomials differ."""
    if lhs == rhs:
        return None
    difference = lhs - rhs
    used = set(lhs.used_variables()) | set(rhs.used_variables())
    names = [name for name in difference.variables if name in used]
    witness = compare_on_grid(names, [grid(p)] * len(names), lhs.evaluate, rhs.evaluate)
    if witness is not None:
        return witness
    # Degree above the grid size: report the leading differing coefficient instead.
    (exps, _), *_ = difference.terms()
    monomial = dict(zip(difference.variables, exps, strict=True))
    return Witness(
        {name: Fraction(e) for name, e in monomial.items()},
        Fraction(lhs.with_variables(difference.variables).coefficient(**monomial)),
        Fraction(rhs.with_variables(difference.variables).coefficient(**monomial)),
    )


def compare_vectors(lhs: Sequence[int], rhs: Sequence[int]) -> Witness | None:
    """First index where two integer vectors differ (shorter ones padded with zeros)."""
    size = max(len(lhs), len(rhs))
    for i in range(size):
        left = lhs[i] if i < len(lhs) else 0
        right = rhs[i] if i < len(rhs) else 0
        if left != right:
            return Witness({"i": Fraction(i)}, Fraction(left), Fraction(right))
    return None


def compare_values(lhs: int, rhs: int) -> Witness | None:
    """Witness with an empty point when two numbers differ."""
    return None if lhs == rhs else Witness({}, Fraction(lhs), Fraction(rhs))


def _at(poly: MultiPoly, values: Mapping[str, Rat]) -> Rat:
    return poly.evaluate(values)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# -- Identities ---------------------------------------------------------------


@identity("fh")
def _fh(p: Params, limits: Limits) -> Witness | None:
    f, h = f_triangle(p, limits=limits), h_triangle(p, limits=limits)
    return _bivariate(
        p,
        lambda x: _at(f, x),
        lambda x: x["q"] ** p.r
        * _at(h, {"q": (x["q"] + 1) / x["q"], "t": (x["t"] + 1) / (x["q"] + 1)}),
    )


@identity("fh_inverse")
def _fh_inverse(p: Params, limits: Limits) -> Witness | None:
    f, h = f_triangle(p, limits=limits), h_triangle(p, limits=limits)

    def rhs(x: Point) -> Rat:
        q, t = x["q"], x["t"]
        return (q - 1) ** p.r * _at(f, {"q": 1 / (q - 1), "t": (1 + q * (t - 1)) / (q - 1)})

    return _bivariate(p, lambda x: _at(h, x), rhs)


@identity("extended_fh")
def _extended_fh(p: Params, limits: Limits) -> Witness | None:
    f_ext, h_ext = extended_triangles(p, limits)
    names = extended_variables(p)
    loops = names[1:]

    def rhs(x: Point) -> Rat:
        q = x["q"]
        values = {z: (1 + q * (x[z] - 1)) / (q - 1) for z in loops}
        return (q - 1) ** p.r * _at(f_ext, {"q": 1 / (q - 1), **values})

    axes = [grid(p), *([EXTENDED_LOOP_VALUES] * len(loops))]
    return compare_on_grid(names, axes, lambda x: _at(h_ext, x), rhs)


@identity("hm_conjecture")
def _hm_conjecture(p: Params, limits: Limits) -> Witness | None:
    m, h = m_triangle(p, limits=limits), h_triangle(p, limits=limits)

    def rhs(x: Point) -> Rat:
        q, t = x["q"], x["t"]
        return (1 - t) ** p.r * _at(h, {"q": t * (q - 1) / (1 - t), "t": q / (q - 1)})

    return _bivariate(p, lambda x: _at(m, x), rhs)


@identity("m_closed_conjecture")
def _m_closed_conjecture(p: Params, limits: Limits) -> Witness | None:
    return compare_polys(p, m_triangle(p, limits=limits), m_closed(p))


@identity("char_from_h")
def _char_from_h(p: Params, limits: Limits) -> Witness | None:
    ch, h = char_poly(p, limits=limits), h_triangle(p, limits=limits)

    def rhs(x: Point) -> Rat:
        q = x["q"]
        return q**p.r * _at(h, {"q": (q - 1) / q, "t": (1 - 2 * q) / (q - 1)})

    return _univariate(p, lambda x: _at(ch, x), rhs)


@identity("f_symmetry")
def _f_symmetry(p: Params, limits: Limits) -> Witness | None:
    f = f_triangle(p, limits=limits)
    return _bivariate(
        p,
        lambda x: _at(f, x),
        lambda x: _sign(p.r) * _at(f, {"q": -1 - x["q"], "t": -1 - x["t"]}),
    )


@identity("dehn_sommerville")
def _dehn_sommerville(p: Params, limits: Limits) -> Witness | None:
    h = build_complex(ComplexKind.DELTA, p, limits).h_vector()
    return compare_vectors(h, h[::-1])


@identity("fh_relation")
def _fh_relation(p: Params, limits: Limits) -> Witness | None:
    delta = build_complex(ComplexKind.DELTA, p, limits)
    f, h = face_polynomial(delta.f_vector()), face_polynomial(delta.h_vector())
    d = delta.dimension + 1
    return _univariate(
        p,
        lambda x: _at(f, x),
        lambda x: (x["q"] + 1) ** d * _at(h, {"q": x["q"] / (x["q"] + 1)}),
    )


@identity("h_is_f")
def _h_is_f(p: Params, limits: Limits) -> Witness | None:
    delta = build_complex(ComplexKind.DELTA, p, limits)
    gamma = build_complex(ComplexKind.GAMMA, p, limits)
    return compare_vectors(delta.h_vector(), gamma.f_vector())


@identity("m_self_dual")
def _m_self_dual(p: Params, limits: Limits) -> Witness | None:
    m, m_dual = m_triangle(p, limits=limits), m_triangle(p.dual, limits=limits)

    def rhs(x: Point) -> Rat:
        q, t = x["q"], x["t"]
        return (q * t) ** p.r * _at(m, {"q": 1 / t, "t": 1 / q})

    return _bivariate(p, lambda x: _at(m_dual, x), rhs)


@identity("euler_gamma")
def _euler_gamma(p: Params, limits: Limits) -> Witness | None:
    # -f_Γ(-1) = -H(-1, 1): the only surviving summand is a = n when m = n.
    expected = _sign(p.n + 1) if p.m == p.n else 0
    return compare_values(build_complex(ComplexKind.GAMMA, p, limits).euler(), expected)


@identity("euler_delta")
def _euler_delta(p: Params, limits: Limits) -> Witness | None:
    return compare_values(build_complex(ComplexKind.DELTA, p, limits).euler(), _sign(p.r - 1))


@identity("h_closed")
def _h_closed(p: Params, limits: Limits) -> Witness | None:
    return compare_polys(p, h_triangle(p, limits=limits), h_closed(p))


@identity("f_closed")
def _f_closed(p: Params, limits: Limits) -> Witness | None:
    return compare_polys(p, f_triangle(p, limits=limits), f_closed(p))


@identity("char_closed")
def _char_closed(p: Params, limits: Limits) -> Witness | None:
    return compare_polys(p, char_poly(p, limits=limits), char_closed(p))


@identity("m_char")
def _m_char(p: Params, limits: Limits) -> Witness | None:
    ch, m = char_poly(p, limits=limits), m_triangle(p, limits=limits)
    return _univariate(p, lambda x: _at(ch, x), lambda x: _at(m, {"q": 0, "t": x["q"]}))


@identity("shuf_rank_generating")
def _shuf_rank_generating(p: Params, limits: Limits) -> Witness | None:
    h_at_one = h_triangle(p, limits=limits).substitute({"t": 1}).drop("t")
    return compare_polys(p, rank_generating(p, limits), h_at_one)


@identity("positive_faces")
def _positive_faces(p: Params, limits: Limits) -> Witness | None:
    positive = build_complex(ComplexKind.GAMMA_PLUS, p, limits)
    h_at_zero = h_triangle(p, limits=limits).substitute({"t": 0}).drop("t")
    return compare_polys(p, face_polynomial(positive.f_vector()), h_at_zero)


@identity("positive_facets_mobius")
def _positive_facets_mobius(p: Params, limits: Limits) -> Witness | None:
    facets = len(build_complex(ComplexKind.DELTA_PLUS, p, limits).facets)
    expected = comb(p.r, p.n)
    if (witness := compare_values(facets, expected)) is not None:
        return witness
    poset = shuffle_poset(p, limits)
    value = mobius(poset)[poset.index_of(bottom_word(p)), poset.index_of(top_word(p))]
    return compare_values(abs(value), expected)


@identity("gamma_palindrome")
def _gamma_palindrome(p: Params, limits: Limits) -> Witness | None:
    f = build_complex(ComplexKind.GAMMA, p, limits).f_vector()
    padded = f + [0] * (p.r + 1 - len(f))
    return compare_vectors(padded, padded[::-1])


@identity("bw_gamma")
def _bw_gamma(p: Params, limits: Limits) -> Witness | None:
    f_bw, h_bw = bw_triangles(build_complex(ComplexKind.GAMMA, p, limits))
    if (witness := compare_polys(p, f_bw, gamma_bw_closed(p, limits))) is not None:
        return witness
    expected = MultiPoly.variable("q") ** p.n if p.m == p.n else MultiPoly.zero(("q",))
    return compare_polys(p, h_bw.substitute({"t": 0}).drop("t"), expected)


@identity("triangle_symmetry")
def _triangle_symmetry(p: Params, limits: Limits) -> Witness | None:
    swapped = p.dual
    witness = compare_polys(p, h_triangle(p, limits=limits), h_triangle(swapped, limits=limits))
    if witness is not None:
        return witness
    return compare_polys(p, f_triangle(p, limits=limits), f_triangle(swapped, limits=limits))


IDENTITY_NAMES: tuple[str, ...] = tuple(_REGISTRY)


# -- Public API ---------------------------------------------------------------


def resolve_identity_names(text: str) -> list[str]:
    """Parse ``"all"`` or a comma-separated list of identity names.

    Raises:
        UnknownIdentityError: For the first name that is not registered.
    """
    if text.strip() == "all":
        return list(IDENTITY_NAMES)
    names = [name.strip() for name in text.split(",") if name.strip()]
    for name in names:
        if name not in _REGISTRY:
            raise UnknownIdentityError(name)
    return names


def verify_identity(name: str, p: Params, limits: Limits | None = None) -> IdentityReport:
    """Check the identity ``name`` at ``(m, n)``.

    Raises:
        UnknownIdentityError: If ``name`` is not registered.
        ResourceCapError: If an underlying computation exceeds its cap.
    """
    check = _REGISTRY.get(name)
    if check is None:
        raise UnknownIdentityError(name)
    start = time.perf_counter()
    witness = check(p, resolve_limits(limits))
    status = IdentityStatus.PASS if witness is None else IdentityStatus.FAIL
    elapsed = time.perf_counter() - start
    logger.info("Checked %s at (%d,%d): %s in %.2fs", name, p.m, p.n, status.value, elapsed)
    return IdentityReport(name, p.m, p.n, status, witness)


def verify_all(
    p: Params, names: Sequence[str] | None = None, limits: Limits | None = None
) -> list[IdentityReport]:
    """Check several identities (every registered one by default) in registry order."""
    selected = IDENTITY_NAMES if names is None else names
    return [verify_identity(name, p, limits) for name in selected]


def reports_to_json(reports: Iterable[IdentityReport]) -> bytes:
    """Serialize reports as a JSON list."""
    return orjson.dumps([report.to_dict() for report in reports])
