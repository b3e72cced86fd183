"""Exact sparse multivariate polynomials with integer coefficients.

``MultiPoly`` wraps an element of a sympy sparse polynomial ring over ``ZZ``
with graded-lexicographic term order. Variables are identified by name; binary
operations first move both operands into the ring on the union of their
variables (first operand's order, then the new names).

Text format:
    Terms in decreasing graded-lex order, e.g. ``"3*q^2*t + 5*q - 1"``; the
    zero polynomial is ``"0"``.

JSON format:
    ``{"vars": ["q", "t"], "terms": [{"coef": "3", "exps": [2, 1]}, ...]}`` with
    coefficients as decimal strings, terms in the text order.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from bubblelab.triangle.models import Rat, VariableMismatchError

Monomial = tuple[int, ...]
Scalar = int | Fraction


@lru_cache(maxsize=256)
def _ring(names: tuple[str, ...]) -> PolyRing:
    return PolyRing(names, ZZ, grlex)


class MultiPoly:
    """Immutable polynomial in named variables with integer coefficients.

    Example:
        >>> q, t = MultiPoly.variable("q"), MultiPoly.variable("t")
        >>> str((q * t + 1) ** 2)
        'q^2*t^2 + 2*q*t + 1'
    """

    __slots__ = ("_element", "_variables")

    def __init__(self, variables: Sequence[str], element: PolyElement) -> None:
        self._variables = tuple(variables)
        self._element = element

    # -- Construction --------------------------------------------------------

    @classmethod
    def from_terms(cls, variables: Sequence[str], terms: Mapping[Monomial, int]) -> MultiPoly:
        """Build from an exponent-vector → coefficient map; zero coefficients are dropped.

        Raises:
            VariableMismatchError: If an exponent vector has the wrong length.
        """
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise VariableMismatchError(f"repeated variable names in {names}")
        for exps in terms:
            if len(exps) != len(names):
                raise VariableMismatchError(
                    f"exponent vector {exps} does not match variables {names}"
                )
        ring = _ring(names)
        return cls(names, ring.from_dict({exps: c for exps, c in terms.items() if c}))

    @classmethod
    def constant(cls, value: int, variables: Sequence[str] = ()) -> MultiPoly:
        """The constant ``value``."""
        names = tuple(variables)
        return cls.from_terms(names, {(0,) * len(names): value})

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> MultiPoly:
        """The zero polynomial."""
        return cls.from_terms(variables, {})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] | None = None) -> MultiPoly:
        """The polynomial ``name`` inside the given variable list (default: just ``name``)."""
        names = tuple(variables) if variables is not None else (name,)
        if name not in names:
            raise VariableMismatchError(f"{name} is not among {names}")
        exps = tuple(1 if other == name else 0 for other in names)
        return cls.from_terms(names, {exps: 1})

    # -- Inspection ----------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        """Variable names in ring order."""
        return self._variables

    def terms(self) -> list[tuple[Monomial, int]]:
        """Nonzero terms in decreasing graded-lex order."""
        return [(tuple(exps), int(coef)) for exps, coef in self._element.terms()]

    def as_dict(self) -> dict[Monomial, int]:
        """Exponent vector → coefficient."""
        return {tuple(exps): int(coef) for exps, coef in self._element.items()}

    def coefficient(self, **exponents: int) -> int:
        """Coefficient of the monomial with the given exponents (others zero)."""
        unknown = set(exponents) - set(self._variables)
        if unknown:
            raise VariableMismatchError(f"unknown variables {sorted(unknown)}")
        exps = tuple(exponents.get(name, 0) for name in self._variables)
        return self.as_dict().get(exps, 0)

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._element

    def degree(self, name: str) -> int:
        """Largest exponent of ``name`` (``-1`` for zero, 0 for absent variables)."""
        if self.is_zero():
            return -1
        if name not in self._variables:
            return 0
        position = self._variables.index(name)
        return max(exps[position] for exps in self.as_dict())

    def used_variables(self) -> tuple[str, ...]:
        """Variables occurring with a positive exponent."""
        data = self.as_dict()
        return tuple(
            name
            for position, name in enumerate(self._variables)
            if any(exps[position] for exps in data)
        )

    # -- Alignment -----------------------------------------------------------

    def with_variables(self, variables: Sequence[str]) -> MultiPoly:
        """Re-express in a variable list containing every used variable.

        Raises:
            VariableMismatchError: If a used variable is missing from ``variables``.
        """
        names = tuple(variables)
        if names == self._variables:
            return self
        missing = set(self.used_variables()) - set(names)
        if missing:
            raise VariableMismatchError(f"variables {sorted(missing)} missing from {names}")
        positions = [self._variables.index(n) if n in self._variables else None for n in names]
        terms = {
            tuple(0 if p is None else exps[p] for p in positions): coef
            for exps, coef in self.as_dict().items()
        }
        return MultiPoly.from_terms(names, terms)

    def _aligned(self, other: MultiPoly | int) -> tuple[MultiPoly, MultiPoly]:
        if isinstance(other, int):
            other = MultiPoly.constant(other, self._variables)
        names = self._variables + tuple(n for n in other._variables if n not in self._variables)
        return self.with_variables(names), other.with_variables(names)

    # -- Arithmetic ----------------------------------------------------------

    def __add__(self, other: MultiPoly | int) -> MultiPoly:
        a, b = self._aligned(other)
        return MultiPoly(a._variables, a._element + b._element)

    __radd__ = __add__

    def __sub__(self, other: MultiPoly | int) -> MultiPoly:
        a, b = self._aligned(other)
        return MultiPoly(a._variables, a._element - b._element)

    def __rsub__(self, other: int) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other: MultiPoly | int) -> MultiPoly:
        a, b = self._aligned(other)
        return MultiPoly(a._variables, a._element * b._element)

    __rmul__ = __mul__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self._variables, -self._element)

    def __pow__(self, exponent: int) -> MultiPoly:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return MultiPoly(self._variables, self._element**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other, self._variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.as_dict() == b.as_dict()

    def __hash__(self) -> int:
        return hash(frozenset(self._named_terms()))

    def _named_terms(self) -> Iterable[tuple[tuple[tuple[str, int], ...], int]]:
        for exps, coef in self.as_dict().items():
            named = sorted((n, e) for n, e in zip(self._variables, exps, strict=True) if e)
            yield tuple(named), coef

    # -- Evaluation ----------------------------------------------------------

    def evaluate(self, values: Mapping[str, Scalar]) -> Rat:
        """Exact value at a rational point.

        Raises:
            VariableMismatchError: If a used variable has no value.
        """
        missing = set(self.used_variables()) - set(values)
        if missing:
            raise VariableMismatchError(f"no value for variables {sorted(missing)}")
        point = [Fraction(values.get(name, 0)) for name in self._variables]
        total = Fraction(0)
        for exps, coef in self.as_dict().items():
            term = Fraction(coef)
            for value, exponent in zip(point, exps, strict=True):
                if exponent:
                    term *= value**exponent
            total += term
        return total

    def substitute(self, replacements: Mapping[str, MultiPoly | int]) -> MultiPoly:
        """Replace variables by polynomials (or integers); other variables stay."""
        result = MultiPoly.zero(self._variables)
        powers: dict[tuple[str, int], MultiPoly] = {}
        for exps, coef in self.as_dict().items():
            term: MultiPoly | int = coef
            for name, exponent in zip(self._variables, exps, strict=True):
                if not exponent:
                    continue
                base = replacements.get(name)
                if base is None:
                    factor = MultiPoly.variable(name, self._variables) ** exponent
                elif isinstance(base, int):
                    factor = MultiPoly.constant(base**exponent)
                else:
                    key = (name, exponent)
                    if key not in powers:
                        powers[key] = base**exponent
                    factor = powers[key]
                term = factor * term
            result = result + term
        return result

    def drop(self, *names: str) -> MultiPoly:
        """Remove unused variables from the variable list.

        Raises:
            VariableMismatchError: If a removed variable is used.
        """
        return self.with_variables([n for n in self._variables if n not in names])

    # -- Serialization -------------------------------------------------------

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        parts: list[str] = []
        for position, (exps, coef) in enumerate(terms):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self._variables, exps, strict=True)
                if e
            ]
            monomial = "*".join(factors)
            magnitude = abs(coef)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if position == 0:
                parts.append(f"-{body}" if coef < 0 else body)
            else:
                parts.append(f"- {body}" if coef < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self._variables}, {self})"

    def to_json_dict(self) -> dict[str, Any]:
        """``{"vars": [...], "terms": [{"coef": "3", "exps": [2, 1]}]}``."""
        return {
            "vars": list(self._variables),
            "terms": [{"coef": str(c), "exps": list(e)} for e, c in self.terms()],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping[str, Any]) -> MultiPoly:
        """Inverse of :meth:`to_json_dict`."""
        return cls.from_terms(
            data["vars"], {tuple(t["exps"]): int(t["coef"]) for t in data["terms"]}
        )


def poly_sum(polys: Iterable[MultiPoly], variables: Sequence[str]) -> MultiPoly:
    """Sum of polynomials, zero in ``variables`` if empty."""
    total = MultiPoly.zero(variables)
    for poly in polys:
        total = total + poly
    return total
