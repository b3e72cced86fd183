"""Data models and exceptions for the finite poset engine."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass


class NotAPartialOrderError(ValueError):
    """Raised when a relation fails a partial-order axiom.

    Attributes:
        axiom: ``"reflexivity"``, ``"antisymmetry"`` or ``"transitivity"``.
        witness: Element indices exhibiting the violation.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...]) -> None:
        """Initialize NotAPartialOrderError.

        Args:
            axiom: Name of the violated axiom.
            witness: Offending element indices.
        """
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"not a partial order: {axiom} fails at {witness}")


class IncomparableError(ValueError):
    """Raised when an interval is requested for endpoints with ``u ≰ v``."""

    def __init__(self, lower: str, upper: str) -> None:
        """Initialize IncomparableError.

        Args:
            lower: Text of the lower endpoint.
            upper: Text of the upper endpoint.
        """
        self.lower = lower
        self.upper = upper
        super().__init__(f"incomparable endpoints: {lower} is not below {upper}")


@dataclass(frozen=True)
class LatticeCheck:
    """Outcome of a lattice test.

    Attributes:
        is_lattice: True if every pair has a meet and a join.
        witness: First pair of element indices lacking a meet or join.
        missing: ``"join"`` or ``"meet"`` when ``witness`` is set.
    """

    is_lattice: bool
    witness: tuple[int, int] | None = None
    missing: str | None = None

    def __bool__(self) -> bool:
        return self.is_lattice


@dataclass(frozen=True)
class MobiusMatrix:
    """Möbius function of a finite poset, stored on comparable pairs.

    Attributes:
        entries: Map from ``(u, v)`` index pairs with ``u ≤ v`` to ``μ(u, v)``.

    Example:
        >>> mu = MobiusMatrix({(0, 0): 1, (0, 1): -1, (1, 1): 1})
        >>> mu[0, 1], mu[1, 0]
        (-1, 0)
    """

    entries: Mapping[tuple[int, int], int]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self.entries.get(pair, 0)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Iterate over ``((u, v), μ(u, v))`` for comparable pairs."""
        return iter(self.entries.items())
