"""Data models and exceptions for triangle polynomials and identity reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Any, TypeAlias

Rat: TypeAlias = Fraction


class VariableMismatchError(ValueError):
    """Raised when exponent vectors or evaluation points do not fit the variables."""


class UnknownIdentityError(ValueError):
    """Raised when an identity name is not registered."""

    def __init__(self, name: str) -> None:
        """Initialize UnknownIdentityError.

        Args:
            name: The requested identity name.
        """
        self.name = name
        super().__init__(f"unknown identity: {name}")


class TriangleMode(StrEnum):
    """How a triangle polynomial is computed."""

    DEFINITIONAL = "definitional"
    CLOSED = "closed"


class IdentityStatus(StrEnum):
    """Outcome of an identity check."""

    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class Witness:
    """A point where the two sides of an identity differ.

    Attributes:
        point: Variable assignment (or vector index) of the disagreement.
        lhs: Value of the left-hand side there.
        rhs: Value of the right-hand side there.
    """

    point: dict[str, Rat]
    lhs: Rat
    rhs: Rat

    def __str__(self) -> str:
        coordinates = " ".join(f"{name}={value}" for name, value in self.point.items())
        return f"{coordinates} lhs={self.lhs} rhs={self.rhs}".strip()

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready form with exact values as strings."""
        return {
            "point": {name: str(value) for name, value in self.point.items()},
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass(frozen=True)
class IdentityReport:
    """Result of checking one identity at one ``(m, n)``.

    Attributes:
        identity: Registered identity name.
        m: Number of x-letters.
        n: Number of y-letters.
        status: PASS or FAIL.
        witness: Disagreement point, present exactly when the status is FAIL.
    """

    identity: str
    m: int
    n: int
    status: IdentityStatus
    witness: Witness | None = field(default=None)

    def __post_init__(self) -> None:
        if (self.status is IdentityStatus.FAIL) != (self.witness is not None):
            raise ValueError("a failing report needs a witness and a passing one has none")

    @property
    def passed(self) -> bool:
        """True for PASS."""
        return self.status is IdentityStatus.PASS

    def line(self) -> str:
        """``"IDENTITY m n PASS|FAIL [witness]"``."""
        text = f"{self.identity} {self.m} {self.n} {self.status.value}"
        return text if self.witness is None else f"{text} {self.witness}"

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready form ``{"identity","m","n","status","witness"}``."""
        return {
            "identity": self.identity,
            "m": self.m,
            "n": self.n,
            "status": self.status.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }
