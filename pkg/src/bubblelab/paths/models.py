"""Data models and exceptions for colored lattice paths and flags."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from bubblelab.word import Edge, Face, format_face


class InvalidPathError(ValueError):
    """Raised when a step sequence is not a q-Delannoy path to ``(m, n)``.

    Attributes:
        path: Text of the offending path.
    """

    def __init__(self, path: str, message: str) -> None:
        """Initialize InvalidPathError.

        Args:
            path: Text of the offending path.
            message: Which condition failed.
        """
        self.path = path
        super().__init__(f"invalid path {path!r}: {message}")


class CrossingError(ValueError):
    """Raised when a face or flag of Γ⁺(m,n) contains crossing or overlapping edges.

    Attributes:
        first: One of the offending edges.
        second: The other one.
    """

    def __init__(self, first: Edge, second: Edge) -> None:
        """Initialize CrossingError.

        Args:
            first: One offending edge.
            second: The other offending edge.
        """
        self.first = first
        self.second = second
        super().__init__(f"edges {first} and {second} cross or share a letter")


class NotSquareError(ValueError):
    """Raised when a Schröder filter is applied to paths with ``m != n``."""

    def __init__(self, m: int, n: int) -> None:
        """Initialize NotSquareError.

        Args:
            m: Target x-coordinate.
            n: Target y-coordinate.
        """
        self.m = m
        self.n = n
        super().__init__(f"Schröder paths need a square target, got ({m}, {n})")


class StepKind(StrEnum):
    """East, north and colored diagonal steps."""

    E = "E"
    N = "N"
    D = "D"


class SchroderKind(StrEnum):
    """Which diagonal restriction a Schröder filter applies."""

    SCHRODER = "schroder"
    LITTLE = "little"


@dataclass(frozen=True, order=True)
class Step:
    """One step; ``color`` is 1..q for diagonals and 0 otherwise."""

    kind: StepKind
    color: int = 0

    def __post_init__(self) -> None:
        if (self.kind is StepKind.D) != (self.color > 0):
            raise ValueError(f"only diagonal steps carry a color, got {self.kind} {self.color}")

    def __str__(self) -> str:
        return f"D{self.color}" if self.kind is StepKind.D else self.kind.value

    @property
    def delta(self) -> tuple[int, int]:
        """Displacement of the step."""
        if self.kind is StepKind.E:
            return (1, 0)
        if self.kind is StepKind.N:
            return (0, 1)
        return (1, 1)


EAST = Step(StepKind.E)
NORTH = Step(StepKind.N)


@dataclass(frozen=True)
class DelannoyPath:
    """A lattice path from ``(0, 0)`` to ``(m, n)`` with ``q`` diagonal colors.

    Attributes:
        m: Target x-coordinate.
        n: Target y-coordinate.
        q: Number of diagonal colors.
        steps: The steps in order.
    """

    m: int
    n: int
    q: int
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        x = sum(step.delta[0] for step in self.steps)
        y = sum(step.delta[1] for step in self.steps)
        if (x, y) != (self.m, self.n):
            raise InvalidPathError(str(self), f"ends at ({x}, {y}), not ({self.m}, {self.n})")
        if any(step.color > self.q for step in self.steps):
            raise InvalidPathError(str(self), f"diagonal color above {self.q}")

    def __str__(self) -> str:
        return " ".join(str(step) for step in self.steps) if self.steps else "-"

    def points(self) -> list[tuple[int, int]]:
        """Lattice points visited, starting at the origin."""
        x, y = 0, 0
        visited = [(x, y)]
        for step in self.steps:
            dx, dy = step.delta
            x, y = x + dx, y + dy
            visited.append((x, y))
        return visited

    def peaks(self) -> list[tuple[int, int]]:
        """Points entered by an N step and left by an E step."""
        points = self.points()
        return [
            points[i + 1]
            for i in range(len(self.steps) - 1)
            if self.steps[i] == NORTH and self.steps[i + 1] == EAST
        ]

    def diagonals(self) -> list[tuple[int, int, int]]:
        """``(s, t, color)`` for each diagonal step from ``(s-1, t-1)`` to ``(s, t)``."""
        points = self.points()
        return [
            (*points[i + 1], step.color)
            for i, step in enumerate(self.steps)
            if step.kind is StepKind.D
        ]


@dataclass(frozen=True)
class Flag:
    """A chain ``G_0 ⊆ G_1 ⊆ … ⊆ G_q`` of faces of Γ⁺(m,n).

    Attributes:
        chain: The faces, each a set of edges.
    """

    chain: tuple[Face, ...]

    def __post_init__(self) -> None:
        if not self.chain:
            raise ValueError("a flag needs at least one face")
        for lower, upper in zip(self.chain, self.chain[1:], strict=False):
            if not lower <= upper:
                raise ValueError(f"{format_face(lower)} is not contained in {format_face(upper)}")

    @property
    def q(self) -> int:
        """Number of colors: the chain has ``q + 1`` faces."""
        return len(self.chain) - 1

    def level(self, edge: Edge) -> int:
        """Smallest ``k`` with ``edge ∈ G_k``.

        Raises:
            KeyError: If the edge is not in the top face.
        """
        for k, face in enumerate(self.chain):
            if edge in face:
                return k
        raise KeyError(edge)

    def __str__(self) -> str:
        return " ⊆ ".join(format_face(face) for face in self.chain)
