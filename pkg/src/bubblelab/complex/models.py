"""Data models and exceptions for simplicial complexes.

Vertices and faces are the cover labels of the word layer (:class:`Loop`,
:class:`Edge`); this module adds the complex-level records and errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from bubblelab.word.models import CVertex, Face, ShuffleWord, format_face


class FaceNotInComplexError(ValueError):
    """Raised when an operation needs a face the complex does not contain."""

    def __init__(self, face: Face) -> None:
        """Initialize FaceNotInComplexError.

        Args:
            face: The missing face.
        """
        self.face = face
        super().__init__(f"face not in complex: {format_face(face)}")


class NotADeltaFaceError(ValueError):
    """Raised when a vertex set violates the noncrossing bipartite conditions."""

    def __init__(self, face: Face, message: str) -> None:
        """Initialize NotADeltaFaceError.

        Args:
            face: The offending vertex set.
            message: Which condition failed.
        """
        self.face = face
        super().__init__(f"{format_face(face)} is not a face of Δ: {message}")


class NotPureError(ValueError):
    """Raised when an operation requires a pure complex."""


class NotAFacetPermutationError(ValueError):
    """Raised when a proposed shelling order is not a permutation of the facets."""


class JoinOverlapError(ValueError):
    """Raised when joining complexes whose vertex sets intersect."""


class IntervalMismatchError(ValueError):
    """Raised when a facet-containment set is not the predicted bubble interval."""


class ComplexKind(StrEnum):
    """Origin of a complex."""

    GAMMA = "gamma"
    GAMMA_PLUS = "gamma+"
    DELTA = "delta"
    DELTA_PLUS = "delta+"
    LEFT_LEANING = "left"
    DERIVED = "derived"


class RidgeType(StrEnum):
    """How a ridge of Δ(m,n) extends to its two facets."""

    LOOPS_ONLY = "loops-only"
    ISOLATED_LETTER = "isolated-letter"
    TWO_TREES = "two-trees"


@dataclass(frozen=True)
class StructuralReport:
    """Flag, purity and thinness of a complex."""

    flag: bool
    pure: bool
    thin: bool


@dataclass(frozen=True)
class ShellingResult:
    """Outcome of a shelling check.

    Attributes:
        success: True if the order is a shelling.
        restrictions: Restriction face of each facet in order (up to the failure).
        failure_index: Position of the first facet violating the condition.
    """

    success: bool
    restrictions: tuple[Face, ...]
    failure_index: int | None = None


@dataclass(frozen=True)
class VDNode:
    """Node of a vertex-decomposition witness.

    A leaf (``vertex is None``) is a simplex; an inner node names the shedding
    vertex and the witnesses of its link and deletion.
    """

    facets: tuple[Face, ...]
    vertex: CVertex | None = None
    link: VDNode | None = None
    deletion: VDNode | None = None

    @property
    def is_leaf(self) -> bool:
        """True for simplices."""
        return self.vertex is None

    def deletion_chain(self) -> list[CVertex]:
        """Shedding vertices along the chain of deletions from this node."""
        chain: list[CVertex] = []
        node: VDNode | None = self
        while node is not None and node.vertex is not None:
            chain.append(node.vertex)
            node = node.deletion
        return chain

    def size(self) -> int:
        """Number of nodes in the witness tree."""
        children = (self.link, self.deletion)
        return 1 + sum(child.size() for child in children if child is not None)


@dataclass(frozen=True)
class KInterval:
    """The set of words whose Δ-facet contains a face, as a bubble interval."""

    bottom: ShuffleWord
    top: ShuffleWord
    members: frozenset[ShuffleWord]


@dataclass(frozen=True)
class BWTables:
    """Degree-refined face counts ``f[i, j]`` and their h-transform ``h[i, j]``.

    ``i`` is the degree (largest facet size above the face) and ``j`` the face size.
    """

    f: dict[tuple[int, int], int]
    h: dict[tuple[int, int], int]
