"""Data models for shuffle words and their cover labels.

This module contains the immutable value types of the word layer: letters,
parameters, shuffle words, cover moves and the loop/edge labels that double as
vertices of the noncrossing complexes, together with the word-level exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import TypeAlias


class InvalidWordError(ValueError):
    """Raised when a letter sequence is not a shuffle word.

    Attributes:
        text: The offending word or token text.
    """

    def __init__(self, text: str, message: str) -> None:
        """Initialize InvalidWordError.

        Args:
            text: The offending word or token text.
            message: Descriptive error message.
        """
        self.text = text
        super().__init__(f"Invalid shuffle word '{text}': {message}")


class NotACoverError(ValueError):
    """Raised when a pair of words is not a bubble cover.

    Attributes:
        lower: Text of the proposed lower word.
        upper: Text of the proposed upper word.
    """

    def __init__(self, lower: str, upper: str) -> None:
        """Initialize NotACoverError.

        Args:
            lower: Text of the proposed lower word.
            upper: Text of the proposed upper word.
        """
        self.lower = lower
        self.upper = upper
        super().__init__(f"'{lower}' is not covered by '{upper}' in the bubble lattice")


class NotAGammaFaceError(ValueError):
    """Raised when a vertex set violates the noncrossing matching conditions.

    Attributes:
        face: Text of the offending vertex set.
    """

    def __init__(self, face: str, message: str) -> None:
        """Initialize NotAGammaFaceError.

        Args:
            face: Text of the offending vertex set.
            message: Which condition failed.
        """
        self.face = face
        super().__init__(f"{face} is not a face of the noncrossing matching complex: {message}")


class LetterKind(StrEnum):
    """The two alphabets of a shuffle word."""

    X = "x"
    Y = "y"


@dataclass(frozen=True, order=True)
class Letter:
    """A single letter ``x_i`` or ``y_j``.

    Attributes:
        kind: Alphabet of the letter.
        index: Letter index; 1-based inside words, 0 only for the sentinels of Δ.
    """

    kind: LetterKind
    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"Letter index must be non-negative, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"


@dataclass(frozen=True)
class Params:
    """Alphabet sizes of a shuffle lattice.

    Attributes:
        m: Number of x-letters.
        n: Number of y-letters.

    Example:
        >>> Params(2, 1).r
        3
    """

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError(f"m and n must be non-negative, got m={self.m}, n={self.n}")

    @property
    def r(self) -> int:
        """Return ``m + n``."""
        return self.m + self.n

    @property
    def dual(self) -> Params:
        """Return the parameters with the two alphabets swapped."""
        return Params(self.n, self.m)


class MoveKind(StrEnum):
    """Generating move of a bubble cover."""

    TRANSPOSITION = "transposition"
    RIGHT_INDEL = "right-indel"


InversionSet: TypeAlias = frozenset[tuple[int, int]]


@dataclass(frozen=True)
class ShuffleWord:
    """An order-preserving, duplicate-free word over ``x_1..x_m`` and ``y_1..y_n``.

    Construction validates the word. Bit masks used by the order tests are
    computed lazily and cached on the instance.

    Attributes:
        params: The alphabet sizes the word lives over.
        letters: The letters in word order.

    Raises:
        InvalidWordError: If a letter repeats, is out of range, or the x- or
            y-subsequence is not increasing.

    Example:
        >>> w = ShuffleWord(Params(1, 1), (Letter(LetterKind.Y, 1), Letter(LetterKind.X, 1)))
        >>> str(w)
        'y1 x1'
    """

    params: Params
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self) -> None:
        last = {LetterKind.X: 0, LetterKind.Y: 0}
        bound = {LetterKind.X: self.params.m, LetterKind.Y: self.params.n}
        for letter in self.letters:
            if not 1 <= letter.index <= bound[letter.kind]:
                raise InvalidWordError(str(self), f"letter {letter} out of range")
            if letter.index <= last[letter.kind]:
                raise InvalidWordError(str(self), f"letter {letter} repeated or out of order")
            last[letter.kind] = letter.index

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters) if self.letters else "-"

    def __len__(self) -> int:
        return len(self.letters)

    @cached_property
    def x_indices(self) -> tuple[int, ...]:
        """Indices of the x-letters in word order."""
        return tuple(a.index for a in self.letters if a.kind is LetterKind.X)

    @cached_property
    def y_indices(self) -> tuple[int, ...]:
        """Indices of the y-letters in word order."""
        return tuple(a.index for a in self.letters if a.kind is LetterKind.Y)

    @cached_property
    def x_mask(self) -> int:
        """Bit ``s-1`` set for every present ``x_s``."""
        return sum(1 << (s - 1) for s in self.x_indices)

    @cached_property
    def y_mask(self) -> int:
        """Bit ``t-1`` set for every present ``y_t``."""
        return sum(1 << (t - 1) for t in self.y_indices)

    @cached_property
    def support_mask(self) -> int:
        """x-letters in bits ``0..m-1`` followed by y-letters in bits ``m..m+n-1``."""
        return self.x_mask | (self.y_mask << self.params.m)

    @cached_property
    def inversions(self) -> InversionSet:
        """Pairs ``(s, t)`` such that ``y_t`` occurs before ``x_s``."""
        seen_y: list[int] = []
        pairs: set[tuple[int, int]] = set()
        for letter in self.letters:
            if letter.kind is LetterKind.Y:
                seen_y.append(letter.index)
            else:
                pairs.update((letter.index, t) for t in seen_y)
        return frozenset(pairs)

    @cached_property
    def inversion_mask(self) -> int:
        """Bit ``(s-1)*n + (t-1)`` set for every inversion ``(s, t)``."""
        n = self.params.n
        return sum(1 << ((s - 1) * n + (t - 1)) for s, t in self.inversions)

    @cached_property
    def sort_key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        """Canonical order: support bitmask, then sorted inversion pairs."""
        return (self.support_mask, tuple(sorted(self.inversions)))


# -- Cover labels / complex vertices ------------------------------------------


@dataclass(frozen=True)
class Loop:
    """A loop vertex at a single letter."""

    letter: Letter

    def __post_init__(self) -> None:
        if self.letter.index < 1:
            raise ValueError(f"Loops need a letter index >= 1, got {self.letter}")

    def __str__(self) -> str:
        return str(self.letter)

    @property
    def sort_key(self) -> tuple[int, int, int]:
        """Loops on x first, then loops on y, each by index."""
        return (0 if self.letter.kind is LetterKind.X else 1, self.letter.index, 0)


@dataclass(frozen=True)
class Edge:
    """An edge vertex ``{x_x, y_y}``; index 0 denotes a sentinel letter."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError(f"Edge indices must be non-negative, got ({self.x}, {self.y})")
        if self.x == 0 and self.y == 0:
            raise ValueError("The edge {x0, y0} is not a vertex")

    def __str__(self) -> str:
        return f"x{self.x}-y{self.y}"

    @property
    def sort_key(self) -> tuple[int, int, int]:
        """Edges after all loops, by ``(x, y)``."""
        return (2, self.x, self.y)

    def crosses(self, other: Edge) -> bool:
        """Return True if the two edges cross; shared endpoints never cross."""
        return (self.x - other.x) * (self.y - other.y) < 0


CVertex: TypeAlias = Loop | Edge
Face: TypeAlias = frozenset[CVertex]


def vertex_key(vertex: CVertex) -> tuple[int, int, int]:
    """Canonical sort key of a complex vertex."""
    return vertex.sort_key


def sorted_face(face: Face) -> list[CVertex]:
    """Return the vertices of ``face`` in canonical order."""
    return sorted(face, key=vertex_key)


def format_face(face: Face) -> str:
    """Render a face as ``{x2, y3, x1-y2}`` in canonical vertex order."""
    return "{" + ", ".join(str(v) for v in sorted_face(face)) + "}"


def x_loop(index: int) -> Loop:
    """Shorthand for the loop at ``x_index``."""
    return Loop(Letter(LetterKind.X, index))


def y_loop(index: int) -> Loop:
    """Shorthand for the loop at ``y_index``."""
    return Loop(Letter(LetterKind.Y, index))


def parse_vertex(text: str) -> CVertex:
    """Parse ``"x3"``, ``"y2"`` or ``"x2-y0"`` into a vertex.

    Raises:
        ValueError: If the text is not a vertex token.
    """
    token = text.strip()
    if "-" in token:
        left, _, right = token.partition("-")
        x, y = parse_letter(left), parse_letter(right)
        if x.kind is not LetterKind.X or y.kind is not LetterKind.Y:
            raise ValueError(f"Edge must be written x<i>-y<j>, got '{text}'")
        return Edge(x.index, y.index)
    return Loop(parse_letter(token))


def parse_letter(token: str) -> Letter:
    """Parse ``"x3"`` or ``"y12"`` into a Letter.

    Raises:
        ValueError: If the token is malformed.
    """
    if len(token) < 2 or token[0] not in "xy" or not token[1:].isdigit():
        raise ValueError(f"Malformed letter '{token}'")
    return Letter(LetterKind(token[0]), int(token[1:]))
