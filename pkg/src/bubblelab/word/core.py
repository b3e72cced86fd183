"""Shuffle-word enumeration, order tests and elementary word operations.

Words are compared through bit masks cached on :class:`ShuffleWord`:

- ``x_mask`` / ``y_mask``: which letters are present,
- ``inversion_mask``: bit ``(s-1)*n + (t-1)`` for every pair with ``y_t`` before ``x_s``.

Restricting a word to a letter set then amounts to masking its inversions with
the pairs spanned by the common letters (see :func:`pair_mask`).
"""

from __future__ import annotations

import logging
import time
from functools import lru_cache
from itertools import combinations

from bubblelab.core.limits import Limits, resolve_limits
from bubblelab.word.models import (
    InvalidWordError,
    InversionSet,
    Letter,
    LetterKind,
    Params,
    ShuffleWord,
    parse_letter,
)

logger = logging.getLogger(__name__)


def enumerate_words(p: Params, limits: Limits | None = None) -> tuple[ShuffleWord, ...]:
    """Return every word of Shuf(m,n) in canonical order.

    The canonical order sorts by support bitmask (x-letters in the low bits),
    then by the sorted inversion set. Results are cached per ``Params``.

    Args:
        p: Alphabet sizes.
        limits: Resource caps; defaults apply when omitted.

    Returns:
        Tuple of all shuffle words; its length is ``Σ_a C(m,a)C(n,a)2^(m+n-2a)``.

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_words``.

    Example:
        >>> [str(w) for w in enumerate_words(Params(1, 1))]
        ['-', 'x1', 'y1', 'x1 y1', 'y1 x1']
    """
    resolve_limits(limits).check("max_r_words", p.r)
    return _enumerate_words(p)


@lru_cache(maxsize=32)
def _enumerate_words(p: Params) -> tuple[ShuffleWord, ...]:
    start = time.perf_counter()
    words: list[ShuffleWord] = []
    for a in range(p.m + 1):
        for xs in combinations(range(1, p.m + 1), a):
            for b in range(p.n + 1):
                for ys in combinations(range(1, p.n + 1), b):
                    words.extend(_interleavings(p, xs, ys))
    words.sort(key=lambda w: w.sort_key)
    elapsed = time.perf_counter() - start
    logger.info("Enumerated Shuf(%d,%d): %d words in %.2fs", p.m, p.n, len(words), elapsed)
    return tuple(words)


def _interleavings(p: Params, xs: tuple[int, ...], ys: tuple[int, ...]) -> list[ShuffleWord]:
    size = len(xs) + len(ys)
    result = []
    for x_positions in combinations(range(size), len(xs)):
        slots = set(x_positions)
        x_iter, y_iter = iter(xs), iter(ys)
        letters = tuple(
            Letter(LetterKind.X, next(x_iter)) if i in slots else Letter(LetterKind.Y, next(y_iter))
            for i in range(size)
        )
        result.append(ShuffleWord(p, letters))
    return result


def parse_word(text: str, p: Params) -> ShuffleWord:
    """Parse the space-separated serialization (``"-"`` is the empty word).

    Raises:
        InvalidWordError: If a token is malformed or the word is not a shuffle word.
    """
    stripped = text.strip()
    if stripped in ("-", ""):
        return ShuffleWord(p, ())
    try:
        letters = tuple(parse_letter(token) for token in stripped.split())
    except ValueError as e:
        raise InvalidWordError(text, str(e)) from e
    return ShuffleWord(p, letters)


def format_word(w: ShuffleWord) -> str:
    """Return the space-separated serialization of ``w``."""
    return str(w)


def bottom_word(p: Params) -> ShuffleWord:
    """The word ``x1 x2 … xm``."""
    return ShuffleWord(p, tuple(Letter(LetterKind.X, s) for s in range(1, p.m + 1)))


def top_word(p: Params) -> ShuffleWord:
    """The word ``y1 y2 … yn``."""
    return ShuffleWord(p, tuple(Letter(LetterKind.Y, t) for t in range(1, p.n + 1)))


def inversion_set(w: ShuffleWord) -> InversionSet:
    """Return the pairs ``(s, t)`` such that ``y_t`` occurs before ``x_s`` in ``w``."""
    return w.inversions


def restrict(u: ShuffleWord, v: ShuffleWord) -> ShuffleWord:
    """Return the subsequence of ``u`` made of the letters occurring in ``v``."""
    keep = set(v.letters)
    return ShuffleWord(u.params, tuple(a for a in u.letters if a in keep))


@lru_cache(maxsize=4096)
def pair_mask(n: int, x_mask: int, y_mask: int) -> int:
    """Inversion-mask bits of pairs ``(s, t)`` with ``x_s ∈ x_mask`` and ``y_t ∈ y_mask``."""
    mask = 0
    s = 0
    while x_mask >> s:
        if x_mask >> s & 1:
            mask |= y_mask << (s * n)
        s += 1
    return mask


def _common_pairs(u: ShuffleWord, v: ShuffleWord) -> int:
    return pair_mask(u.params.n, u.x_mask & v.x_mask, u.y_mask & v.y_mask)


def leq_bub(u: ShuffleWord, v: ShuffleWord) -> bool:
    """Bubble order: ``v_x ⊆ u_x``, ``u_y ⊆ v_y`` and ``Inv(u_v) ⊆ Inv(v_u)``.

    Example:
        >>> p = Params(1, 1)
        >>> leq_bub(parse_word("x1 y1", p), parse_word("y1 x1", p))
        True
    """
    if v.x_mask & ~u.x_mask or u.y_mask & ~v.y_mask:
        return False
    return u.inversion_mask & _common_pairs(u, v) & ~v.inversion_mask == 0


def leq_shuf(u: ShuffleWord, v: ShuffleWord) -> bool:
    """Shuffle order: supports nested as for ``leq_bub`` and common letters ordered alike."""
    if v.x_mask & ~u.x_mask or u.y_mask & ~v.y_mask:
        return False
    return (u.inversion_mask ^ v.inversion_mask) & _common_pairs(u, v) == 0


def interface_residue(w: ShuffleWord) -> tuple[frozenset[Letter], frozenset[Letter]]:
    """Split the letters of ``w`` into interface (adjacent ``y x`` pairs) and residue.

    Example:
        >>> w = parse_word("y2 x1 x4 y3", Params(4, 3))
        >>> sorted(map(str, interface_residue(w)[0]))
        ['x1', 'y2']
    """
    interface: set[Letter] = set()
    for left, right in zip(w.letters, w.letters[1:], strict=False):
        if left.kind is LetterKind.Y and right.kind is LetterKind.X:
            interface.update((left, right))
    residue = frozenset(a for a in w.letters if a not in interface)
    return frozenset(interface), residue


def shuf_rank(w: ShuffleWord) -> int:
    """Rank in the shuffle lattice: deleted x-letters plus inserted y-letters."""
    return (w.params.m - len(w.x_indices)) + len(w.y_indices)


def dualize(w: ShuffleWord) -> ShuffleWord:
    """Swap the alphabets letter by letter, keeping the word order.

    Maps Shuf(m,n) to Shuf(n,m); ``x_s`` becomes ``y_s`` and ``y_t`` becomes ``x_t``.
    """
    swap = {LetterKind.X: LetterKind.Y, LetterKind.Y: LetterKind.X}
    return ShuffleWord(w.params.dual, tuple(Letter(swap[a.kind], a.index) for a in w.letters))
