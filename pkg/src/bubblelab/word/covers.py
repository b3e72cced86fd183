"""Cover moves of the bubble and shuffle lattices.

Bubble covers are generated by two kinds of moves:

- transposition: an adjacent ``x_s y_t`` becomes ``y_t x_s``;
- right indel: ``x_i`` is deleted when it is followed by an x-letter or ends
  the word, or a missing ``y`` is inserted immediately before a y-letter or at
  the end of the word.

Shuffle covers are all single-letter x-deletions and y-insertions.
"""

from __future__ import annotations

from collections import deque

from bubblelab.word.core import interface_residue
from bubblelab.word.models import Letter, LetterKind, MoveKind, ShuffleWord

X, Y = LetterKind.X, LetterKind.Y


def _with_letters(w: ShuffleWord, letters: list[Letter] | tuple[Letter, ...]) -> ShuffleWord:
    return ShuffleWord(w.params, tuple(letters))


def _insert(w: ShuffleWord, position: int, letter: Letter) -> ShuffleWord:
    return _with_letters(w, w.letters[:position] + (letter,) + w.letters[position:])


def _delete(w: ShuffleWord, position: int) -> ShuffleWord:
    return _with_letters(w, w.letters[:position] + w.letters[position + 1 :])


def _swap(w: ShuffleWord, position: int) -> ShuffleWord:
    letters = list(w.letters)
    letters[position], letters[position + 1] = letters[position + 1], letters[position]
    return _with_letters(w, letters)


def _right_slot(w: ShuffleWord, letter: Letter) -> int:
    """Position right before the next larger letter of the same kind, else the end."""
    for position, present in enumerate(w.letters):
        if present.kind is letter.kind and present.index > letter.index:
            return position
    return len(w.letters)


def bub_upper_covers(w: ShuffleWord) -> frozenset[tuple[ShuffleWord, MoveKind]]:
    """Return every bubble cover above ``w`` tagged with its generating move.

    Example:
        >>> from bubblelab.word.core import parse_word
        >>> from bubblelab.word.models import Params
        >>> [(str(v), k.value) for v, k in bub_upper_covers(parse_word("-", Params(1, 1)))]
        [('y1', 'right-indel')]
    """
    letters = w.letters
    covers: set[tuple[ShuffleWord, MoveKind]] = set()
    for i in range(len(letters) - 1):
        if letters[i].kind is X and letters[i + 1].kind is Y:
            covers.add((_swap(w, i), MoveKind.TRANSPOSITION))
    for i, letter in enumerate(letters):
        if letter.kind is X and (i == len(letters) - 1 or letters[i + 1].kind is X):
            covers.add((_delete(w, i), MoveKind.RIGHT_INDEL))
    present = set(w.y_indices)
    for t in range(1, w.params.n + 1):
        if t not in present:
            y = Letter(Y, t)
            covers.add((_insert(w, _right_slot(w, y), y), MoveKind.RIGHT_INDEL))
    return frozenset(covers)


def bub_lower_covers(w: ShuffleWord) -> frozenset[tuple[ShuffleWord, MoveKind]]:
    """Return every bubble cover below ``w`` tagged with its generating move."""
    letters = w.letters
    covers: set[tuple[ShuffleWord, MoveKind]] = set()
    for i in range(len(letters) - 1):
        if letters[i].kind is Y and letters[i + 1].kind is X:
            covers.add((_swap(w, i), MoveKind.TRANSPOSITION))
    for i, letter in enumerate(letters):
        if letter.kind is Y and (i == len(letters) - 1 or letters[i + 1].kind is Y):
            covers.add((_delete(w, i), MoveKind.RIGHT_INDEL))
    present = set(w.x_indices)
    for s in range(1, w.params.m + 1):
        if s not in present:
            x = Letter(X, s)
            covers.add((_insert(w, _right_slot(w, x), x), MoveKind.RIGHT_INDEL))
    return frozenset(covers)


def in_degrees(w: ShuffleWord) -> tuple[int, int]:
    """Return ``(a, b)``: lower covers via transposition and via right indel.

    ``a`` is half the interface size, ``b`` counts missing x-letters plus
    y-letters in the residue.
    """
    interface, residue = interface_residue(w)
    a = len(interface) // 2
    b = (w.params.m - len(w.x_indices)) + sum(1 for letter in residue if letter.kind is Y)
    return a, b


def shuf_upper_covers(w: ShuffleWord) -> frozenset[ShuffleWord]:
    """Return all words obtained by one x-deletion or one y-insertion."""
    covers = {_delete(w, i) for i, letter in enumerate(w.letters) if letter.kind is X}
    present = set(w.y_indices)
    for t in range(1, w.params.n + 1):
        if t in present:
            continue
        lo = max((i + 1 for i, a in enumerate(w.letters) if a.kind is Y and a.index < t), default=0)
        hi = _right_slot(w, Letter(Y, t))
        covers.update(_insert(w, position, Letter(Y, t)) for position in range(lo, hi + 1))
    return frozenset(covers)


def indel_closure(u: ShuffleWord) -> frozenset[ShuffleWord]:
    """All words reachable from ``u`` by x-deletions and y-insertions (including ``u``)."""
    seen = {u}
    queue = deque([u])
    while queue:
        for v in shuf_upper_covers(queue.popleft()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)
