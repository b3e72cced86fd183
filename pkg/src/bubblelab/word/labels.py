"""Edge labels of the bubble lattice and the word ↔ Γ-face bijection.

Each bubble cover ``u ⋖ v`` carries a label: the loop ``x`` for a deletion of
``x``, the loop ``y`` for an insertion of ``y``, and the edge ``{x, y}`` for the
transposition creating the inversion ``(x, y)``. The set of labels of the lower
covers of a word is a face of the noncrossing matching complex Γ(m,n), and
every face arises from exactly one word.
"""

from __future__ import annotations

from itertools import combinations

from bubblelab.word.covers import bub_upper_covers
from bubblelab.word.models import (
    CVertex,
    Edge,
    Face,
    Letter,
    LetterKind,
    Loop,
    MoveKind,
    NotACoverError,
    NotAGammaFaceError,
    Params,
    ShuffleWord,
    format_face,
)

X, Y = LetterKind.X, LetterKind.Y


def cover_label(u: ShuffleWord, v: ShuffleWord) -> CVertex:
    """Return the label of the bubble cover ``u ⋖ v``.

    Raises:
        NotACoverError: If ``v`` does not cover ``u``.

    Example:
        >>> from bubblelab.word.core import parse_word
        >>> p = Params(1, 1)
        >>> str(cover_label(parse_word("x1 y1", p), parse_word("y1 x1", p)))
        'x1-y1'
    """
    moves = dict(bub_upper_covers(u))
    if v not in moves:
        raise NotACoverError(str(u), str(v))
    if moves[v] is MoveKind.TRANSPOSITION:
        ((s, t),) = v.inversions - u.inversions
        return Edge(s, t)
    if len(v) < len(u):
        (letter,) = set(u.letters) - set(v.letters)
    else:
        (letter,) = set(v.letters) - set(u.letters)
    return Loop(letter)


def downward_labels(w: ShuffleWord) -> Face:
    """Return the labels of all lower covers of ``w``.

    Edges come from adjacent ``y_t x_s`` pairs, loops from missing x-letters and
    from y-letters not immediately followed by an x-letter.
    """
    labels: set[CVertex] = set()
    letters = w.letters
    for i, letter in enumerate(letters):
        following = letters[i + 1] if i + 1 < len(letters) else None
        if letter.kind is Y:
            if following is not None and following.kind is X:
                labels.add(Edge(following.index, letter.index))
            else:
                labels.add(Loop(letter))
    present = set(w.x_indices)
    labels.update(Loop(Letter(X, s)) for s in range(1, w.params.m + 1) if s not in present)
    return frozenset(labels)


def gamma_violation(face: Face, p: Params) -> str | None:
    """Return why ``face`` is not a face of Γ(m,n), or None if it is."""
    used: set[Letter] = set()
    edges: list[Edge] = []
    for vertex in face:
        if isinstance(vertex, Loop):
            bound = p.m if vertex.letter.kind is X else p.n
            if vertex.letter.index > bound:
                return f"loop {vertex} out of range"
            letters = [vertex.letter]
        else:
            if not (1 <= vertex.x <= p.m and 1 <= vertex.y <= p.n):
                return f"edge {vertex} out of range"
            edges.append(vertex)
            letters = [Letter(X, vertex.x), Letter(Y, vertex.y)]
        for letter in letters:
            if letter in used:
                return f"letter {letter} used twice"
            used.add(letter)
    for e, f in combinations(edges, 2):
        if e.crosses(f):
            return f"edges {e} and {f} cross"
    return None


def is_gamma_face(face: Face, p: Params) -> bool:
    """Return True if ``face`` satisfies the noncrossing matching conditions."""
    return gamma_violation(face, p) is None


def word_from_labels(face: Face, p: Params) -> ShuffleWord:
    """Return the unique word whose lower-cover labels are ``face``.

    Start from the x-letters without a loop, put each edge's y immediately left
    of its x, then insert the looped y-letters in increasing order, each right
    before the next larger y-letter present or at the end.

    Raises:
        NotAGammaFaceError: If ``face`` is not a face of Γ(m,n).

    Example:
        >>> from bubblelab.word.models import x_loop, y_loop
        >>> str(word_from_labels(frozenset({x_loop(1), y_loop(1)}), Params(1, 1)))
        'y1'
    """
    problem = gamma_violation(face, p)
    if problem is not None:
        raise NotAGammaFaceError(format_face(face), problem)
    looped = {v.letter for v in face if isinstance(v, Loop)}
    partner = {v.x: v.y for v in face if isinstance(v, Edge)}
    letters: list[Letter] = []
    for s in range(1, p.m + 1):
        if Letter(X, s) in looped:
            continue
        if s in partner:
            letters.append(Letter(Y, partner[s]))
        letters.append(Letter(X, s))
    for t in sorted(a.index for a in looped if a.kind is Y):
        position = next(
            (i for i, a in enumerate(letters) if a.kind is Y and a.index > t),
            len(letters),
        )
        letters.insert(position, Letter(Y, t))
    return ShuffleWord(p, tuple(letters))
