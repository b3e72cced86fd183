"""Shuffle words, their orders, cover moves and cover labels.

Shuf(m,n) is the set of order-preserving, duplicate-free words over
``x_1..x_m`` and ``y_1..y_n``. Two partial orders live on it:

- the shuffle order (x-deletions and y-insertions),
- the bubble order (additionally, transpositions of adjacent ``x y`` pairs).

Serialization:
    Words are written as space-separated letters (``"y2 x1 x4 y3"``); the
    empty word is ``"-"``.
"""

from bubblelab.word.core import (
    bottom_word,
    dualize,
    enumerate_words,
    format_word,
    interface_residue,
    inversion_set,
    leq_bub,
    leq_shuf,
    pair_mask,
    parse_word,
    restrict,
    shuf_rank,
    top_word,
)
from bubblelab.word.covers import (
    bub_lower_covers,
    bub_upper_covers,
    in_degrees,
    indel_closure,
    shuf_upper_covers,
)
from bubblelab.word.labels import (
    cover_label,
    downward_labels,
    gamma_violation,
    is_gamma_face,
    word_from_labels,
)
from bubblelab.word.models import (
    CVertex,
    Edge,
    Face,
    InvalidWordError,
    InversionSet,
    Letter,
    LetterKind,
    Loop,
    MoveKind,
    NotACoverError,
    NotAGammaFaceError,
    Params,
    ShuffleWord,
    format_face,
    parse_letter,
    parse_vertex,
    sorted_face,
    vertex_key,
    x_loop,
    y_loop,
)

__all__ = [
    "CVertex",
    "Edge",
    "Face",
    "InvalidWordError",
    "InversionSet",
    "Letter",
    "LetterKind",
    "Loop",
    "MoveKind",
    "NotACoverError",
    "NotAGammaFaceError",
    "Params",
    "ShuffleWord",
    "bottom_word",
    "bub_lower_covers",
    "bub_upper_covers",
    "cover_label",
    "downward_labels",
    "dualize",
    "enumerate_words",
    "format_face",
    "format_word",
    "gamma_violation",
    "in_degrees",
    "indel_closure",
    "interface_residue",
    "inversion_set",
    "is_gamma_face",
    "leq_bub",
    "leq_shuf",
    "pair_mask",
    "parse_letter",
    "parse_vertex",
    "parse_word",
    "restrict",
    "shuf_rank",
    "shuf_upper_covers",
    "sorted_face",
    "top_word",
    "vertex_key",
    "word_from_labels",
    "x_loop",
    "y_loop",
]
