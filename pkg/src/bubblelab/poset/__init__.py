"""Finite posets and the two lattices on shuffle words.

The generic engine (:mod:`bubblelab.poset.engine`) works on dense boolean order
matrices; :mod:`bubblelab.poset.lattices` instantiates it on Bub(m,n) and
Shuf(m,n), and :mod:`bubblelab.poset.export` writes Hasse diagrams.
"""

from bubblelab.poset.engine import (
    FinitePoset,
    build_poset,
    check_anti_isomorphism,
    check_lattice,
    check_partial_order,
    interval,
    is_linear_extension,
    linear_extension,
    mobius,
)
from bubblelab.poset.export import to_dot, to_json, word_hasse_graph
from bubblelab.poset.lattices import (
    WordOrder,
    bubble_poset,
    order_matrix,
    shuffle_poset,
    word_poset,
)
from bubblelab.poset.models import (
    IncomparableError,
    LatticeCheck,
    MobiusMatrix,
    NotAPartialOrderError,
)

__all__ = [
    "FinitePoset",
    "IncomparableError",
    "LatticeCheck",
    "MobiusMatrix",
    "NotAPartialOrderError",
    "WordOrder",
    "bubble_poset",
    "build_poset",
    "check_anti_isomorphism",
    "check_lattice",
    "check_partial_order",
    "interval",
    "is_linear_extension",
    "linear_extension",
    "mobius",
    "order_matrix",
    "shuffle_poset",
    "to_dot",
    "to_json",
    "word_hasse_graph",
    "word_poset",
]
