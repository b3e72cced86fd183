"""The complexes Γ(m,n), Δ(m,n), their positive parts and the left-leaning complex.

Vertices are loops at the letters and edges ``{x_s, y_t}``. Γ(m,n) uses each
letter at most once and forbids crossing edges; Δ(m,n) also admits the
sentinels ``x_0`` and ``y_0`` in edges, allows edges to share letters, and
forbids a letter from carrying both a loop and an edge. Both are flag
complexes of their pairwise compatibility relation.

Shuffle words index the faces of Γ (through the lower-cover labels) and the
facets of Δ (through :func:`phi`).
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable
from functools import lru_cache
from itertools import combinations

import networkx as nx

from bubblelab.complex.engine import SimplicialComplex, bits, flag_complex, neighbour_masks
from bubblelab.complex.models import (
    ComplexKind,
    IntervalMismatchError,
    KInterval,
    NotADeltaFaceError,
    RidgeType,
)
from bubblelab.core.limits import Limits, resolve_limits
from bubblelab.word import (
    CVertex,
    Edge,
    Face,
    Letter,
    LetterKind,
    Loop,
    Params,
    ShuffleWord,
    downward_labels,
    enumerate_words,
    leq_bub,
)

logger = logging.getLogger(__name__)

X, Y = LetterKind.X, LetterKind.Y

_CAPS = {
    ComplexKind.GAMMA: "max_r_gamma",
    ComplexKind.GAMMA_PLUS: "max_r_gamma",
    ComplexKind.LEFT_LEANING: "max_r_gamma",
    ComplexKind.DELTA: "max_r_delta",
    ComplexKind.DELTA_PLUS: "max_r_delta",
}


def _loops(p: Params) -> list[Loop]:
    return [Loop(Letter(X, s)) for s in range(1, p.m + 1)] + [
        Loop(Letter(Y, t)) for t in range(1, p.n + 1)
    ]


def gamma_vertices(p: Params, loops: bool = True) -> list[CVertex]:
    """Vertices of Γ(m,n) in canonical order; ``loops=False`` keeps edges only."""
    edges: list[CVertex] = [Edge(s, t) for s in range(1, p.m + 1) for t in range(1, p.n + 1)]
    return [*_loops(p), *edges] if loops else edges


def delta_vertices(p: Params, loops: bool = True) -> list[CVertex]:
    """Vertices of Δ(m,n) in canonical order; ``loops=False`` keeps edges only."""
    edges: list[CVertex] = [
        Edge(s, t) for s in range(p.m + 1) for t in range(p.n + 1) if (s, t) != (0, 0)
    ]
    return [*_loops(p), *edges] if loops else edges


def letters_of(vertex: CVertex) -> tuple[Letter, ...]:
    """Letters touched by a vertex, sentinels included."""
    if isinstance(vertex, Loop):
        return (vertex.letter,)
    return (Letter(X, vertex.x), Letter(Y, vertex.y))


def gamma_compatible(a: CVertex, b: CVertex) -> bool:
    """Two vertices span an edge of Γ: no shared letter, no crossing."""
    if set(letters_of(a)) & set(letters_of(b)):
        return False
    return not (isinstance(a, Edge) and isinstance(b, Edge) and a.crosses(b))


def delta_compatible(a: CVertex, b: CVertex) -> bool:
    """Two vertices span an edge of Δ: no loop on an edged letter, no crossing."""
    if isinstance(a, Loop) and isinstance(b, Loop):
        return True
    if isinstance(a, Edge) and isinstance(b, Edge):
        return not a.crosses(b)
    loop, edge = (a, b) if isinstance(a, Loop) else (b, a)
    assert isinstance(loop, Loop) and isinstance(edge, Edge)
    return loop.letter not in letters_of(edge)


def delta_violation(face: Face, p: Params) -> str | None:
    """Return why ``face`` is not a face of Δ(m,n), or None if it is."""
    edged: set[Letter] = set()
    for vertex in face:
        if isinstance(vertex, Loop):
            bound = p.m if vertex.letter.kind is X else p.n
            if vertex.letter.index > bound:
                return f"loop {vertex} out of range"
        else:
            if vertex.x > p.m or vertex.y > p.n:
                return f"edge {vertex} out of range"
            edged.update(letters_of(vertex))
    for vertex in face:
        if isinstance(vertex, Loop) and vertex.letter in edged:
            return f"letter {vertex} carries a loop and an edge"
    edges = [v for v in face if isinstance(v, Edge)]
    for e, f in combinations(edges, 2):
        if e.crosses(f):
            return f"edges {e} and {f} cross"
    return None


def is_delta_face(face: Face, p: Params) -> bool:
    """Return True if ``face`` satisfies the noncrossing bipartite conditions."""
    return delta_violation(face, p) is None


def _require_delta_face(face: Face, p: Params) -> None:
    problem = delta_violation(face, p)
    if problem is not None:
        raise NotADeltaFaceError(face, problem)


def phi(w: ShuffleWord) -> Face:
    """Facet of Δ(m,n) indexed by ``w``.

    Absent letters get loops; every present letter is joined to the nearest
    preceding letter of the other alphabet in ``x_0 y_0 w``.

    Example:
        >>> from bubblelab.word import format_face, parse_word
        >>> format_face(phi(parse_word("x2 y2 y3 x3", Params(3, 3))))
        '{x1, y1, x2-y0, x2-y2, x2-y3, x3-y3}'
    """
    face: set[CVertex] = set()
    last = {X: 0, Y: 0}
    for letter in w.letters:
        if letter.kind is X:
            face.add(Edge(letter.index, last[Y]))
        else:
            face.add(Edge(last[X], letter.index))
        last[letter.kind] = letter.index
    present = set(w.letters)
    face.update(loop for loop in _loops(w.params) if loop.letter not in present)
    return frozenset(face)


def _components(face: Face, sentinels: bool = False) -> list[nx.Graph]:
    graph = nx.Graph()
    if sentinels:
        graph.add_edge(Letter(X, 0), Letter(Y, 0))
    graph.add_edges_from(letters_of(v) for v in face if isinstance(v, Edge))
    return [graph.subgraph(nodes).copy() for nodes in nx.connected_components(graph)]


def _tree_word(tree: nx.Graph) -> list[Letter]:
    """Letters of a tree component, peeled from the rightmost letters."""
    if tree.number_of_edges() == 1:
        ((a, b),) = tree.edges
        return [a, b] if a.kind is X else [b, a]
    right_x = max(v for v in tree if v.kind is X)
    right_y = max(v for v in tree if v.kind is Y)
    leaf = right_x if tree.degree(right_x) == 1 else right_y
    rest = tree.copy()
    rest.remove_node(leaf)
    return _tree_word(rest) + [leaf]


def face_to_covering_word(face: Face, p: Params) -> ShuffleWord:
    """Return a word ``w`` with ``face ⊆ phi(w)``.

    Each tree component of the edges contributes a word built by repeatedly
    appending the leaf among its rightmost x- and y-letter; the component words
    are concatenated from left to right and the sentinels dropped.

    Raises:
        NotADeltaFaceError: If ``face`` is not a face of Δ(m,n).
    """
    _require_delta_face(face, p)
    trees = sorted(
        _components(face), key=lambda tree: min(v.index for v in tree if v.kind is X)
    )
    letters = [letter for tree in trees for letter in _tree_word(tree) if letter.index > 0]
    w = ShuffleWord(p, tuple(letters))
    if not face <= phi(w):
        raise NotADeltaFaceError(face, f"no facet found through word {w}")
    return w


def k_interval(face: Face, p: Params, limits: Limits | None = None) -> KInterval:
    """Words whose Δ-facet contains ``face``, as a bubble interval.

    Raises:
        NotADeltaFaceError: If ``face`` is not a face of Δ(m,n).
        IntervalMismatchError: If the containment set is not an interval.
        ResourceCapError: If ``m + n`` exceeds ``max_r_words``.
    """
    _require_delta_face(face, p)
    words = enumerate_words(p, limits)
    members = frozenset(w for w in words if face <= phi(w))
    bottoms = [u for u in members if all(leq_bub(u, v) for v in members)]
    tops = [v for v in members if all(leq_bub(u, v) for u in members)]
    if len(bottoms) != 1 or len(tops) != 1:
        raise IntervalMismatchError("facets through the face have no least or greatest word")
    bottom, top = bottoms[0], tops[0]
    between = frozenset(w for w in words if leq_bub(bottom, w) and leq_bub(w, top))
    if between != members:
        raise IntervalMismatchError(f"facets through the face differ from [{bottom}, {top}]")
    return KInterval(bottom, top, members)


def classify_ridge(face: Face, p: Params) -> RidgeType:
    """Classify a ridge of Δ(m,n) by how it extends to its two facets.

    The sentinels ``x_0`` and ``y_0`` count as one tree component that is always
    present, so a ridge with a single edge ``{x_s, y_t}`` and no isolated letter
    has two tree components.

    Raises:
        NotADeltaFaceError: If ``face`` is not a Δ-face with ``m + n - 1`` vertices.
    """
    _require_delta_face(face, p)
    if len(face) != p.r - 1:
        raise NotADeltaFaceError(face, f"a ridge has {p.r - 1} vertices")
    if not any(isinstance(v, Edge) for v in face):
        return RidgeType.LOOPS_ONLY
    trees = _components(face, sentinels=True)
    covered = {v.letter for v in face if isinstance(v, Loop)}
    covered.update(letter for tree in trees for letter in tree)
    alphabet = [loop.letter for loop in _loops(p)]
    isolated = [letter for letter in alphabet if letter not in covered]
    if len(isolated) == 1 and len(trees) == 1:
        return RidgeType.ISOLATED_LETTER
    if not isolated and len(trees) == 2:
        return RidgeType.TWO_TREES
    raise NotADeltaFaceError(face, "not a ridge")


def build_complex(
    kind: ComplexKind, p: Params, limits: Limits | None = None
) -> SimplicialComplex:
    """Build Γ, Γ⁺, Δ, Δ⁺ or the left-leaning complex for ``p``.

    Γ(m,n) is read off the lower-cover labels of all words and Δ(m,n) off the
    facets ``phi(w)``; positive parts drop every loop; the left-leaning complex
    keeps the faces of Γ⁺(n,n) whose edges ``{x_s, y_t}`` all have ``s > t``.

    Raises:
        ValueError: For ``DERIVED``, or a left-leaning complex with ``m != n``.
        ResourceCapError: If ``m + n`` exceeds the cap of the kind.
    """
    if kind is ComplexKind.DERIVED:
        raise ValueError("derived complexes come from link, deletion or join")
    if kind is ComplexKind.LEFT_LEANING and p.m != p.n:
        raise ValueError(f"the left-leaning complex needs m == n, got m={p.m}, n={p.n}")
    resolve_limits(limits).check(_CAPS[kind], p.r)
    return _build_complex(kind, p)


@lru_cache(maxsize=32)
def _build_complex(kind: ComplexKind, p: Params) -> SimplicialComplex:
    start = time.perf_counter()
    if kind is ComplexKind.GAMMA:
        complex_ = _gamma_from_words(p)
    elif kind is ComplexKind.DELTA:
        complex_ = _delta_from_words(p)
    elif kind is ComplexKind.GAMMA_PLUS:
        complex_ = flag_complex(gamma_vertices(p, loops=False), gamma_compatible, kind, p)
    elif kind is ComplexKind.DELTA_PLUS:
        complex_ = flag_complex(delta_vertices(p, loops=False), delta_compatible, kind, p)
    else:
        left = [v for v in gamma_vertices(p, loops=False) if isinstance(v, Edge) and v.x > v.y]
        complex_ = flag_complex(left, gamma_compatible, kind, p)
    elapsed = time.perf_counter() - start
    logger.info(
        "Built %s(%d,%d): %d vertices, %d facets in %.2fs",
        kind.value,
        p.m,
        p.n,
        len(complex_.vertices),
        len(complex_.facet_masks),
        elapsed,
    )
    return complex_


def _gamma_from_words(p: Params) -> SimplicialComplex:
    vertices = gamma_vertices(p)
    index = {v: i for i, v in enumerate(vertices)}
    neighbours = neighbour_masks(vertices, gamma_compatible)
    faces = {
        sum(1 << index[v] for v in downward_labels(w))
        for w in enumerate_words(p, Limits.unbounded())
    }
    everything = (1 << len(vertices)) - 1
    facets = []
    for face in faces:
        common = everything & ~face
        for i in bits(face):
            common &= neighbours[i]
        if not any(face | 1 << i in faces for i in bits(common)):
            facets.append(face)
    return SimplicialComplex(vertices, facets, ComplexKind.GAMMA, p, neighbours)


def _delta_from_words(p: Params) -> SimplicialComplex:
    vertices = delta_vertices(p)
    index = {v: i for i, v in enumerate(vertices)}
    neighbours = neighbour_masks(vertices, delta_compatible)
    facets = [
        sum(1 << index[v] for v in phi(w)) for w in enumerate_words(p, Limits.unbounded())
    ]
    return SimplicialComplex(vertices, facets, ComplexKind.DELTA, p, neighbours)


def reindex_vertex(vertex: CVertex, x_map: dict[int, int], y_map: dict[int, int]) -> CVertex:
    """Rename the letters of a vertex; indices missing from a map are kept."""
    if isinstance(vertex, Loop):
        table = x_map if vertex.letter.kind is X else y_map
        index = vertex.letter.index
        return Loop(Letter(vertex.letter.kind, table.get(index, index)))
    return Edge(x_map.get(vertex.x, vertex.x), y_map.get(vertex.y, vertex.y))


def loop_link(
    kind: ComplexKind, p: Params, loops: Iterable[Loop], limits: Limits | None = None
) -> SimplicialComplex:
    """Link of a set of loops in Γ(m,n) or Δ(m,n), with the remaining letters renumbered.

    The surviving letters are renumbered ``1, 2, …`` in order (sentinels keep
    index 0), so the result is comparable with the complex of the smaller
    alphabets.

    Raises:
        ValueError: If ``kind`` is neither Γ nor Δ.
        FaceNotInComplexError: If the loops do not form a face.
    """
    if kind not in (ComplexKind.GAMMA, ComplexKind.DELTA):
        raise ValueError(f"loop links are taken in gamma or delta, not {kind.value}")
    removed = frozenset(loops)
    link = build_complex(kind, p, limits).link(removed)
    gone = {loop.letter for loop in removed}
    maps: dict[LetterKind, dict[int, int]] = {}
    for letter_kind, size in ((X, p.m), (Y, p.n)):
        kept = [i for i in range(1, size + 1) if Letter(letter_kind, i) not in gone]
        maps[letter_kind] = {old: new for new, old in enumerate(kept, start=1)}
    return link.relabel(lambda v: reindex_vertex(v, maps[X], maps[Y]))
