"""Simplicial complexes stored by facets over an indexed vertex set.

Faces are integer bit masks over the complex's vertex list (kept in canonical
vertex order), so subset tests, intersections and sizes are single integer
operations. Faces are never stored, only enumerated:

- for flag complexes built with a compatibility relation, as the cliques of
  that relation, each generated exactly once;
- otherwise by downward closure of the facets, deduplicated.

Example:
    >>> from bubblelab.word import x_loop, y_loop
    >>> c = SimplicialComplex.from_facets([frozenset({x_loop(1), y_loop(1)})])
    >>> c.f_vector()
    [1, 2, 1]
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from collections.abc import Callable, Iterable, Iterator, Sequence
from functools import cached_property
from itertools import combinations
from math import comb

import networkx as nx

from bubblelab.complex.models import (
    BWTables,
    ComplexKind,
    FaceNotInComplexError,
    JoinOverlapError,
    NotAFacetPermutationError,
    NotPureError,
    ShellingResult,
    StructuralReport,
)
from bubblelab.word.models import CVertex, Face, Params, vertex_key

logger = logging.getLogger(__name__)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Every submask of ``mask``, from ``mask`` down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal masks, largest first.

    Distinct masks of equal size never contain each other, so each mask is
    only tested against the strictly larger survivors.
    """
    kept: list[int] = []
    larger = 0
    previous_size = -1
    for mask in sorted(set(masks), key=lambda m: (-m.bit_count(), m)):
        if mask.bit_count() != previous_size:
            larger = len(kept)
            previous_size = mask.bit_count()
        if not any(mask & other == mask for other in kept[:larger]):
            kept.append(mask)
    return kept


def iter_cliques(compatible: Sequence[int]) -> Iterator[int]:
    """Yield every clique of a graph given by neighbour masks, each once.

    A clique is extended only by vertices of higher index, so every vertex
    set is reached along exactly one path.
    """
    stack = [(0, (1 << len(compatible)) - 1)]
    while stack:
        face, candidates = stack.pop()
        yield face
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            stack.append((face | low, candidates & compatible[low.bit_length() - 1]))


class SimplicialComplex:
    """Immutable simplicial complex on loop/edge vertices.

    Attributes:
        kind: Origin of the complex.
        params: Alphabet sizes for constructed complexes, None when derived.

    Thread Safety:
        Instances are read-only after construction and safe to share.
    """

    def __init__(
        self,
        vertices: Sequence[CVertex],
        facet_masks: Iterable[int],
        kind: ComplexKind = ComplexKind.DERIVED,
        params: Params | None = None,
        compatible: Sequence[int] | None = None,
    ) -> None:
        """Create a complex from facet masks over ``vertices``.

        Args:
            vertices: Vertex list in canonical order; bit ``i`` stands for ``vertices[i]``.
            facet_masks: Generating faces; non-maximal ones are dropped.
            kind: Origin of the complex.
            params: Alphabet sizes, if constructed.
            compatible: For flag complexes, ``compatible[i]`` is the mask of
                vertices adjacent to vertex ``i``. Faces are then enumerated as
                cliques instead of by closure.
        """
        self._vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        self._facets = tuple(maximal_masks(facet_masks)) or (0,)
        self.kind = kind
        self.params = params
        self._compatible = tuple(compatible) if compatible is not None else None

    @classmethod
    def from_facets(
        cls,
        facets: Iterable[Face],
        kind: ComplexKind = ComplexKind.DERIVED,
        params: Params | None = None,
    ) -> SimplicialComplex:
        """Build the complex generated by ``facets``; its vertices are their union."""
        facet_list = [frozenset(f) for f in facets]
        vertices = sorted({v for f in facet_list for v in f}, key=vertex_key)
        index = {v: i for i, v in enumerate(vertices)}
        masks = [sum(1 << index[v] for v in f) for f in facet_list]
        return cls(vertices, masks, kind, params)

    @classmethod
    def simplex(cls, vertices: Iterable[CVertex]) -> SimplicialComplex:
        """The full simplex on ``vertices``."""
        return cls.from_facets([frozenset(vertices)])

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(kind={self.kind.value}, vertices={len(self._vertices)}, "
            f"facets={len(self._facets)})"
        )

    # -- Accessors -----------------------------------------------------------

    @property
    def vertices(self) -> tuple[CVertex, ...]:
        """Vertices in canonical order."""
        return self._vertices

    @property
    def facet_masks(self) -> tuple[int, ...]:
        """Facet masks, largest first."""
        return self._facets

    @cached_property
    def facets(self) -> tuple[Face, ...]:
        """Facets as vertex sets, largest first."""
        return tuple(self.face_of(mask) for mask in self._facets)

    @property
    def dimension(self) -> int:
        """Largest face size minus one (``-1`` for ``{∅}``)."""
        return self._facets[0].bit_count() - 1

    def face_of(self, mask: int) -> Face:
        """Decode a mask into a vertex set."""
        return frozenset(self._vertices[i] for i in bits(mask))

    def mask_of(self, face: Iterable[CVertex]) -> int:
        """Encode a vertex set.

        Raises:
            FaceNotInComplexError: If some vertex is not a vertex of the complex.
        """
        members = frozenset(face)
        mask = 0
        for v in members:
            if v not in self._index:
                raise FaceNotInComplexError(members)
            mask |= 1 << self._index[v]
        return mask

    def contains_mask(self, mask: int) -> bool:
        """True if the face encoded by ``mask`` belongs to the complex."""
        return any(mask & facet == mask for facet in self._facets)

    def __contains__(self, face: object) -> bool:
        if not isinstance(face, frozenset | set):
            return False
        try:
            mask = self.mask_of(face)
        except FaceNotInComplexError:
            return False
        return self.contains_mask(mask)

    def same_faces(self, other: SimplicialComplex) -> bool:
        """True if both complexes have the same facets as labeled vertex sets."""
        return set(self.facets) == set(other.facets)

    # -- Faces ---------------------------------------------------------------

    def iter_face_masks(self) -> Iterator[int]:
        """Yield every face mask exactly once (including the empty face)."""
        if self._compatible is not None:
            yield from iter_cliques(self._compatible)
            return
        seen: set[int] = set()
        for facet in self._facets:
            for sub in submasks(facet):
                if sub not in seen:
                    seen.add(sub)
                    yield sub

    def iter_faces(self) -> Iterator[Face]:
        """Yield every face as a vertex set."""
        for mask in self.iter_face_masks():
            yield self.face_of(mask)

    def faces(self) -> list[Face]:
        """All faces as vertex sets."""
        return list(self.iter_faces())

    def f_vector(self) -> list[int]:
        """``[f_{-1}, f_0, …, f_{d-1}]`` where ``f_{k-1}`` counts faces of size ``k``."""
        counts = Counter(mask.bit_count() for mask in self.iter_face_masks())
        return [counts[k] for k in range(self.dimension + 2)]

    def h_vector(self) -> list[int]:
        """``h_i = Σ_k (-1)^(i-k) C(d-k, i-k) f_{k-1}`` for ``i = 0..d``."""
        f = self.f_vector()
        d = self.dimension + 1
        return [
            sum((-1) ** (i - k) * comb(d - k, i - k) * f[k] for k in range(i + 1))
            for i in range(d + 1)
        ]

    def euler(self) -> int:
        """Reduced Euler characteristic ``-f(-1) = Σ_k (-1)^(k-1) f_{k-1}``."""
        return sum((-1) ** (k - 1) * count for k, count in enumerate(self.f_vector()))

    # -- Derived complexes ---------------------------------------------------

    def _derived(self, masks: Iterable[int]) -> SimplicialComplex:
        return SimplicialComplex.from_facets([self.face_of(mask) for mask in masks])

    def link(self, face: Iterable[CVertex]) -> SimplicialComplex:
        """``{G : G ∩ F = ∅, G ∪ F ∈ C}``.

        Raises:
            FaceNotInComplexError: If ``face`` is not a face.
        """
        members = frozenset(face)
        mask = self.mask_of(members)
        above = [facet & ~mask for facet in self._facets if facet & mask == mask]
        if not above:
            raise FaceNotInComplexError(members)
        return self._derived(above)

    def deletion(self, face: Iterable[CVertex]) -> SimplicialComplex:
        """``{G ∈ C : F ⊄ G}``; for a single vertex, the faces avoiding it.

        Raises:
            FaceNotInComplexError: If ``face`` is not a face.
        """
        members = frozenset(face)
        mask = self.mask_of(members)
        if not self.contains_mask(mask):
            raise FaceNotInComplexError(members)
        generators: list[int] = []
        for facet in self._facets:
            if facet & mask != mask:
                generators.append(facet)
            else:
                generators.extend(facet & ~(1 << i) for i in bits(mask))
        return self._derived(generators)

    def relabel(self, mapping: Callable[[CVertex], CVertex]) -> SimplicialComplex:
        """Apply a vertex bijection."""
        return SimplicialComplex.from_facets(
            [frozenset(mapping(v) for v in facet) for facet in self.facets]
        )

    # -- Structure -----------------------------------------------------------

    def is_pure(self) -> bool:
        """True if all facets have the same size."""
        return len({facet.bit_count() for facet in self._facets}) == 1

    def is_flag(self) -> bool:
        """True if every set of pairwise adjacent vertices is a face."""
        adjacent = [0] * len(self._vertices)
        count = 0
        for mask in self.iter_face_masks():
            count += 1
            if mask.bit_count() == 2:
                i, j = bits(mask)
                adjacent[i] |= 1 << j
                adjacent[j] |= 1 << i
        return sum(1 for _ in iter_cliques(adjacent)) == count

    def is_thin(self) -> bool:
        """True if every face of size ``d - 1`` lies in exactly two facets."""
        d = self._facets[0].bit_count()
        if d == 0:
            return True
        containing: Counter[int] = Counter()
        for facet in self._facets:
            size = facet.bit_count()
            if size == d:
                for i in bits(facet):
                    containing[facet & ~(1 << i)] += 1
            elif size == d - 1:
                containing[facet] += 1
        return all(count == 2 for count in containing.values())

    def structural_checks(self) -> StructuralReport:
        """Flag, pure and thin tests in one report."""
        return StructuralReport(flag=self.is_flag(), pure=self.is_pure(), thin=self.is_thin())

    def check_shelling(self, order: Sequence[Face]) -> ShellingResult:
        """Test a facet order against the shelling condition.

        ``F_k`` must meet the complex generated by the earlier facets in a pure
        complex of dimension ``dim F_k - 1``. Its restriction is the set of
        vertices ``v`` such that ``F_k \\ {v}`` already occurs; the condition
        holds iff every earlier intersection misses some restriction vertex.

        Raises:
            NotAFacetPermutationError: If ``order`` is not a permutation of the facets.
        """
        masks = [self.mask_of(face) for face in order]
        if len(masks) != len(self._facets) or set(masks) != set(self._facets):
            raise NotAFacetPermutationError("shelling order must list every facet exactly once")
        restrictions: list[Face] = []
        for k, facet in enumerate(masks):
            meets = {facet & earlier for earlier in masks[:k]}
            restriction = 0
            for i in bits(facet):
                if facet & ~(1 << i) in meets:
                    restriction |= 1 << i
            if any(restriction & ~meet == 0 for meet in meets):
                return ShellingResult(False, tuple(restrictions), k)
            restrictions.append(self.face_of(restriction))
        return ShellingResult(True, tuple(restrictions))

    def degree_masks(self) -> dict[int, int]:
        """Degree of every face: the size of the largest facet containing it."""
        degree: dict[int, int] = {}
        for facet in self._facets:
            size = facet.bit_count()
            for mask in submasks(facet):
                if degree.get(mask, -1) < size:
                    degree[mask] = size
        return degree

    def bw_tables(self) -> BWTables:
        """Björner–Wachs tables: faces counted by degree ``i`` and size ``j``."""
        f = dict(Counter((deg, mask.bit_count()) for mask, deg in self.degree_masks().items()))
        h: dict[tuple[int, int], int] = {}
        for i in sorted({deg for deg, _ in f}):
            for j in range(i + 1):
                value = sum(
                    (-1) ** (j - k) * comb(i - k, j - k) * f.get((i, k), 0) for k in range(j + 1)
                )
                if value:
                    h[(i, j)] = value
        return BWTables(f=f, h=h)

    def dual_graph(self) -> nx.Graph:
        """Graph on facets, adjacent iff they share a ridge.

        Raises:
            NotPureError: If the complex is not pure.
        """
        if not self.is_pure():
            raise NotPureError("complex not pure")
        by_ridge: defaultdict[int, list[int]] = defaultdict(list)
        for facet in self._facets:
            for i in bits(facet):
                by_ridge[facet & ~(1 << i)].append(facet)
        graph = nx.Graph()
        graph.add_nodes_from(self.facets)
        for sharing in by_ridge.values():
            for a, b in combinations(sharing, 2):
                graph.add_edge(self.face_of(a), self.face_of(b))
        return graph


def flag_complex(
    vertices: Sequence[CVertex],
    compatible: Callable[[CVertex, CVertex], bool],
    kind: ComplexKind,
    params: Params | None = None,
) -> SimplicialComplex:
    """Clique complex of a compatibility relation; facets are the maximal cliques."""
    neighbours = neighbour_masks(vertices, compatible)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vertices)))
    graph.add_edges_from((i, j) for i, mask in enumerate(neighbours) for j in bits(mask) if i < j)
    facets = [sum(1 << i for i in clique) for clique in nx.find_cliques(graph)]
    return SimplicialComplex(vertices, facets, kind, params, neighbours)


def neighbour_masks(
    vertices: Sequence[CVertex], compatible: Callable[[CVertex, CVertex], bool]
) -> list[int]:
    """Adjacency of a compatibility relation as one bit mask per vertex."""
    neighbours = [0] * len(vertices)
    for i, j in combinations(range(len(vertices)), 2):
        if compatible(vertices[i], vertices[j]):
            neighbours[i] |= 1 << j
            neighbours[j] |= 1 << i
    return neighbours


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """Join ``{F ⊎ G}`` of complexes on disjoint vertex sets.

    Raises:
        JoinOverlapError: If the vertex sets intersect.
    """
    shared = set(first.vertices) & set(second.vertices)
    if shared:
        names = ", ".join(sorted(str(v) for v in shared))
        raise JoinOverlapError(f"cannot join complexes sharing vertices {names}")
    return SimplicialComplex.from_facets([f | g for f in first.facets for g in second.facets])
