"""Vertex decomposability search and the shedding chain of Γ(m,n).

A complex is vertex decomposable if it is a simplex, or it has a shedding
vertex ``v`` such that ``link(v)`` and ``deletion(v)`` are vertex decomposable
and no facet of the link is a facet of the deletion.

The search runs on facet masks. Candidate vertices are tried edges first, in
``(x, y)`` order, then loops, so for Γ(m,n) the chain ``{x1,y1}, …, {x1,yn}``
is attempted first. Results are memoized on a relabeled form of each complex
(vertices renumbered in candidate order), so isomorphic sub-complexes met along
different branches are solved once.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence

from bubblelab.complex.constructions import build_complex
from bubblelab.complex.engine import SimplicialComplex, bits, join, maximal_masks
from bubblelab.complex.models import ComplexKind, VDNode
from bubblelab.core.limits import Limits, resolve_limits
from bubblelab.word import CVertex, Edge, Letter, LetterKind, Loop, Params, x_loop

logger = logging.getLogger(__name__)

Facets = tuple[int, ...]


def _priority(vertex: CVertex) -> tuple[int, int, int]:
    if isinstance(vertex, Edge):
        return (0, vertex.x, vertex.y)
    kind, index, _ = vertex.sort_key
    return (1, kind, index)


def _link(facets: Facets, v: int) -> Facets:
    bit = 1 << v
    return tuple(maximal_masks(f & ~bit for f in facets if f & bit))


def _deletion(facets: Facets, v: int) -> Facets:
    bit = 1 << v
    return tuple(maximal_masks(f & ~bit for f in facets))


class _Search:
    """Depth-first shedding-vertex search over facet masks."""

    def __init__(self) -> None:
        self.memo: dict[Facets, int | None] = {}

    def _relative(self, facets: Facets) -> tuple[Facets, list[int]]:
        support = 0
        for facet in facets:
            support |= facet
        order = list(bits(support))
        rank = {v: i for i, v in enumerate(order)}
        key = tuple(sorted(sum(1 << rank[v] for v in bits(f)) for f in facets))
        return key, order

    def shedding_vertex(self, facets: Facets) -> int | None:
        """Return a shedding vertex of a non-simplex, or None if there is none."""
        key, order = self._relative(facets)
        if key in self.memo:
            found = self.memo[key]
            return None if found is None else order[found]
        self.memo[key] = None
        for position, v in enumerate(order):
            link, deletion = _link(facets, v), _deletion(facets, v)
            if set(link) & set(deletion):
                continue
            if self.decomposable(link) and self.decomposable(deletion):
                self.memo[key] = position
                return v
        return None

    def decomposable(self, facets: Facets) -> bool:
        return len(facets) == 1 or self.shedding_vertex(facets) is not None

    def witness(self, facets: Facets, decode: SimplicialComplex) -> VDNode:
        faces = tuple(decode.face_of(f) for f in facets)
        if len(facets) == 1:
            return VDNode(faces)
        v = self.shedding_vertex(facets)
        assert v is not None
        return VDNode(
            faces,
            vertex=decode.vertices[v],
            link=self.witness(_link(facets, v), decode),
            deletion=self.witness(_deletion(facets, v), decode),
        )


def vertex_decomposition(
    complex_: SimplicialComplex, limits: Limits | None = None
) -> VDNode | None:
    """Find a vertex-decomposition witness, or None if the complex has none.

    Raises:
        ResourceCapError: If the complex has more than ``max_vd_vertices`` vertices.
    """
    resolve_limits(limits).check("max_vd_vertices", len(complex_.vertices))
    start = time.perf_counter()
    ordered = sorted(complex_.vertices, key=_priority)
    renumbered = SimplicialComplex(
        ordered, [_renumber(complex_, f, ordered) for f in complex_.facet_masks]
    )
    search = _Search()
    facets = renumbered.facet_masks
    result = search.witness(facets, renumbered) if search.decomposable(facets) else None
    elapsed = time.perf_counter() - start
    logger.info(
        "Vertex decomposition search on %d vertices: %s, %d sub-complexes in %.2fs",
        len(ordered),
        "found" if result is not None else "none",
        len(search.memo),
        elapsed,
    )
    return result


def _renumber(complex_: SimplicialComplex, mask: int, ordered: Sequence[CVertex]) -> int:
    position = {v: i for i, v in enumerate(ordered)}
    return sum(1 << position[v] for v in complex_.face_of(mask))


def validate_witness(complex_: SimplicialComplex, node: VDNode) -> bool:
    """Re-check a witness against the complex with the engine's own link and deletion."""
    if set(node.facets) != set(complex_.facets):
        return False
    if node.vertex is None:
        return len(complex_.facets) == 1
    if node.link is None or node.deletion is None:
        return False
    link = complex_.link({node.vertex})
    deletion = complex_.deletion({node.vertex})
    if set(link.facets) & set(deletion.facets):
        return False
    return validate_witness(link, node.link) and validate_witness(deletion, node.deletion)


def shift_vertex(vertex: CVertex, dx: int, dy: int) -> CVertex:
    """Translate the letter indices of a vertex."""
    if isinstance(vertex, Loop):
        delta = dx if vertex.letter.kind is LetterKind.X else dy
        return Loop(Letter(vertex.letter.kind, vertex.letter.index + delta))
    return Edge(vertex.x + dx, vertex.y + dy)


def shifted_gamma(p: Params, dx: int, dy: int, limits: Limits | None = None) -> SimplicialComplex:
    """Γ(m,n) on the letters ``x_{dx+1}.. , y_{dy+1}..``."""
    return build_complex(ComplexKind.GAMMA, p, limits).relabel(lambda v: shift_vertex(v, dx, dy))


def shedding_chain(p: Params, limits: Limits | None = None) -> list[SimplicialComplex]:
    """``Δ_0 = Γ(m,n)`` and ``Δ_t = Δ_{t-1}`` with the edge ``{x1, y_t}`` deleted.

    Raises:
        ValueError: If ``m == 0`` (there is no letter ``x1``).
    """
    if p.m == 0:
        raise ValueError("the shedding chain needs m >= 1")
    chain = [build_complex(ComplexKind.GAMMA, p, limits)]
    for t in range(1, p.n + 1):
        chain.append(chain[-1].deletion({Edge(1, t)}))
    return chain


def edge_link_matches(p: Params, s: int, t: int, limits: Limits | None = None) -> bool:
    """``link_Γ({x_s, y_t})`` equals ``Γ(s-1, t-1) * Γ(m-s, n-t)`` shifted past ``(s, t)``."""
    link = build_complex(ComplexKind.GAMMA, p, limits).link({Edge(s, t)})
    left = build_complex(ComplexKind.GAMMA, Params(s - 1, t - 1), limits)
    right = shifted_gamma(Params(p.m - s, p.n - t), s, t, limits)
    return link.same_faces(join(left, right))


def chain_end_matches(p: Params, limits: Limits | None = None) -> bool:
    """The last complex of the shedding chain is the cone ``{x1} * Γ(m-1, n)`` shifted by one."""
    apex = SimplicialComplex.simplex([x_loop(1)])
    cone = join(apex, shifted_gamma(Params(p.m - 1, p.n), 1, 0, limits))
    return shedding_chain(p, limits)[-1].same_faces(cone)


def chain_links_match(p: Params, t: int, limits: Limits | None = None) -> bool:
    """``link_{Δ_{t-1}}({x1, y_t})`` equals ``link_Γ({x1, y_t})``."""
    chain = shedding_chain(p, limits)
    vertex = {Edge(1, t)}
    return chain[t - 1].link(vertex).same_faces(chain[0].link(vertex))
