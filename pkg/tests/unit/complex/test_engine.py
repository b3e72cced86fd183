"""Unit tests for the SimplicialComplex engine."""

import pytest

from bubblelab.complex import (
    ComplexKind,
    FaceNotInComplexError,
    JoinOverlapError,
    NotAFacetPermutationError,
    NotPureError,
    SimplicialComplex,
    build_complex,
    join,
)
from bubblelab.word import CVertex, Params, x_loop, y_loop

A, B, C, D = x_loop(1), x_loop(2), x_loop(3), x_loop(4)


def face(*vertices: CVertex) -> frozenset[CVertex]:
    """Shorthand for a face."""
    return frozenset(vertices)


@pytest.fixture()
def triangle_boundary() -> SimplicialComplex:
    """The three edges of a triangle."""
    return SimplicialComplex.from_facets([face(A, B), face(B, C), face(A, C)])


@pytest.fixture()
def two_segments() -> SimplicialComplex:
    """Two disjoint edges."""
    return SimplicialComplex.from_facets([face(A, B), face(C, D)])


class TestCounts:
    """Tests for f-vectors, h-vectors and the reduced Euler characteristic."""

    def test_triangle_boundary(self, triangle_boundary: SimplicialComplex) -> None:
        """f = (1, 3, 3), h = (1, 1, 1), χ̃ = -1."""
        assert triangle_boundary.dimension == 1
        assert triangle_boundary.f_vector() == [1, 3, 3]
        assert triangle_boundary.h_vector() == [1, 1, 1]
        assert triangle_boundary.euler() == -1

    def test_simplex_is_acyclic(self) -> None:
        """A full simplex has χ̃ = 0."""
        simplex = SimplicialComplex.simplex([A, B, C])
        assert simplex.f_vector() == [1, 3, 3, 1]
        assert simplex.euler() == 0

    def test_void_face_only(self) -> None:
        """{∅} has dimension -1 and χ̃ = -1."""
        empty = SimplicialComplex.from_facets([frozenset()])
        assert empty.dimension == -1
        assert empty.f_vector() == [1]
        assert empty.euler() == -1

    def test_membership(self, triangle_boundary: SimplicialComplex) -> None:
        """Faces are contained, non-faces and foreign vertices are not."""
        assert face(A) in triangle_boundary
        assert frozenset() in triangle_boundary
        assert face(A, B, C) not in triangle_boundary
        assert face(D) not in triangle_boundary

    def test_faces_are_listed_once(self, triangle_boundary: SimplicialComplex) -> None:
        """iter_faces yields each face exactly once."""
        faces = triangle_boundary.faces()
        assert len(faces) == len(set(faces)) == 7


class TestDerived:
    """Tests for link, deletion, relabel and join."""

    def test_link(self, triangle_boundary: SimplicialComplex) -> None:
        """The link of a vertex of a triangle boundary is two points."""
        link = triangle_boundary.link({A})
        assert set(link.facets) == {face(B), face(C)}

    def test_link_of_non_face(self, triangle_boundary: SimplicialComplex) -> None:
        """Links need a face."""
        with pytest.raises(FaceNotInComplexError):
            triangle_boundary.link({A, B, C})

    def test_deletion(self, triangle_boundary: SimplicialComplex) -> None:
        """Deleting a vertex of a triangle boundary leaves the opposite edge."""
        assert set(triangle_boundary.deletion({A}).facets) == {face(B, C)}

    def test_deletion_of_edge(self, triangle_boundary: SimplicialComplex) -> None:
        """Deleting an edge keeps its vertices."""
        deletion = triangle_boundary.deletion({A, B})
        assert set(deletion.facets) == {face(B, C), face(A, C)}

    def test_relabel(self, triangle_boundary: SimplicialComplex) -> None:
        """Relabeling applies the bijection to every facet."""
        swap = {A: y_loop(1), B: y_loop(2), C: y_loop(3)}
        relabeled = triangle_boundary.relabel(lambda v: swap[v])
        assert face(y_loop(1), y_loop(3)) in relabeled.facets

    def test_join(self) -> None:
        """A point joined with two points is a path of two edges."""
        points = SimplicialComplex.from_facets([face(B), face(C)])
        cone = join(SimplicialComplex.simplex([A]), points)
        assert set(cone.facets) == {face(A, B), face(A, C)}

    def test_join_overlap(self, triangle_boundary: SimplicialComplex) -> None:
        """Joining complexes with a common vertex is rejected."""
        with pytest.raises(JoinOverlapError, match="x1"):
            join(triangle_boundary, SimplicialComplex.simplex([A]))

    def test_same_faces(self, triangle_boundary: SimplicialComplex) -> None:
        """Facet order does not matter."""
        other = SimplicialComplex.from_facets([face(A, C), face(A, B), face(B, C), face(A)])
        assert triangle_boundary.same_faces(other)


class TestStructure:
    """Tests for the flag, pure and thin checks and the dual graph."""

    def test_triangle_boundary(self, triangle_boundary: SimplicialComplex) -> None:
        """Pure and thin but not flag."""
        report = triangle_boundary.structural_checks()
        assert (report.flag, report.pure, report.thin) == (False, True, True)

    def test_segments_are_not_thin(self, two_segments: SimplicialComplex) -> None:
        """Endpoints of segments lie in one facet."""
        assert two_segments.is_flag()
        assert not two_segments.is_thin()

    def test_void_is_thin_simplex_is_not(self) -> None:
        """{∅} is thin; a point is not."""
        assert SimplicialComplex.from_facets([frozenset()]).is_thin()
        assert not SimplicialComplex.simplex([A]).is_thin()

    def test_dual_graph(self, triangle_boundary: SimplicialComplex) -> None:
        """Facets of a triangle boundary pairwise share a vertex."""
        graph = triangle_boundary.dual_graph()
        assert graph.number_of_nodes() == 3
        assert graph.number_of_edges() == 3

    def test_dual_graph_needs_purity(self) -> None:
        """Γ(1,1) has facets of sizes 2 and 1."""
        with pytest.raises(NotPureError):
            build_complex(ComplexKind.GAMMA, Params(1, 1)).dual_graph()


class TestShelling:
    """Tests for check_shelling."""

    def test_shelling_order(self, triangle_boundary: SimplicialComplex) -> None:
        """Restriction sizes give the h-vector."""
        result = triangle_boundary.check_shelling([face(A, B), face(B, C), face(A, C)])
        assert result.success
        assert result.failure_index is None
        assert result.restrictions == (frozenset(), face(C), face(A, C))
        sizes = [len(r) for r in result.restrictions]
        assert [sizes.count(i) for i in range(3)] == triangle_boundary.h_vector()

    def test_disconnected_segments_fail(self, two_segments: SimplicialComplex) -> None:
        """The second segment meets the first in the empty face."""
        result = two_segments.check_shelling([face(A, B), face(C, D)])
        assert not result.success
        assert result.failure_index == 1

    def test_order_must_be_a_permutation(self, triangle_boundary: SimplicialComplex) -> None:
        """Missing facets are rejected."""
        with pytest.raises(NotAFacetPermutationError):
            triangle_boundary.check_shelling([face(A, B), face(B, C)])


class TestBWTables:
    """Tests for the degree-refined tables."""

    def test_gamma_one_one(self) -> None:
        """Γ(1,1): the isolated edge has degree 1, everything else degree 2."""
        tables = build_complex(ComplexKind.GAMMA, Params(1, 1)).bw_tables()
        assert tables.f == {(2, 0): 1, (2, 1): 2, (2, 2): 1, (1, 1): 1}
        assert tables.h == {(2, 0): 1, (1, 1): 1}

    def test_pure_complex_has_one_degree(self, triangle_boundary: SimplicialComplex) -> None:
        """For a pure complex the h-table is the h-vector."""
        tables = triangle_boundary.bw_tables()
        assert {i for i, _ in tables.f} == {2}
        assert [tables.h.get((2, j), 0) for j in range(3)] == triangle_boundary.h_vector()
