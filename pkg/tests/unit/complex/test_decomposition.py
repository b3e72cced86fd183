"""Unit tests for vertex decomposition and the shedding chain of Γ(m,n)."""

import pytest

from bubblelab.complex import (
    ComplexKind,
    SimplicialComplex,
    build_complex,
    chain_end_matches,
    chain_links_match,
    edge_link_matches,
    shedding_chain,
    shift_vertex,
    validate_witness,
    vertex_decomposition,
)
from bubblelab.core.limits import Limits, ResourceCapError
from bubblelab.word import Edge, Params, x_loop, y_loop


def cells(
    ms: range, ns: range, slow_from: int, skip: tuple[tuple[int, int], ...] = ()
) -> list[object]:
    """Cells (m, n) over the given ranges; cells from r = slow_from on are slow."""
    return [
        pytest.param(m, n, marks=pytest.mark.slow) if m + n >= slow_from else (m, n)
        for m in ms
        for n in ns
        if (m, n) not in skip
    ]


class TestVertexDecomposition:
    """Tests for vertex_decomposition and validate_witness."""

    @pytest.mark.parametrize(("m", "n"), cells(range(4), range(4), slow_from=5, skip=((0, 0),)))
    def test_gamma_is_vertex_decomposable(self, m: int, n: int) -> None:
        """Γ(m,n) has a validated witness."""
        gamma = build_complex(ComplexKind.GAMMA, Params(m, n))
        witness = vertex_decomposition(gamma)
        assert witness is not None
        assert validate_witness(gamma, witness)

    @pytest.mark.parametrize(("m", "n"), cells(range(1, 4), range(1, 4), slow_from=5))
    def test_witness_starts_with_the_x1_edges(self, m: int, n: int) -> None:
        """The deletion chain begins {x1,y1}, …, {x1,yn}."""
        witness = vertex_decomposition(build_complex(ComplexKind.GAMMA, Params(m, n)))
        assert witness is not None
        assert witness.deletion_chain()[:n] == [Edge(1, t) for t in range(1, n + 1)]

    def test_gamma_sheds_the_first_edges(self) -> None:
        """The witness for Γ(2,2) starts with {x1,y1}, {x1,y2}."""
        witness = vertex_decomposition(build_complex(ComplexKind.GAMMA, Params(2, 2)))
        assert witness is not None
        assert witness.deletion_chain()[:2] == [Edge(1, 1), Edge(1, 2)]

    def test_pentagon_is_vertex_decomposable(self) -> None:
        """Δ(1,1) is a 5-cycle."""
        delta = build_complex(ComplexKind.DELTA, Params(1, 1))
        witness = vertex_decomposition(delta)
        assert witness is not None
        assert validate_witness(delta, witness)
        assert witness.size() > 1

    def test_simplex_is_a_leaf(self) -> None:
        """A simplex needs no shedding vertex."""
        simplex = SimplicialComplex.simplex([x_loop(1), y_loop(1)])
        witness = vertex_decomposition(simplex)
        assert witness is not None
        assert witness.is_leaf
        assert witness.deletion_chain() == []

    def test_disconnected_segments_are_not_decomposable(self) -> None:
        """Two disjoint edges have no shedding vertex."""
        a, b, c, d = x_loop(1), x_loop(2), x_loop(3), x_loop(4)
        segments = SimplicialComplex.from_facets([frozenset({a, b}), frozenset({c, d})])
        assert vertex_decomposition(segments) is None

    def test_witness_for_another_complex_is_rejected(self) -> None:
        """Facets must match at the root."""
        witness = vertex_decomposition(build_complex(ComplexKind.GAMMA, Params(1, 1)))
        assert witness is not None
        assert not validate_witness(build_complex(ComplexKind.GAMMA, Params(2, 1)), witness)

    def test_cap(self) -> None:
        """max_vd_vertices bounds the search."""
        gamma = build_complex(ComplexKind.GAMMA, Params(2, 2))
        with pytest.raises(ResourceCapError):
            vertex_decomposition(gamma, Limits(max_vd_vertices=3))


class TestSheddingChain:
    """Tests for the chain Δ_0 ⊇ … ⊇ Δ_n."""

    def test_length(self) -> None:
        """One complex per deleted edge, plus Γ itself."""
        assert len(shedding_chain(Params(2, 3))) == 4

    def test_needs_an_x_letter(self) -> None:
        """m = 0 has no x1."""
        with pytest.raises(ValueError, match="m >= 1"):
            shedding_chain(Params(0, 2))

    @pytest.mark.parametrize(("m", "n"), cells(range(1, 5), range(1, 5), slow_from=6))
    def test_end_of_chain_is_a_cone(self, m: int, n: int) -> None:
        """Δ_n = {x1} * Γ(m-1, n)."""
        assert chain_end_matches(Params(m, n))

    @pytest.mark.parametrize(("m", "n"), [(1, 1), (2, 2), (3, 2)])
    def test_links_along_the_chain(self, m: int, n: int) -> None:
        """link_{Δ_(t-1)}({x1,y_t}) = link_Γ({x1,y_t})."""
        for t in range(1, n + 1):
            assert chain_links_match(Params(m, n), t)

    @pytest.mark.parametrize(("m", "n"), cells(range(1, 5), range(1, 5), slow_from=6))
    def test_edge_links_are_joins(self, m: int, n: int) -> None:
        """link_Γ({x_s,y_t}) = Γ(s-1,t-1) * Γ(m-s,n-t)."""
        for s in range(1, m + 1):
            for t in range(1, n + 1):
                assert edge_link_matches(Params(m, n), s, t)

    def test_shift_vertex(self) -> None:
        """Loops move along their alphabet, edges along both."""
        assert shift_vertex(x_loop(1), 2, 5) == x_loop(3)
        assert shift_vertex(y_loop(1), 2, 5) == y_loop(6)
        assert shift_vertex(Edge(1, 2), 1, 1) == Edge(2, 3)
