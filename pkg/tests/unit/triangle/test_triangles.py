"""Unit tests for the H-, F- and M-triangles and their closed forms."""

import pytest

from bubblelab.complex import ComplexKind, build_complex
from bubblelab.core.limits import Limits, ResourceCapError
from bubblelab.triangle import (
    MultiPoly,
    TriangleMode,
    bw_from_tables,
    bw_triangles,
    char_closed,
    char_poly,
    collapse_loop_variables,
    extended_triangles,
    extended_variables,
    f_closed,
    f_triangle,
    face_polynomial,
    gamma_bw_closed,
    h_closed,
    h_triangle,
    hochschild_f_triangle,
    m_closed,
    m_triangle,
    rank_generating,
)
from bubblelab.word import Params

SMALL = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]


class TestHTriangle:
    """Tests for the H-triangle."""

    @pytest.mark.parametrize(
        ("m", "n", "expected"),
        [
            (0, 0, "1"),
            (1, 0, "q*t + 1"),
            (1, 1, "q^2*t^2 + 2*q*t + q + 1"),
            (2, 1, "q^3*t^3 + 3*q^2*t^2 + 2*q^2*t + 3*q*t + 2*q + 1"),
        ],
    )
    def test_small_values(self, m: int, n: int, expected: str) -> None:
        """H computed from bubble in-degrees."""
        assert str(h_triangle(Params(m, n))) == expected

    @pytest.mark.parametrize(("m", "n"), SMALL)
    def test_closed_form(self, m: int, n: int) -> None:
        """Definitional and closed H agree."""
        p = Params(m, n)
        assert h_triangle(p) == h_triangle(p, TriangleMode.CLOSED) == h_closed(p)

    def test_variables(self) -> None:
        """Triangles live in (q, t)."""
        assert h_triangle(Params(1, 1)).variables == ("q", "t")

    def test_cap_only_in_definitional_mode(self) -> None:
        """The closed form needs no enumeration."""
        limits = Limits(max_r_words=2)
        with pytest.raises(ResourceCapError):
            h_triangle(Params(2, 1), limits=limits)
        assert str(h_triangle(Params(2, 1), TriangleMode.CLOSED, limits)).startswith("q^3*t^3")


class TestFTriangle:
    """Tests for the F-triangle."""

    @pytest.mark.parametrize(
        ("m", "n", "expected"),
        [
            (1, 0, "q + t + 1"),
            (1, 1, "2*q^2 + 2*q*t + t^2 + 3*q + 2*t + 1"),
            (
                2,
                1,
                "3*q^3 + 5*q^2*t + 3*q*t^2 + t^3 + 7*q^2 + 8*q*t + 3*t^2 + 5*q + 3*t + 1",
            ),
        ],
    )
    def test_small_values(self, m: int, n: int, expected: str) -> None:
        """F counts faces of Δ(m,n) by edges and loops."""
        assert str(f_triangle(Params(m, n))) == expected

    @pytest.mark.parametrize(("m", "n"), SMALL)
    def test_closed_form(self, m: int, n: int) -> None:
        """Definitional and closed F agree."""
        p = Params(m, n)
        assert f_triangle(p) == f_triangle(p, TriangleMode.CLOSED) == f_closed(p)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_hochschild_triangle(self, m: int) -> None:
        """F_(m,1) has the Hochschild closed form."""
        assert hochschild_f_triangle(m) == f_triangle(Params(m, 1))

    def test_hochschild_needs_positive_m(self) -> None:
        """m = 0 is outside the formula."""
        with pytest.raises(ValueError):
            hochschild_f_triangle(0)

    def test_f_at_t_equals_q_is_the_face_polynomial(self) -> None:
        """F(q, q) is the f-polynomial of Δ."""
        p = Params(2, 2)
        f = f_triangle(p)
        collapsed = f.substitute({"t": MultiPoly.variable("q", ("q", "t"))}).drop("t")
        assert collapsed == face_polynomial(build_complex(ComplexKind.DELTA, p).f_vector())


class TestExtendedTriangles:
    """Tests for the triangles with one loop variable per letter."""

    def test_variables(self) -> None:
        """q, then t_x1..t_xm, then t_y1..t_yn."""
        assert extended_variables(Params(1, 2)) == ("q", "t_x1", "t_y1", "t_y2")

    def test_one_one(self) -> None:
        """Hand-computed F̃ and H̃ for Δ(1,1) and Bub(1,1)."""
        f_ext, h_ext = extended_triangles(Params(1, 1))
        assert f_ext.coefficient(q=2) == 2
        assert f_ext.coefficient(q=1, t_x1=1) == 1
        assert f_ext.coefficient(t_x1=1, t_y1=1) == 1
        assert f_ext.coefficient(q=1) == 3
        assert h_ext.coefficient(q=2, t_x1=1, t_y1=1) == 1
        assert h_ext.coefficient(q=1) == 1
        assert h_ext.coefficient(q=1, t_y1=1) == 1

    @pytest.mark.parametrize(("m", "n"), [(1, 1), (2, 1), (2, 2), (1, 3)])
    def test_collapse_gives_ordinary_triangles(self, m: int, n: int) -> None:
        """Setting every t_z = t recovers F and H."""
        p = Params(m, n)
        f_ext, h_ext = extended_triangles(p)
        assert collapse_loop_variables(f_ext, p) == f_triangle(p)
        assert collapse_loop_variables(h_ext, p) == h_triangle(p)

    def test_cap(self) -> None:
        """max_r_extended bounds the extended triangles."""
        with pytest.raises(ResourceCapError):
            extended_triangles(Params(2, 2), Limits(max_r_extended=3))


class TestBjornerWachs:
    """Tests for the degree-refined triangles of Γ."""

    def test_gamma_one_one(self) -> None:
        """F^BW and H^BW of Γ(1,1)."""
        f_bw, h_bw = bw_triangles(build_complex(ComplexKind.GAMMA, Params(1, 1)))
        assert str(f_bw) == "q^2*t^2 + 2*q^2*t + q^2 + q"
        assert str(h_bw) == "q^2*t^2 + q"

    @pytest.mark.parametrize(("m", "n"), SMALL)
    def test_h_table_matches_substitution(self, m: int, n: int) -> None:
        """H^BW from the h-table equals F^BW(q, t - 1)."""
        gamma = build_complex(ComplexKind.GAMMA, Params(m, n))
        assert bw_from_tables(gamma) == bw_triangles(gamma)[1]

    @pytest.mark.parametrize(("m", "n"), SMALL)
    def test_gamma_closed_form(self, m: int, n: int) -> None:
        """F^BW of Γ(m,n) is q^(m+n) H(1/q, qt)."""
        p = Params(m, n)
        f_bw, _ = bw_triangles(build_complex(ComplexKind.GAMMA, p))
        assert gamma_bw_closed(p) == f_bw


class TestMTriangle:
    """Tests for the M-triangle and the characteristic polynomial."""

    @pytest.mark.parametrize(
        ("m", "n", "expected"),
        [
            (1, 0, "q*t - t + 1"),
            (1, 1, "q^2*t^2 - 3*q*t^2 + 3*q*t + 2*t^2 - 3*t + 1"),
        ],
    )
    def test_small_values(self, m: int, n: int, expected: str) -> None:
        """M from the Möbius function of Shuf(m,n)."""
        assert str(m_triangle(Params(m, n))) == expected

    @pytest.mark.parametrize(("m", "n"), SMALL)
    def test_closed_form(self, m: int, n: int) -> None:
        """The conjectured closed M agrees on small alphabets."""
        p = Params(m, n)
        assert m_triangle(p) == m_closed(p)

    def test_char_one_one(self) -> None:
        """ch̃ of Shuf(1,1)."""
        assert str(char_poly(Params(1, 1))) == "2*q^2 - 3*q + 1"

    @pytest.mark.parametrize(("m", "n"), SMALL)
    def test_char_closed_form(self, m: int, n: int) -> None:
        """Möbius ch̃ agrees with its closed form and with M(0, q)."""
        p = Params(m, n)
        char = char_poly(p)
        assert char == char_closed(p) == char_poly(p, TriangleMode.CLOSED)
        m_row = m_triangle(p).substitute({"q": 0, "t": MultiPoly.variable("q")})
        assert char == m_row

    def test_cap(self) -> None:
        """max_r_poset bounds the Möbius computation."""
        with pytest.raises(ResourceCapError):
            m_triangle(Params(2, 2), limits=Limits(max_r_poset=3))


class TestRankGenerating:
    """Tests for rank_generating and face_polynomial."""

    def test_one_one(self) -> None:
        """One word of rank 0 and 2, three of rank 1."""
        assert str(rank_generating(Params(1, 1))) == "q^2 + 3*q + 1"

    def test_face_polynomial(self) -> None:
        """Vectors become polynomials in q."""
        assert str(face_polynomial([1, 5, 5])) == "5*q^2 + 5*q + 1"
