"""Unit tests for the generic finite-poset engine."""

import numpy as np
import pytest

from bubblelab.poset import (
    FinitePoset,
    IncomparableError,
    MobiusMatrix,
    NotAPartialOrderError,
    build_poset,
    check_lattice,
    check_partial_order,
    interval,
    is_linear_extension,
    linear_extension,
    mobius,
)


def divisors_poset(n: int) -> FinitePoset[int]:
    """Divisors of n under divisibility."""
    elements = [d for d in range(1, n + 1) if n % d == 0]
    return build_poset(elements, lambda a, b: b % a == 0)


def bowtie() -> FinitePoset[str]:
    """Two minimal and two maximal elements, each minimal below each maximal."""
    return build_poset(["a", "b", "c", "d"], lambda u, v: u == v or (u in "ab" and v in "cd"))


class TestBuildPoset:
    """Tests for construction and the partial-order axioms."""

    def test_axioms_hold_for_divisibility(self) -> None:
        """Divisibility on the divisors of 12 is a partial order."""
        poset = divisors_poset(12)
        assert len(poset) == 6
        assert poset.less_equal(2, 12)
        assert not poset.less_equal(4, 6)

    def test_antisymmetry_violation(self) -> None:
        """A total relation is not antisymmetric."""
        with pytest.raises(NotAPartialOrderError) as exc_info:
            build_poset([1, 2], lambda a, b: True)
        assert exc_info.value.axiom == "antisymmetry"

    def test_reflexivity_violation(self) -> None:
        """A matrix with a zero diagonal entry is rejected."""
        leq = np.array([[True, True], [False, False]])
        with pytest.raises(NotAPartialOrderError) as exc_info:
            check_partial_order(leq)
        assert exc_info.value.axiom == "reflexivity"

    def test_transitivity_violation(self) -> None:
        """0 ≤ 1 ≤ 2 without 0 ≤ 2 is rejected."""
        leq = np.eye(3, dtype=bool)
        leq[0, 1] = leq[1, 2] = True
        with pytest.raises(NotAPartialOrderError) as exc_info:
            check_partial_order(leq)
        assert exc_info.value.axiom == "transitivity"

    def test_duplicate_elements_rejected(self) -> None:
        """Handles must be distinct."""
        with pytest.raises(ValueError, match="distinct"):
            FinitePoset([1, 1], np.eye(2, dtype=bool))

    def test_minimal_maximal_and_covers(self) -> None:
        """Divisors of 6: 1 is minimal, 6 maximal, 2 and 3 cover 1."""
        poset = divisors_poset(6)
        assert [poset.elements[i] for i in poset.minimal()] == [1]
        assert [poset.elements[i] for i in poset.maximal()] == [6]
        one = poset.index_of(1)
        assert sorted(poset.elements[j] for j in poset.upper_covers(one)) == [2, 3]

    def test_hasse_graph(self) -> None:
        """The Hasse diagram keeps only covers."""
        graph = divisors_poset(4).hasse_graph(node_label=str)
        assert graph.number_of_nodes() == 3
        assert graph.number_of_edges() == 2


class TestLattice:
    """Tests for check_lattice."""

    def test_divisor_lattice(self) -> None:
        """Divisors of 30 form a lattice."""
        assert check_lattice(divisors_poset(30))

    def test_bowtie_is_not_a_lattice(self) -> None:
        """The bowtie lacks joins and meets."""
        result = check_lattice(bowtie())
        assert not result
        assert result.witness is not None
        assert result.missing in ("join", "meet")


class TestMobius:
    """Tests for the Möbius function."""

    def test_boolean_lattice(self) -> None:
        """Divisors of 30 form B_3: μ(1, 30) = -1."""
        poset = divisors_poset(30)
        mu = mobius(poset)
        assert mu[poset.index_of(1), poset.index_of(30)] == -1
        assert mu[poset.index_of(1), poset.index_of(6)] == 1

    def test_square_divisor(self) -> None:
        """μ(1, 4) = 0 in the divisors of 4."""
        poset = divisors_poset(4)
        assert mobius(poset)[poset.index_of(1), poset.index_of(4)] == 0

    def test_row_sums_vanish(self) -> None:
        """Σ_{u ≤ z ≤ v} μ(u, z) = 0 whenever u < v."""
        poset = divisors_poset(36)
        mu = mobius(poset)
        size = len(poset)
        for u in range(size):
            for v in range(size):
                if u != v and poset.leq[u, v]:
                    between = [z for z in range(size) if poset.leq[u, z] and poset.leq[z, v]]
                    assert sum(mu[u, z] for z in between) == 0

    def test_incomparable_entries_are_zero(self) -> None:
        """MobiusMatrix returns 0 off the comparable pairs."""
        mu = MobiusMatrix({(0, 0): 1, (0, 1): -1, (1, 1): 1})
        assert mu[1, 0] == 0
        assert len(mu) == 3


class TestLinearExtension:
    """Tests for linear_extension and interval."""

    @pytest.mark.parametrize("seed", [0, 1, 2, 5])
    def test_extension_is_valid(self, seed: int) -> None:
        """Every seed yields a linear extension."""
        poset = divisors_poset(24)
        assert is_linear_extension(poset, linear_extension(poset, seed))

    def test_wrong_order_is_rejected(self) -> None:
        """Putting 6 before 2 is not a linear extension."""
        poset = divisors_poset(6)
        assert not is_linear_extension(poset, [1, 6, 2, 3])
        assert not is_linear_extension(poset, [1, 2, 3])

    def test_interval(self) -> None:
        """[2, 12] in the divisors of 12 is {2, 4, 6, 12}."""
        assert interval(divisors_poset(12), 2, 12) == frozenset({2, 4, 6, 12})

    def test_interval_needs_comparable_endpoints(self) -> None:
        """Incomparable endpoints raise IncomparableError."""
        with pytest.raises(IncomparableError):
            interval(divisors_poset(12), 4, 6)
