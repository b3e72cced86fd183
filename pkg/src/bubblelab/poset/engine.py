"""Generic finite-poset machinery on dense boolean order matrices.

Elements are opaque hashable handles; every algorithm works on their indices.
The order relation is a numpy boolean matrix ``leq`` with ``leq[i, j]`` true iff
element ``i`` is below element ``j``. Products of order matrices are taken in
float64, which is exact for the counts involved.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Hashable, Sequence
from typing import Generic, TypeVar

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from bubblelab.poset.models import (
    IncomparableError,
    LatticeCheck,
    MobiusMatrix,
    NotAPartialOrderError,
)

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=Hashable)
U = TypeVar("U", bound=Hashable)

BoolMatrix = NDArray[np.bool_]

# int64 accumulation is exact while every value stays below 2**52 and rows have
# fewer than 2**11 entries; other rows are recomputed with Python ints.
_INT64_SAFE = 1 << 52
_INT64_ROW = 1 << 11


def _product(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Boolean matrix product via float64 BLAS."""
    result: BoolMatrix = (a.astype(np.float64) @ b.astype(np.float64)) > 0
    return result


def check_partial_order(leq: BoolMatrix) -> None:
    """Validate the three partial-order axioms.

    Raises:
        NotAPartialOrderError: With the first violation found.
    """
    size = leq.shape[0]
    diagonal = np.diagonal(leq)
    if not diagonal.all():
        raise NotAPartialOrderError("reflexivity", (int(np.flatnonzero(~diagonal)[0]),))
    both = leq & leq.T & ~np.eye(size, dtype=bool)
    if both.any():
        i, j = np.argwhere(both)[0]
        raise NotAPartialOrderError("antisymmetry", (int(i), int(j)))
    broken = _product(leq, leq) & ~leq
    if broken.any():
        i, k = np.argwhere(broken)[0]
        j = np.flatnonzero(leq[i] & leq[:, k])[0]
        raise NotAPartialOrderError("transitivity", (int(i), int(j), int(k)))


class FinitePoset(Generic[T]):
    """Immutable finite poset with order matrix and cover relation.

    The cover relation is the transitive reduction of ``leq``, obtained as
    ``lt & ~(lt @ lt)`` with ``lt`` the strict order.

    Thread Safety:
        Instances are read-only after construction and safe to share.

    Example:
        >>> chain = build_poset(["a", "b", "c"], lambda u, v: u <= v)
        >>> sorted(chain.cover_pairs())
        [(0, 1), (1, 2)]
    """

    def __init__(self, elements: Sequence[T], leq: BoolMatrix) -> None:
        """Wrap an already validated order matrix.

        Args:
            elements: Element handles; their positions are the indices.
            leq: Square boolean order matrix matching ``elements``.

        Raises:
            ValueError: If shapes disagree or handles repeat.
        """
        size = len(elements)
        if leq.shape != (size, size):
            raise ValueError(f"Order matrix shape {leq.shape} does not match {size} elements")
        self._elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self._elements)}
        if len(self._index) != size:
            raise ValueError("Poset elements must be distinct")
        self._leq = np.array(leq, dtype=bool)
        self._leq.setflags(write=False)
        strict = self._leq & ~np.eye(size, dtype=bool)
        self._covers = strict & ~_product(strict, strict)
        self._covers.setflags(write=False)

    @classmethod
    def from_matrix(cls, elements: Sequence[T], leq: BoolMatrix) -> FinitePoset[T]:
        """Validate ``leq`` as a partial order and build the poset.

        Raises:
            NotAPartialOrderError: If an axiom fails.
        """
        check_partial_order(np.asarray(leq, dtype=bool))
        return cls(elements, leq)

    def __len__(self) -> int:
        return len(self._elements)

    @property
    def elements(self) -> tuple[T, ...]:
        """Element handles in index order."""
        return self._elements

    @property
    def leq(self) -> BoolMatrix:
        """Read-only order matrix."""
        return self._leq

    @property
    def cover_matrix(self) -> BoolMatrix:
        """Read-only cover matrix (``[i, j]`` true iff ``i ⋖ j``)."""
        return self._covers

    def index_of(self, element: T) -> int:
        """Return the index of ``element``.

        Raises:
            KeyError: If the element is not in the poset.
        """
        return self._index[element]

    def less_equal(self, u: T, v: T) -> bool:
        """Return True if ``u ≤ v``."""
        return bool(self._leq[self._index[u], self._index[v]])

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Cover pairs ``(lower, upper)`` as indices, in row-major order."""
        return [(int(i), int(j)) for i, j in np.argwhere(self._covers)]

    def upper_covers(self, i: int) -> list[int]:
        """Indices covering element ``i``."""
        return [int(j) for j in np.flatnonzero(self._covers[i])]

    def lower_covers(self, i: int) -> list[int]:
        """Indices covered by element ``i``."""
        return [int(j) for j in np.flatnonzero(self._covers[:, i])]

    def minimal(self) -> list[int]:
        """Indices of minimal elements."""
        return [int(i) for i in np.flatnonzero(self._leq.sum(axis=0) == 1)]

    def maximal(self) -> list[int]:
        """Indices of maximal elements."""
        return [int(i) for i in np.flatnonzero(self._leq.sum(axis=1) == 1)]

    def topological_order(self) -> NDArray[np.intp]:
        """A linear extension: indices sorted by down-set size (stable)."""
        return np.argsort(self._leq.sum(axis=0), kind="stable")

    def hasse_graph(
        self,
        node_label: Callable[[T], str] = str,
        edge_label: Callable[[T, T], str] | None = None,
    ) -> nx.DiGraph[int]:
        """Return the Hasse diagram as a networkx DiGraph on indices.

        Nodes carry ``label``; edges point upward and carry ``label`` when an
        ``edge_label`` function is given.
        """
        graph: nx.DiGraph[int] = nx.DiGraph()
        for i, element in enumerate(self._elements):
            graph.add_node(i, label=node_label(element))
        for i, j in self.cover_pairs():
            if edge_label is None:
                graph.add_edge(i, j)
            else:
                graph.add_edge(i, j, label=edge_label(self._elements[i], self._elements[j]))
        return graph


def build_poset(elements: Sequence[T], leq_predicate: Callable[[T, T], bool]) -> FinitePoset[T]:
    """Build a poset by evaluating ``leq_predicate`` on all ordered pairs.

    Args:
        elements: Distinct element handles.
        leq_predicate: Candidate order relation.

    Returns:
        The validated poset with its cover relation.

    Raises:
        NotAPartialOrderError: If the predicate is not a partial order.
    """
    size = len(elements)
    leq = np.zeros((size, size), dtype=bool)
    for i, u in enumerate(elements):
        for j, v in enumerate(elements):
            leq[i, j] = leq_predicate(u, v)
    return FinitePoset.from_matrix(elements, leq)


def mobius(poset: FinitePoset[T]) -> MobiusMatrix:
    """Compute the Möbius function on all comparable pairs.

    For each ``u`` the values ``μ(u, ·)`` are filled along a linear extension of
    the up-set of ``u`` using ``μ(u, v) = -Σ_{u ≤ w < v} μ(u, w)``.
    """
    start = time.perf_counter()
    leq = poset.leq
    order = poset.topological_order()
    position = np.empty_like(order)
    position[order] = np.arange(len(order))
    entries: dict[tuple[int, int], int] = {}
    for u in range(len(poset)):
        up = np.flatnonzero(leq[u])
        up = up[np.argsort(position[up], kind="stable")]
        sub = leq[np.ix_(up, up)]
        for v, value in zip(up.tolist(), _mobius_row(sub), strict=True):
            entries[(u, v)] = value
    elapsed = time.perf_counter() - start
    logger.info("Möbius function on %d elements in %.2fs", len(poset), elapsed)
    return MobiusMatrix(entries)


def _mobius_row(sub: BoolMatrix) -> list[int]:
    """Möbius values from the first element of a topologically sorted up-set."""
    size = sub.shape[0]
    if size < _INT64_ROW:
        weights = sub.astype(np.int64)
        mu = np.zeros(size, dtype=np.int64)
        mu[0] = 1
        for j in range(1, size):
            mu[j] = -(mu[:j] @ weights[:j, j])
        if int(np.abs(mu).max()) < _INT64_SAFE:
            return [int(value) for value in mu]
    exact = [1] + [0] * (size - 1)
    for j in range(1, size):
        exact[j] = -sum(exact[i] for i in np.flatnonzero(sub[:j, j]).tolist())
    return exact


def _first_missing(keys: BoolMatrix, lookup: dict[bytes, int]) -> tuple[int, int] | None:
    """First pair whose common up-set (rows of ``keys``) has no least element."""
    size = keys.shape[0]
    for i in range(size):
        common = np.packbits(keys[i] & keys[i + 1 :], axis=1)
        for offset, row in enumerate(common):
            if row.tobytes() not in lookup:
                return i, i + 1 + offset
    return None


def check_lattice(poset: FinitePoset[T]) -> LatticeCheck:
    """Test whether every pair of elements has a join and a meet.

    The join of ``u`` and ``v`` exists iff the intersection of their up-sets is
    the up-set of a single element; meets are tested dually on down-sets.
    """
    for name, keys in (("join", poset.leq), ("meet", poset.leq.T)):
        lookup = {np.packbits(row).tobytes(): i for i, row in enumerate(keys)}
        witness = _first_missing(keys, lookup)
        if witness is not None:
            return LatticeCheck(False, witness, name)
    return LatticeCheck(True)


def linear_extension(poset: FinitePoset[T], seed: int = 0) -> list[T]:
    """Return a linear extension chosen deterministically by ``seed``.

    At every step the minimal remaining elements are listed by index and the
    ``seed``-th of them (cyclically) is taken next.
    """
    remaining_below = [len(poset.lower_covers(i)) for i in range(len(poset))]
    eligible = [i for i, count in enumerate(remaining_below) if count == 0]
    order: list[int] = []
    while eligible:
        chosen = eligible.pop(seed % len(eligible))
        order.append(chosen)
        for j in poset.upper_covers(chosen):
            remaining_below[j] -= 1
            if remaining_below[j] == 0:
                eligible.append(j)
        eligible.sort()
    return [poset.elements[i] for i in order]


def is_linear_extension(poset: FinitePoset[T], order: Sequence[T]) -> bool:
    """Return True if ``order`` lists every element once, each after all elements below it."""
    if len(order) != len(poset) or set(order) != set(poset.elements):
        return False
    position = np.empty(len(poset), dtype=np.intp)
    for k, element in enumerate(order):
        position[poset.index_of(element)] = k
    below, above = np.nonzero(poset.leq)
    return bool((position[below] <= position[above]).all())


def interval(poset: FinitePoset[T], u: T, v: T) -> frozenset[T]:
    """Return ``{w : u ≤ w ≤ v}``.

    Raises:
        IncomparableError: If ``u ≰ v``.
    """
    i, j = poset.index_of(u), poset.index_of(v)
    if not poset.leq[i, j]:
        raise IncomparableError(str(u), str(v))
    members = np.flatnonzero(poset.leq[i] & poset.leq[:, j])
    return frozenset(poset.elements[k] for k in members)


def check_anti_isomorphism(
    source: FinitePoset[T],
    target: FinitePoset[U],
    mapping: Callable[[T], U],
) -> bool:
    """Return True if ``mapping`` is an order-reversing bijection ``source → target``."""
    if len(source) != len(target):
        return False
    try:
        permutation = [target.index_of(mapping(e)) for e in source.elements]
    except KeyError:
        return False
    if len(set(permutation)) != len(permutation):
        return False
    pulled_back = target.leq[np.ix_(permutation, permutation)]
    return bool(np.array_equal(source.leq, pulled_back.T))
