"""The bubble lattice Bub(m,n) and the shuffle lattice Shuf(m,n).

Both posets live on the canonical enumeration of shuffle words. Their order
matrices are built row by row with vectorized mask arithmetic instead of
calling the pairwise predicates ``leq_bub`` / ``leq_shuf`` on every pair:

- support containment is a pair of bit tests on the x- and y-masks,
- the inversions of the common letters are selected by a lookup table
  ``pairs[x_common, y_common]`` of :func:`~bubblelab.word.core.pair_mask` values.
"""

from __future__ import annotations

import logging
import time
from enum import StrEnum
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from bubblelab.core.limits import Limits, resolve_limits
from bubblelab.poset.engine import FinitePoset
from bubblelab.word import (
    Params,
    ShuffleWord,
    enumerate_words,
    pair_mask,
)

logger = logging.getLogger(__name__)


class WordOrder(StrEnum):
    """Which order to put on Shuf(m,n)."""

    BUBBLE = "bub"
    SHUFFLE = "shuf"


def bubble_poset(p: Params, limits: Limits | None = None) -> FinitePoset[ShuffleWord]:
    """Return Bub(m,n) on the canonical word enumeration.

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_poset``.
    """
    resolve_limits(limits).check("max_r_poset", p.r)
    return _word_poset(p, WordOrder.BUBBLE)


def shuffle_poset(p: Params, limits: Limits | None = None) -> FinitePoset[ShuffleWord]:
    """Return Shuf(m,n) on the canonical word enumeration.

    Raises:
        ResourceCapError: If ``m + n`` exceeds ``max_r_poset``.
    """
    resolve_limits(limits).check("max_r_poset", p.r)
    return _word_poset(p, WordOrder.SHUFFLE)


def word_poset(
    p: Params, order: WordOrder, limits: Limits | None = None
) -> FinitePoset[ShuffleWord]:
    """Dispatch to :func:`bubble_poset` or :func:`shuffle_poset`."""
    build = bubble_poset if order is WordOrder.BUBBLE else shuffle_poset
    return build(p, limits)


@lru_cache(maxsize=16)
def _word_poset(p: Params, order: WordOrder) -> FinitePoset[ShuffleWord]:
    start = time.perf_counter()
    words = enumerate_words(p, Limits.unbounded())
    leq = order_matrix(words, p, order)
    poset = FinitePoset.from_matrix(words, leq)
    elapsed = time.perf_counter() - start
    logger.info(
        "Built %s(%d,%d): %d elements in %.2fs",
        "Bub" if order is WordOrder.BUBBLE else "Shuf",
        p.m,
        p.n,
        len(poset),
        elapsed,
    )
    return poset


def order_matrix(
    words: tuple[ShuffleWord, ...], p: Params, order: WordOrder
) -> NDArray[np.bool_]:
    """Vectorized order matrix of ``words`` under the bubble or shuffle order.

    Raises:
        ValueError: If ``m * n > 64`` (inversion masks must fit in 64 bits).
    """
    if p.m * p.n > 64:
        raise ValueError(f"Order matrices need m*n <= 64, got m={p.m}, n={p.n}")
    x_masks = np.array([w.x_mask for w in words], dtype=np.int64)
    y_masks = np.array([w.y_mask for w in words], dtype=np.int64)
    inversions = np.array([w.inversion_mask for w in words], dtype=np.uint64)
    pairs = np.array(
        [[pair_mask(p.n, xm, ym) for ym in range(1 << p.n)] for xm in range(1 << p.m)],
        dtype=np.uint64,
    )
    leq = np.zeros((len(words), len(words)), dtype=bool)
    for i in range(len(words)):
        common = pairs[x_masks & x_masks[i], y_masks & y_masks[i]]
        nested = ((x_masks & ~x_masks[i]) == 0) & ((y_masks[i] & ~y_masks) == 0)
        if order is WordOrder.BUBBLE:
            consistent = (inversions[i] & common & ~inversions) == 0
        else:
            consistent = ((inversions[i] ^ inversions) & common) == 0
        leq[i] = nested & consistent
    return leq

