"""Deflation: order n-1 matrices carrying exactly the non-unit spectrum."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matcore import (
    DenseMatrix,
    IndexOutOfRange,
    InputError,
    OrderTooSmall,
    StochasticMatrix,
)


@dataclass(frozen=True, eq=False)
class DeflatedMatrix:
    """Order n-1 matrix obtained by removing one state of a stochastic matrix.

    `index_map` carries the original 1-based label of each remaining
    row/column, so discs computed from `inner` can be attributed to the
    original states in reports.
    """

    base_order: int
    removed_index: int
    inner: DenseMatrix
    index_map: tuple[int, ...]

    def __post_init__(self):
        if self.inner.order != self.base_order - 1:
            raise InputError(
                f"inner order {self.inner.order} does not equal base order "
                f"{self.base_order} minus one"
            )
        expected = tuple(
            i for i in range(1, self.base_order + 1) if i != self.removed_index
        )
        if tuple(self.index_map) != expected:
            raise InputError(f"index_map {self.index_map!r} must equal {expected!r}")
        object.__setattr__(self, "index_map", expected)


def deflate(s: StochasticMatrix, k: int) -> DeflatedMatrix:
    """Remove state k and subtract its k-deleted row from every remaining row.

    The resulting matrix has exactly the eigenvalues of s other than one unit
    (Perron) root, because s is similar to a block-triangular matrix with this
    as the trailing block.
    """
    n = s.order
    if n < 2:
        raise OrderTooSmall(n, minimum=2)
    if not 1 <= k <= n:
        raise IndexOutOfRange(k, n)
    keep = [i for i in range(n) if i != k - 1]
    a = s.entries
    inner = a[np.ix_(keep, keep)] - a[k - 1, keep][None, :]
    return DeflatedMatrix(
        base_order=n,
        removed_index=k,
        inner=DenseMatrix(inner),
        index_map=tuple(i + 1 for i in keep),
    )


def deflated_all(s: StochasticMatrix) -> list[DeflatedMatrix]:
    """deflate(s, k) for every k = 1..n, in index order.

    The deflations are independent; this sequential order is the reference
    output for any parallel evaluation.
    """
    if s.order < 2:
        raise OrderTooSmall(s.order, minimum=2)
    return [deflate(s, k) for k in range(1, s.order + 1)]
