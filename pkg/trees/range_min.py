"""
Sparse-table range-minimum queries.

O(n log n) preprocessing, constant time per query. Ranges are closed:
``argmin(l, r)`` looks at positions ``l..r`` inclusive.
"""

from collections.abc import Sequence

import numpy as np


class SparseTable:
    """
    Range-minimum structure over a fixed sequence of numbers.

    Row ``k`` of the table holds, for every start ``i``, the position of
    the minimum of ``values[i : i + 2**k]``. Ties resolve to the leftmost
    position.
    """

    __slots__ = ('values', 'table', 'log')

    def __init__(self, values: Sequence) -> None:
        self.values = np.asarray(values)
        n = len(self.values)
        if n == 0:
            raise ValueError('cannot index an empty sequence')

        self.log = np.zeros(n + 1, dtype=np.int64)
        for length in range(2, n + 1):
            self.log[length] = self.log[length // 2] + 1

        rows = [np.arange(n, dtype=np.int64)]
        k = 1
        while (1 << k) <= n:
            prev = rows[-1]
            half = 1 << (k - 1)
            left = prev[: n - (1 << k) + 1]
            right = prev[half: half + len(left)]
            rows.append(np.where(self.values[right] < self.values[left], right, left))
            k += 1
        self.table = rows

    def __len__(self) -> int:
        return len(self.values)

    def argmin(self, left: int, right: int) -> int:
        """Position of the minimum on ``left..right`` (order-insensitive)."""
        if left > right:
            left, right = right, left
        k = int(self.log[right - left + 1])
        row = self.table[k]
        a = row[left]
        b = row[right - (1 << k) + 1]
        return int(b if self.values[b] < self.values[a] else a)

    def min(self, left: int, right: int):
        value = self.values[self.argmin(left, right)]
        return value.item() if isinstance(value, np.generic) else value

    def argmin_many(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Vectorised ``argmin`` over paired arrays of bounds."""
        left = np.asarray(left, dtype=np.int64)
        right = np.asarray(right, dtype=np.int64)
        lo = np.minimum(left, right)
        hi = np.maximum(left, right)
        k = self.log[hi - lo + 1]
        result = np.empty(len(lo), dtype=np.int64)
        for level in np.unique(k):
            mask = k == level
            row = self.table[level]
            a = row[lo[mask]]
            b = row[hi[mask] - (1 << int(level)) + 1]
            result[mask] = np.where(self.values[b] < self.values[a], b, a)
        return result
