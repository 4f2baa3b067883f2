from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class Gf2Matrix:
    """Binary matrix with rows bit-packed little-endian (column c is bit c % 8 of byte c // 8)."""

    rows: int
    cols: int
    bits: np.ndarray

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> "Gf2Matrix":
        arr = np.atleast_2d(np.asarray(dense, dtype=np.uint8) & 1)
        rows, cols = arr.shape
        return cls(rows=rows, cols=cols, bits=np.packbits(arr, axis=1, bitorder="little"))

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> "Gf2Matrix":
        """Columns given as integers, bit r holding row r."""
        if rows <= 63:
            col_arr = np.asarray(list(columns), dtype=np.uint64)
            shifts = np.arange(rows, dtype=np.uint64)
            dense = ((col_arr[None, :] >> shifts[:, None]) & np.uint64(1)).astype(np.uint8)
        else:
            dense = np.array([[(c >> r) & 1 for c in columns] for r in range(rows)], dtype=np.uint8)
        return cls.from_dense(dense.reshape(rows, len(columns)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls.from_dense(np.zeros((rows, cols), dtype=np.uint8))

    def to_dense(self) -> np.ndarray:
        if self.cols == 0:
            return np.zeros((self.rows, 0), dtype=np.uint8)
        return np.unpackbits(self.bits, axis=1, count=self.cols, bitorder="little")

    def column(self, c: int) -> np.ndarray:
        byte, bit = divmod(c, 8)
        return (self.bits[:, byte] >> bit) & 1


def _eliminate(M: Gf2Matrix) -> Tuple[np.ndarray, List[int]]:
    a = M.bits.copy()
    pivots: List[int] = []
    r = 0
    for c in range(M.cols):
        if r == M.rows:
            break
        byte, bit = divmod(c, 8)
        below = np.flatnonzero((a[r:, byte] >> bit) & 1)
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        hit = ((a[:, byte] >> bit) & 1).astype(bool)
        hit[r] = False
        a[hit] ^= a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def gf2_row_reduce(M: Gf2Matrix) -> Tuple[Gf2Matrix, List[int]]:
    """Reduced row echelon form and its pivot columns."""
    a, pivots = _eliminate(M)
    return Gf2Matrix(rows=M.rows, cols=M.cols, bits=a), pivots


def gf2_rank(M: Gf2Matrix) -> int:
    return len(_eliminate(M)[1])
