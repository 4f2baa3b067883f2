# mdburst/algebra/algebra_tests/test_gf2.py
from __future__ import annotations

import galois
import numpy as np

from mdburst.algebra.gf2 import Gf2Matrix, gf2_rank, gf2_row_reduce


def test_small_ranks():
    assert gf2_rank(Gf2Matrix.from_dense(np.eye(3, dtype=np.uint8))) == 3
    assert gf2_rank(Gf2Matrix.zeros(4, 5)) == 0
    M = Gf2Matrix.from_dense([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert gf2_rank(M) == 2


def test_from_columns_matches_dense():
    cols = [0b101, 0b011, 0b000, 0b111]
    M = Gf2Matrix.from_columns(cols, 3)
    dense = M.to_dense()
    assert dense.shape == (3, 4)
    assert dense[:, 0].tolist() == [1, 0, 1]
    assert dense[:, 3].tolist() == [1, 1, 1]
    assert M.column(1).tolist() == [1, 1, 0]


def test_wide_columns_beyond_machine_word():
    cols = [1 << 70, (1 << 70) | 1, 1]
    M = Gf2Matrix.from_columns(cols, 71)
    assert gf2_rank(M) == 2


def test_rank_agrees_with_galois():
    rng = np.random.default_rng(7)
    GF2 = galois.GF(2)
    for _ in range(25):
        rows, cols = rng.integers(1, 12), rng.integers(1, 40)
        dense = rng.integers(0, 2, size=(rows, cols), dtype=np.uint8)
        assert gf2_rank(Gf2Matrix.from_dense(dense)) == np.linalg.matrix_rank(GF2(dense))


def test_rank_invariant_under_row_operations():
    rng = np.random.default_rng(11)
    for _ in range(25):
        dense = rng.integers(0, 2, size=(8, 20), dtype=np.uint8)
        r = gf2_rank(Gf2Matrix.from_dense(dense))
        i, j = rng.choice(8, size=2, replace=False)
        swapped = dense.copy()
        swapped[[i, j]] = swapped[[j, i]]
        added = dense.copy()
        added[i] ^= added[j]
        assert gf2_rank(Gf2Matrix.from_dense(swapped)) == r
        assert gf2_rank(Gf2Matrix.from_dense(added)) == r


def test_row_reduce_is_rref():
    rng = np.random.default_rng(5)
    dense = rng.integers(0, 2, size=(6, 15), dtype=np.uint8)
    R, pivots = gf2_row_reduce(Gf2Matrix.from_dense(dense))
    rd = R.to_dense()
    assert len(pivots) == gf2_rank(Gf2Matrix.from_dense(dense))
    for k, c in enumerate(pivots):
        col = rd[:, c]
        assert col[k] == 1 and col.sum() == 1
    assert not rd[len(pivots):].any()
    # same row space
    stacked = np.vstack([dense, rd])
    assert gf2_rank(Gf2Matrix.from_dense(stacked)) == len(pivots)
