# mdburst/codes/code_tests/test_leecode.py
from __future__ import annotations

import math

import numpy as np
import pytest

from mdburst.algebra.fields import prime_ext_field
from mdburst.codes.leecode import (
    _check_rows,
    kernel_min_lee_weight,
    lee_ball,
    lee_bch_new,
    lee_decode,
    lee_degree,
    lee_min_distance_bruteforce,
    lee_syndrome,
    lift_residues,
)
from mdburst.core.errors import ParameterError


@pytest.mark.parametrize("p,b,D", [(5, 2, 2), (5, 2, 4), (7, 3, 4)])
def test_distance_and_redundancy(p, b, D):
    code = lee_bch_new(p, b, D)
    assert code.r <= 1 + (b - 1) * code.s
    assert lee_min_distance_bruteforce(code) >= 2 * b


def test_small_check_rows():
    F = prime_ext_field(5, 1)
    assert _check_rows(5, 2, 2, F).tolist() == [[1, 1], [1, 2]]
    code = lee_bch_new(5, 2, 2)
    assert code.s == 1 and code.r == 2


def test_degree():
    assert lee_degree(5, 4) == 1
    assert lee_degree(5, 5) == 2
    assert lee_degree(3, 8) == 2


def test_table_size():
    code = lee_bch_new(7, 3, 6)
    assert len(code.decode_table) == len(list(lee_ball(6, 2))) == 85


@pytest.mark.parametrize("p,b,D", [(5, 2, 4), (7, 3, 4), (11, 4, 3)])
def test_decode_lift_round_trip(p, b, D):
    code = lee_bch_new(p, b, D)
    for eps in lee_ball(D, b - 1):
        res = tuple(x % p for x in eps)
        got = lee_decode(code, lee_syndrome(code, res))
        assert got == res
        assert lift_residues(got, b, p) == eps


def test_syndrome_linearity():
    code = lee_bch_new(7, 3, 4)
    u, v = (1, 2, 3, 4), (6, 0, 5, 1)
    s = lee_syndrome(code, [x + y for x, y in zip(u, v)])
    expected = tuple((x + y) % 7 for x, y in zip(lee_syndrome(code, u), lee_syndrome(code, v)))
    assert s == expected
    assert lee_syndrome(code, (0, 0, 0, 0)) == (0,) * code.r


def test_lift_examples():
    assert lift_residues((4, 0), 2, 5) == (-1, 0)
    assert lift_residues((1, 0), 2, 5) == (1, 0)
    assert lift_residues((6, 1), 3, 7) == (-1, 1)
    with pytest.raises(ParameterError):
        lift_residues((2, 0), 2, 5)
    with pytest.raises(ParameterError):
        lift_residues((1, 1), 2, 5)


def test_trivial_kernel_is_infinite():
    assert kernel_min_lee_weight(np.eye(2, dtype=np.int64), 5, 2) == math.inf


def test_preconditions():
    with pytest.raises(ParameterError):
        lee_bch_new(4, 1, 2)
    with pytest.raises(ParameterError):
        lee_bch_new(5, 3, 2)
