# mdburst/lattice/lattice_tests/test_indexing.py
from __future__ import annotations

import itertools

import numpy as np
import pytest

from mdburst.core.errors import ParameterError
from mdburst.lattice.indexing import (
    all_coordinates,
    from_value,
    to_value,
    vec_div_floor,
    vec_mod,
)


def test_to_value_examples():
    assert to_value((0, 0, 0), 4) == 0
    assert to_value((2, 1), 3) == 5
    assert to_value((-1, 1), 3) == 2


def test_from_value_examples():
    assert from_value(0, 3, 2) == (0, 0)
    assert from_value(5, 3, 2) == (2, 1)
    assert from_value(3**4 - 1, 3, 4) == (2, 2, 2, 2)
    with pytest.raises(ParameterError):
        from_value(9, 3, 2)


def test_vec_ops():
    assert vec_mod((5, 3), 2) == (1, 1)
    assert vec_div_floor((5, 3), 2) == (2, 1)
    for i in itertools.product(range(-7, 8), repeat=2):
        q, r = vec_div_floor(i, 3), vec_mod(i, 3)
        assert tuple(3 * a + b for a, b in zip(q, r)) == i


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("D", [1, 2, 3, 4])
def test_radix_bijection(q, D):
    for i in itertools.product(range(q), repeat=D):
        assert from_value(to_value(i, q), q, D) == i


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("D", [1, 2, 3])
def test_signed_digits_bound_and_zero(q, D):
    for i in itertools.product(range(-(q - 1), q), repeat=D):
        v = to_value(i, q)
        assert abs(v) <= q**D - 1
        assert (v == 0) == (not any(i))


def test_linearity_in_scalar():
    rng = np.random.default_rng(2)
    for z in rng.integers(-4, 5, size=(40, 3)):
        assert to_value(tuple(3 * z), 7) == 3 * to_value(tuple(z), 7)


def test_overflow_rejected():
    with pytest.raises(ParameterError):
        to_value((1,) * 130, 2**10)


def test_all_coordinates_order():
    cells = all_coordinates(3, 2)
    assert cells.shape == (9, 2)
    for v, row in enumerate(cells):
        assert to_value(tuple(int(x) for x in row), 3) == v
