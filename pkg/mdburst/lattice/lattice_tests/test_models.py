# mdburst/lattice/lattice_tests/test_models.py
from __future__ import annotations

import itertools

import pytest

from mdburst.core.errors import CapExceededError, ParameterError
from mdburst.core.settings import Caps
from mdburst.lattice.models import (
    BurstModel,
    ErrorPattern,
    ModelKind,
    b_close,
    count_l1,
    count_l1_lower,
    count_linf,
    count_straight,
    enumerate_errors,
    golomb_welch_count,
)

LINF, L1, STR = ModelKind.LINF, ModelKind.L1, ModelKind.STRAIGHT


def _n_patterns(n, b, D, kind):
    return sum(1 for _ in enumerate_errors(n, D, BurstModel(kind, b)))


def test_b_close_examples():
    assert b_close((0, 0), (2, 2), BurstModel(LINF, 3))
    assert not b_close((0, 0), (2, 2), BurstModel(L1, 3))
    assert b_close((0, 0), (2, 0), BurstModel(STR, 3))
    assert not b_close((0, 0), (1, 1), BurstModel(STR, 3))
    with pytest.raises(ParameterError):
        b_close((0,), (0, 1), BurstModel(LINF, 2))


def test_model_rejects_small_b():
    with pytest.raises(ParameterError):
        BurstModel(LINF, 1)


def test_tiny_enumeration():
    pats = list(enumerate_errors(2, 1, BurstModel(LINF, 2)))
    assert pats == [
        ErrorPattern(),
        ErrorPattern(((0,),)),
        ErrorPattern(((1,),)),
        ErrorPattern(((0,), (1,))),
    ]


def test_known_counts():
    assert _n_patterns(4, 2, 2, LINF) == 59 == count_linf(4, 2, 2)
    assert _n_patterns(4, 2, 2, STR) == 41 == count_straight(4, 2, 2)
    assert _n_patterns(4, 2, 2, L1) == 41 == count_l1(4, 2, 2)


@pytest.mark.parametrize("n,b,D", [(n, b, D) for n in range(2, 7) for b in (2, 3) for D in (1, 2, 3) if n >= b])
def test_closed_forms_match_enumeration(n, b, D):
    e_inf = _n_patterns(n, b, D, LINF)
    e_1 = _n_patterns(n, b, D, L1)
    e_str = _n_patterns(n, b, D, STR)
    assert e_inf == count_linf(n, b, D)
    assert e_str == count_straight(n, b, D)
    assert e_1 == count_l1(n, b, D)
    assert e_str <= e_1 <= e_inf


@pytest.mark.parametrize("n,b", [(n, b) for n in range(2, 7) for b in range(2, 6) if n >= b])
def test_one_dimension_models_coincide(n, b):
    assert count_linf(n, b, 1) == count_straight(n, b, 1) == count_l1(n, b, 1)


def test_enumeration_is_unique_and_close():
    for kind in ModelKind:
        model = BurstModel(kind, 3)
        pats = list(enumerate_errors(4, 2, model))
        assert len(set(pats)) == len(pats)
        for p in pats:
            if p.weight == 2:
                assert b_close(p.positions[0], p.positions[1], model)


def test_predicates_nested_and_symmetric():
    for b in (2, 3):
        for i, j in itertools.product(itertools.product(range(4), repeat=2), repeat=2):
            s = b_close(i, j, BurstModel(STR, b))
            l1 = b_close(i, j, BurstModel(L1, b))
            linf = b_close(i, j, BurstModel(LINF, b))
            assert (not s or l1) and (not l1 or linf)
            assert l1 == b_close(j, i, BurstModel(L1, b))


def test_l1_count_above_lower_estimate():
    assert count_l1(3, 3, 2) >= count_l1_lower(3, 3, 2)
    for n, b, D in [(8, 2, 2), (9, 3, 2), (6, 2, 3)]:
        assert count_l1(n, b, D) >= count_l1_lower(n, b, D)


def test_golomb_welch_counts_l1_ball():
    for b in (2, 3, 4):
        for D in (1, 2, 3):
            ball = sum(
                1
                for e in itertools.product(range(-(b - 1), b), repeat=D)
                if sum(abs(x) for x in e) <= b - 1
            )
            assert golomb_welch_count(b, D) == ball


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_errors(10, 3, BurstModel(LINF, 2), Caps(cells=100)))


def test_pattern_normalizes_order():
    assert ErrorPattern.of((1, 1), (0, 0)).positions == ((0, 0), (1, 1))
    with pytest.raises(ParameterError):
        ErrorPattern.of((0, 0), (0, 0))
