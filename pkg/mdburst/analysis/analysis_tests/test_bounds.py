# mdburst/analysis/analysis_tests/test_bounds.py
from __future__ import annotations

import csv
import io
import math

import pytest

from mdburst.analysis.bounds import (
    CSV_COLUMNS,
    Side,
    render_csv,
    render_text,
    summary_table,
    xi_lower_l1,
    xi_lower_l1_entropy,
    xi_lower_l1_weak,
    xi_lower_linf,
    xi_lower_straight,
    xi_upper_l1,
    xi_upper_l1_b3,
    xi_upper_linf_basic,
    xi_upper_linf_ext,
    xi_upper_linf_ext_pow2,
    xi_upper_straight_steiner,
    xi_upper_straight_trivial,
)
from mdburst.core.errors import ParameterError


def test_linf_values():
    assert xi_upper_linf_basic(4, 2, 2) == 9
    assert xi_upper_linf_basic(5, 2, 2) == 8
    assert xi_upper_linf_basic(3, 2, 1) == 5
    assert xi_upper_linf_ext(2, 2) == pytest.approx(7.0)
    assert xi_upper_linf_ext_pow2(2, 2) == pytest.approx(6.0)
    assert xi_lower_linf(2, 2) == pytest.approx(2 * math.log2(3) - 2, abs=1e-12)
    assert round(xi_lower_linf(2, 2), 4) == 1.1699


@pytest.mark.parametrize("b,D", [(b, D) for b in range(2, 7) for D in range(1, 7)])
def test_extended_gap_is_positive(b, D):
    gap = xi_upper_linf_ext(b, D) - xi_lower_linf(b, D)
    assert gap == pytest.approx(D * (math.log2(2 * b) - math.log2(2 * b - 1)) + 5)
    assert gap > 0


def test_l1_values():
    assert xi_upper_l1(2, 2) == pytest.approx(18 + 2 * math.log2(3), abs=1e-12)
    assert round(xi_upper_l1(2, 2), 4) == 21.1699
    assert xi_lower_l1(3, 3) == pytest.approx(math.log2(3) - 1)
    assert xi_lower_l1(2, 1) == pytest.approx(-2.0)
    assert xi_upper_l1_b3(4) == pytest.approx(12.0)


def test_entropy_form():
    assert xi_lower_l1_entropy(3, 4) == pytest.approx(3.94, abs=0.01)
    assert math.isfinite(xi_lower_l1_entropy(2, 1))
    # linear growth in max(D, b-1) with the ratio held fixed
    a, b = xi_lower_l1_entropy(3, 4) + 3, xi_lower_l1_entropy(5, 8) + 3
    assert b == pytest.approx(2 * a)


@pytest.mark.parametrize("b,D", [(b, D) for b in range(2, 8) for D in range(1, 8)])
def test_weak_form_never_above_exact(b, D):
    assert xi_lower_l1_weak(b, D) <= xi_lower_l1(b, D) + 1e-9


def test_straight_values():
    assert xi_upper_straight_trivial(3, 4) == pytest.approx(2 * math.log2(3) + 9)
    assert xi_lower_straight(3, 4) == 1
    assert xi_lower_straight(3, 4, refined=True) == 2
    assert xi_upper_straight_steiner(2, 8) == pytest.approx(12.0)


def test_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        xi_upper_l1(1, 2)
    with pytest.raises(ParameterError):
        summary_table(2, 0)


def test_one_dimensional_reference_row():
    report = summary_table(2, 1)
    rows = [e for e in report.entries if e.label == "ceil(log2(b+1))"]
    assert len(rows) == 1
    assert rows[0].value == 2.0
    assert rows[0].applies and rows[0].reference_only


def test_straight_lower_entry():
    report = summary_table(3, 4)
    lower = [e for e in report.for_model("straight") if e.side is Side.LOWER]
    assert lower[0].value == 1


@pytest.mark.parametrize("b,D", [(b, D) for b in range(2, 7) for D in range(1, 7)])
def test_tables_are_consistent(b, D):
    assert summary_table(b, D).consistent()


def test_rendering():
    report = summary_table(3, 2)
    text = render_text(report)
    assert text.startswith("excess redundancy bounds, b=3 D=2")
    for e in report.entries:
        assert e.label in text
    rows = list(csv.reader(io.StringIO(render_csv(report))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == len(report.entries) + 1
    assert {r[2] for r in rows[1:]} == {"upper", "lower"}
    assert all(len(r[3].split(".")[1]) == 4 for r in rows[1:])
