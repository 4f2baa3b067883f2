# mdburst/codes/code_tests/test_designs.py
from __future__ import annotations

import itertools

import pytest

from mdburst.codes.designs import (
    PackingDesign,
    affine_lines,
    design_from_text,
    design_to_text,
    pair_to_block,
    read_design,
    smallest_prime_power,
    steiner_block_count,
    steiner_packing,
    trivial_packing,
    verify_packing,
    write_design,
)
from mdburst.core.errors import FormatError, ParameterError


def test_trivial_blocks():
    d = trivial_packing(2, 3)
    assert d.v == 6
    assert d.blocks == ((0, 1, 2), (3, 4, 5))
    assert trivial_packing(1, 2).blocks == ((0, 1),)
    assert verify_packing(trivial_packing(3, 2))


@pytest.mark.parametrize("q,s,expected", [(2, 2, 6), (3, 2, 12), (2, 3, 28)])
def test_affine_line_counts(q, s, expected):
    lines = affine_lines(q, s)
    assert steiner_block_count(q, s) == expected
    assert len(lines) == expected
    assert all(len(line) == q for line in lines)
    # every pair of points lies on exactly one line
    pairs = [pair for line in lines for pair in itertools.combinations(line, 2)]
    assert len(pairs) == len(set(pairs)) == q**s * (q**s - 1) // 2


def test_prime_power_search():
    assert smallest_prime_power(2) == 2
    assert smallest_prime_power(6) == 7
    assert smallest_prime_power(4) == 4
    assert smallest_prime_power(10) == 11


def test_steiner_b2_is_all_pairs():
    d = steiner_packing(6, 2)
    assert d.v == 4
    assert set(d.blocks) == set(itertools.combinations(range(4), 2))
    assert verify_packing(d)
    assert d.blocks[pair_to_block(d, 0, 3)] == (0, 3)


def test_steiner_b3_keeps_nine_lines():
    d = steiner_packing(9, 3)
    assert d.v == 9
    assert d.D == 9
    assert verify_packing(d)


def test_steiner_truncates_blocks_to_b():
    d = steiner_packing(5, 3)
    assert smallest_prime_power(3) == 3
    assert all(len(blk) == 3 for blk in d.blocks)
    d = steiner_packing(4, 2)
    assert d.D == 4 and verify_packing(d)


def test_steiner_rejects_short_geometry():
    with pytest.raises(ParameterError):
        steiner_packing(7, 2, s=2)


def test_verify_detects_repeated_pair():
    assert not verify_packing(PackingDesign.from_blocks(3, 2, [(0, 1), (0, 1)]))


def test_pair_lookup():
    d = trivial_packing(2, 3)
    assert pair_to_block(d, 3, 5) == 1
    assert pair_to_block(d, 5, 3) == 1
    assert pair_to_block(d, 0, 3) is None
    with pytest.raises(ParameterError):
        pair_to_block(d, 2, 2)


def test_text_round_trip(tmp_path):
    d = steiner_packing(9, 3)
    assert design_from_text(design_to_text(d)) == d
    path = tmp_path / "design.txt"
    write_design(str(path), d)
    assert read_design(str(path)) == d


def test_text_rejects_bad_input():
    with pytest.raises(FormatError):
        design_from_text("4 2\n0 1\n")
    with pytest.raises(FormatError):
        design_from_text("4 2 2\n0 1\n")
    with pytest.raises(FormatError):
        design_from_text("4 2 1\n0 9\n")
