# mdburst/commander/commander_tests/test_cli.py
from __future__ import annotations

import csv
import io

import pytest

from mdburst import cli
from mdburst.commander.module import Module

LINF_422 = ["--model", "linf", "-n", "4", "-b", "2", "-D", "2"]


@pytest.fixture
def spec_file(tmp_path):
    path = tmp_path / "linf.spec"
    assert cli.main(["build", *LINF_422, "-o", str(path)]) == 0
    return path


def test_build_prints_summary(capsys):
    assert cli.main(["build", *LINF_422]) == 0
    out = capsys.readouterr().out
    assert out.startswith("linf/basic n=4 b=2 D=2")
    assert "N=16 rows=13" in out


@pytest.mark.parametrize("seed", [0, 3, 11])
def test_corrupt_then_decode_restores_codeword(tmp_path, spec_file, seed):
    word = tmp_path / "word.bw1"
    bad = tmp_path / "bad.bw1"
    fixed = tmp_path / "fixed.bw1"
    assert cli.main(["--seed", str(seed), "encode", "--spec", str(spec_file), "-o", str(word)]) == 0
    assert cli.main(["--seed", str(seed + 1), "corrupt", "--spec", str(spec_file), "-i", str(word), "-o", str(bad)]) == 0
    assert cli.main(["decode", "--spec", str(spec_file), "-i", str(bad), "-o", str(fixed)]) == 0
    assert fixed.read_bytes() == word.read_bytes()


def test_encode_is_seeded(tmp_path, spec_file):
    a, b = tmp_path / "a.bw1", tmp_path / "b.bw1"
    assert cli.main(["--seed", "7", "encode", "--spec", str(spec_file), "-o", str(a)]) == 0
    assert cli.main(["--seed", "7", "encode", "--spec", str(spec_file), "-o", str(b)]) == 0
    assert a.read_text() == b.read_text()
    assert a.read_text().startswith("BW1 side=4 D=2\n")


def test_decode_prints_corrected_word(tmp_path, spec_file, capsys):
    bad = tmp_path / "bad.bw1"
    # zero codeword with cells (0,0) and (1,1) flipped
    bad.write_text("BW1 side=4 D=2\n1200\n")
    assert cli.main(["decode", "--spec", str(spec_file), "-i", str(bad)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "double (0,0) (1,1)"
    assert out[1:] == ["BW1 side=4 D=2", "0000"]


def test_word_shape_mismatch_is_an_error(tmp_path, spec_file, capsys):
    bad = tmp_path / "bad.bw1"
    bad.write_text("BW1 side=2 D=2\n0\n")
    assert cli.main(["decode", "--spec", str(spec_file), "-i", str(bad)]) == 2
    assert "side=2" in capsys.readouterr().err


def test_verify_passes(capsys):
    assert cli.main(["--samples", "2", "verify", *LINF_422, "--faults"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "PASS"
    assert any("fault-injection" in line and "detected 16/16" in line for line in out)


def test_verify_csv(capsys):
    assert cli.main(["--samples", "1", "verify", "--model", "l1", "--variant", "b3", "-n", "4", "-b", "3", "-D", "2", "--csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert {r["result"] for r in rows} == {"pass"}
    assert "count-cross-check" in {r["check"] for r in rows}


def test_bounds_one_dimension(capsys):
    assert cli.main(["bounds", "-b", "2", "-D", "1"]) == 0
    out = capsys.readouterr().out
    assert "ceil(log2(b+1))" in out
    assert "2.0000" in out


def test_count(capsys):
    assert cli.main(["count", "-n", "4", "-b", "2", "-D", "2"]) == 0
    assert "linf=59 l1=41 straight=41" in capsys.readouterr().out


def test_construction_error_exits_2(capsys):
    code = cli.main(["build", "--model", "linf", "--variant", "extended", "-n", "3", "-b", "3", "-D", "1"])
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")


def test_caps_from_flag_and_config(tmp_path, capsys):
    assert cli.main(["--cap-cells", "10", "count", "-n", "4", "-b", "2", "-D", "2"]) == 2
    cfg = tmp_path / "mdburst.toml"
    cfg.write_text("[caps]\ncells = 10\n")
    assert cli.main(["--config", str(cfg), "count", "-n", "4", "-b", "2", "-D", "2"]) == 2
    assert cli.main(["--config", str(tmp_path / "missing.toml"), "count", "-n", "4", "-b", "2", "-D", "2"]) == 2


def test_failed_reply_exits_1(monkeypatch, capsys):
    m = Module()
    m.def_command("fail", lambda a: {"ok": False, "text": "nope"})
    monkeypatch.setattr(cli, "build_command_module", lambda ctx: m)
    assert cli.main(["fail"]) == 1
    assert capsys.readouterr().out == "nope\n"


GRID_ARGS = [
    ["--model", "linf", "-n", "4", "-b", "2", "-D", "1"],
    ["--model", "linf", "-n", "5", "-b", "3", "-D", "2"],
    ["--model", "linf", "-n", "3", "-b", "2", "-D", "3"],
    ["--model", "linf", "--variant", "extended", "-n", "3", "-b", "2", "-D", "2"],
    ["--model", "linf", "--variant", "extended-pow2", "-n", "4", "-b", "2", "-D", "2"],
    ["--model", "l1", "-n", "2", "-b", "2", "-D", "2"],
    ["--model", "l1", "--variant", "b3", "-n", "4", "-b", "3", "-D", "2"],
    ["--model", "straight", "-n", "4", "-b", "2", "-D", "3"],
    ["--model", "straight", "--design", "steiner", "-n", "4", "-b", "2", "-D", "5"],
]


@pytest.mark.parametrize("code_args", GRID_ARGS)
def test_round_trip_on_grid(tmp_path, code_args):
    spec = tmp_path / "code.spec"
    assert cli.main(["build", *code_args, "-o", str(spec)]) == 0
    word, bad, fixed = tmp_path / "w.bw1", tmp_path / "bad.bw1", tmp_path / "fixed.bw1"
    for seed in range(3):
        assert cli.main(["--seed", str(seed), "encode", "--spec", str(spec), "-o", str(word)]) == 0
        assert cli.main(["--seed", str(seed), "corrupt", "--spec", str(spec), "-i", str(word), "-o", str(bad)]) == 0
        assert cli.main(["decode", "--spec", str(spec), "-i", str(bad), "-o", str(fixed)]) == 0
        assert fixed.read_bytes() == word.read_bytes()


def test_round_trip_seed_sweep(tmp_path, spec_file):
    word, bad, fixed = tmp_path / "w.bw1", tmp_path / "bad.bw1", tmp_path / "fixed.bw1"
    for seed in range(100):
        assert cli.main(["--seed", str(seed), "encode", "--spec", str(spec_file), "-o", str(word)]) == 0
        assert cli.main(["--seed", str(seed), "corrupt", "--spec", str(spec_file), "-i", str(word), "-o", str(bad)]) == 0
        assert cli.main(["decode", "--spec", str(spec_file), "-i", str(bad), "-o", str(fixed)]) == 0
        assert fixed.read_bytes() == word.read_bytes(), seed


def test_lee_build_reports_prime(capsys):
    assert cli.main(["build", "--model", "l1", "-n", "2", "-b", "2", "-D", "2"]) == 0
    assert "p=5" in capsys.readouterr().out.split()


def test_corrupt_is_seeded_and_covers_every_weight(tmp_path, capsys):
    zero = tmp_path / "zero.bw1"
    zero.write_text("BW1 side=4 D=1\n0\n")
    base = ["--model", "linf", "-n", "4", "-b", "2", "-D", "1", "-i", str(zero), "-o", str(tmp_path / "out.bw1")]
    assert cli.main(["--seed", "9", "corrupt", *base]) == 0
    assert cli.main(["--seed", "9", "corrupt", *base]) == 0
    first, second = capsys.readouterr().out.splitlines()
    assert first == second

    weights = set()
    for seed in range(200):
        assert cli.main(["--seed", str(seed), "corrupt", *base]) == 0
        line = capsys.readouterr().out.strip()
        weights.add(line.count("("))
    assert weights == {0, 1, 2}
