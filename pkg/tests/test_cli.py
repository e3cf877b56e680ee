import io
import json
import subprocess
import sys

import pytest

from milnor_skein import cli, skein

from support import FIXTURES, GOLDEN

GOLDEN_CASES = ["trivial", "one_crossing", "front", "borromean", "borromean.events"]


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", GOLDEN_CASES)
def test_compute_golden(capsys, name):
    code, out, _ = run(capsys, "compute", FIXTURES / f"{name}.json")
    assert code == 0
    assert out == (GOLDEN / f"{name}.compute.tsv").read_text()


@pytest.mark.parametrize("name", GOLDEN_CASES)
def test_expand_golden(capsys, name):
    code, out, _ = run(capsys, "expand", FIXTURES / f"{name}.json")
    assert code == 0
    assert out == (GOLDEN / f"{name}.expand.txt").read_text()


@pytest.mark.parametrize("method", ["fox", "skein"])
def test_methods_print_identical_tables(capsys, method):
    for name in ("borromean", "one_crossing", "front"):
        code, out, _ = run(capsys, "compute", FIXTURES / f"{name}.json", "--method", method)
        assert code == 0
        assert out == (GOLDEN / f"{name}.compute.tsv").read_text()


def test_compute_rmax(capsys):
    code, out, _ = run(capsys, "compute", FIXTURES / "borromean.json", "--rmax", "1")
    assert (code, out) == (0, "1\t0\n2\t0\n")
    code, _, err = run(capsys, "compute", FIXTURES / "borromean.json", "--rmax", "3")
    assert code == 1 and "rmax" in err


def test_stdin_and_format_flag(capsys, monkeypatch):
    text = (FIXTURES / "borromean.events.json").read_text()
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, out, _ = run(capsys, "expand", "-", "--format", "events")
    assert code == 0 and out == "1 - X1*X2 + X2*X1\n"


def test_bad_input_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 1, "labels": ["1"], "components": {"1": [["c1", "o"]]}, '
                   '"loose": [], "loose_end": "bottom", "signs": {"c1": 1}}')
    code, out, err = run(capsys, "compute", bad)
    assert code == 1 and out == "" and "c1" in err
    code, _, _ = run(capsys, "compute", tmp_path / "missing.json")
    assert code == 1
    code, _, _ = run(capsys, "expand", FIXTURES / "hopf.json")
    assert code == 1


def test_guard_exit_2(capsys):
    code, out, err = run(
        capsys, "compute", FIXTURES / "borromean.json", "--method", "fox", "--guard-letters", "1"
    )
    assert code == 2 and out == "" and "letters" in err


def test_verify_skein_all(capsys):
    code, out, _ = run(capsys, "verify-skein", FIXTURES / "borromean.json", "--all")
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert len(reports) == 12  # four loose crossings, three seqs containing the met strand
    assert all(r["holds"] for r in reports)


def test_verify_skein_one_crossing(capsys):
    code, out, _ = run(capsys, "verify-skein", FIXTURES / "one_crossing.json", "--crossing", "c1", "--seq", "1")
    rep = json.loads(out)
    assert code == 0 and rep["lhs"] == rep["rhs"] == 1


def test_verify_skein_bad_crossing(capsys):
    code, _, _ = run(capsys, "verify-skein", FIXTURES / "borromean.json", "--crossing", "c1")
    assert code == 1
    code, _, _ = run(capsys, "verify-skein", FIXTURES / "borromean.json", "--crossing", "c3", "--seq", "1")
    assert code == 1


def test_verify_skein_failure_exit_3(capsys, monkeypatch):
    real = skein.skein_sides

    def flipped(d, cid, seq):
        rep = real(d, cid, seq)
        return type(rep)(**{**rep.__dict__, "rhs": -rep.rhs, "holds": rep.lhs == -rep.rhs})

    monkeypatch.setattr(skein, "skein_sides", flipped)
    code, out, _ = run(capsys, "verify-skein", FIXTURES / "one_crossing.json", "--all")
    assert code == 3
    assert json.loads(out)["holds"] is False


def test_usage_errors(capsys):
    assert run(capsys, "random-suite", "--trials", "0")[0] == 64
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify-skein", str(FIXTURES / "borromean.json")])
    assert exc.value.code == 64


def test_random_suite_deterministic(capsys):
    code, first, _ = run(capsys, "random-suite", "--seed", "5", "--trials", "3")
    assert code == 0
    summary = json.loads(first)
    assert summary["failures"] == 0 and summary["seed"] == 5
    assert set(summary["suites"]) == {
        "method_agreement", "skein_identity", "fox_lemma", "invariance", "linking_number", "vanishing"
    }
    assert run(capsys, "random-suite", "--seed", "5", "--trials", "3")[1] == first


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "milnor_skein.cli", "compute", str(FIXTURES / "borromean.json")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "1 2\t-1\n" in proc.stdout
