import csv
import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from copz.cli import main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_zeros_json():
    code, out, _ = run_cli(
        [
            "zeros",
            "--family",
            "hahn",
            "--n",
            "3",
            "--set",
            "alpha=0.5",
            "--set",
            "beta=1",
            "--set",
            "N=10",
            "--format",
            "json",
        ]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert len(payload["zeros_x"]) == 3
    assert all(0.0 < z < 9.0 for z in payload["zeros_x"])


def test_sweep_csv_degree_one_charlier():
    code, out, _ = run_cli(
        [
            "sweep",
            "--family",
            "charlier",
            "--n",
            "1",
            "--param",
            "alpha",
            "--from",
            "0.5",
            "--to",
            "4",
            "--steps",
            "8",
            "--format",
            "csv",
        ]
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["t", "z1"]
    assert len(rows) == 9
    for t, z1 in rows[1:]:
        assert float(z1) == pytest.approx(float(t), rel=1e-10)


def test_invalid_input_exit_code_and_message():
    code, _, err = run_cli(
        ["zeros", "--family", "krawtchouk", "--n", "1", "--set", "alpha=1.2", "--set", "N=5"]
    )
    assert code == 2
    assert "alpha" in err and "0 < alpha < 1" in err


def test_verify_racah_example():
    code, out, _ = run_cli(
        [
            "verify",
            "--family",
            "racah",
            "--set",
            "a=1",
            "--set",
            "alpha=0",
            "--set",
            "beta=0.5",
            "--set",
            "N=6",
            "--n",
            "3",
        ]
    )
    assert code == 0
    assert "eq1: PASS" in out
    assert "orthogonality: PASS" in out
    assert "verify racah: PASS" in out


def test_families_listing_json():
    code, out, _ = run_cli(["families", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    kinds = {f["kind"] for f in payload["families"]}
    assert {"hahn", "q_racah", "al_salam_carlitz_1"} <= kinds


def test_stieltjes_json_flags():
    code, out, _ = run_cli(
        [
            "stieltjes",
            "--family",
            "meixner",
            "--n",
            "2",
            "--param",
            "beta",
            "--set",
            "alpha=0.5",
            "--set",
            "beta=1.5",
            "--format",
            "json",
        ]
    )
    assert code == 0
    payload = json.loads(out)
    flags = payload["flags"]
    assert flags["offdiag_negative"] and flags["diag_dominant"] and flags["inverse_positive"]
    assert len(payload["solution"]) == 2
    for a, b in zip(payload["solution"], payload["fd_solution"]):
        assert a == pytest.approx(b, rel=1e-4)


def test_interlace_text_and_not_applicable():
    code, out, _ = run_cli(
        [
            "interlace",
            "--family",
            "hahn",
            "--n",
            "2",
            "--set",
            "alpha=0",
            "--set",
            "beta=0.5",
            "--set",
            "N=6",
        ]
    )
    assert code == 0
    assert "interior-interlace" in out
    code, out, _ = run_cli(
        [
            "interlace",
            "--family",
            "krawtchouk",
            "--n",
            "2",
            "--set",
            "alpha=0.5",
            "--set",
            "N=6",
        ]
    )
    assert code == 0
    assert "not-applicable" in out


def test_unknown_family_is_invalid_input():
    code, _, err = run_cli(["zeros", "--family", "nope", "--n", "1"])
    assert code == 2
    assert "unknown family" in err


def test_out_file(tmp_path):
    target = tmp_path / "zeros.json"
    code, out, _ = run_cli(
        [
            "zeros",
            "--family",
            "charlier",
            "--n",
            "2",
            "--set",
            "alpha=2",
            "--format",
            "json",
            "--out",
            str(target),
        ]
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["schema"] == 1
