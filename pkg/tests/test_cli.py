"""CLI behavior: subcommands, formats, exit codes, determinism."""
import json

import pytest

from arfspin.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- counts --------------------------------------------------------------------


def test_counts_single_cell_csv(capsys):
    code, out, err = run(capsys, "counts", "--g", "3", "--k", "2", "--eps", "1", "--m", "2")
    assert code == 0
    assert out.splitlines() == [
        "g,k,eps,m,delta,N",
        "3,2,1,2,0,12",
        "3,2,1,2,1,4",
    ]


def test_counts_single_cell_json(capsys):
    code, out, _ = run(
        capsys, "counts", "--g", "5", "--k", "0", "--eps", "0", "--m", "4",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert rows == [
        {"g": 5, "k": 0, "eps": 0, "m": 4, "delta": 0, "N": 512},
        {"g": 5, "k": 0, "eps": 0, "m": 4, "delta": 1, "N": 512},
    ]


def test_counts_range_mode(capsys):
    code, out, _ = run(capsys, "counts", "--g-max", "2", "--m-max", "2")
    assert code == 0
    lines = out.splitlines()
    # 5 valid types at g=2, one modulus, two parities each, plus a header.
    assert lines[0] == "g,k,eps,m,delta,N"
    assert len(lines) == 11


def test_counts_requires_exactly_one_mode(capsys):
    code, _, err = run(capsys, "counts", "--g", "3")
    assert code == 2
    assert "provide either" in err
    code, _, err = run(
        capsys, "counts", "--g", "3", "--k", "2", "--eps", "1", "--m", "2",
        "--g-max", "3", "--m-max", "2",
    )
    assert code == 2


def test_counts_rejects_invalid_type(capsys):
    code, _, err = run(capsys, "counts", "--g", "3", "--k", "1", "--eps", "1", "--m", "2")
    assert code == 2
    assert "error" in err


def test_counts_rejects_small_modulus(capsys):
    code, _, _ = run(capsys, "counts", "--g", "3", "--k", "2", "--eps", "1", "--m", "1")
    assert code == 2


# --- verify --------------------------------------------------------------------


def test_verify_smallest_range_csv(capsys):
    code, out, err = run(capsys, "verify", "--g-max", "2", "--m-max", "2")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "g,k,eps,m,n,total,even,odd,cf_even,cf_odd,match"
    assert len(lines) == 5
    assert lines[1] == "2,0,0,2,3,4,2,2,2,2,true"
    assert all(line.endswith(",true") for line in lines[1:])


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--g-max", "2", "--m-max", "3", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert all(r["match"] for r in reports)
    assert {tuple(sorted(r)) for r in reports} == {
        tuple(sorted(["g", "k", "eps", "m", "n", "total", "even", "odd",
                      "cf_even", "cf_odd", "match"]))
    }


def test_verify_output_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, "verify", "--g-max", "3", "--m-max", "3")
    _, second, _ = run(capsys, "verify", "--g-max", "3", "--m-max", "3")
    assert first == second


def test_verify_respects_thread_env(capsys, monkeypatch):
    _, sequential, _ = run(capsys, "verify", "--g-max", "2", "--m-max", "2")
    monkeypatch.setenv("ARFSPIN_THREADS", "2")
    code, parallel, _ = run(capsys, "verify", "--g-max", "2", "--m-max", "2")
    assert code == 0
    assert parallel == sequential


def test_bad_thread_env_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("ARFSPIN_THREADS", "lots")
    code, _, err = run(capsys, "verify", "--g-max", "2", "--m-max", "2")
    assert code == 2
    assert "ARFSPIN_THREADS" in err
    monkeypatch.setenv("ARFSPIN_THREADS", "0")
    code, _, _ = run(capsys, "verify", "--g-max", "2", "--m-max", "2")
    assert code == 2


# --- cover-check ----------------------------------------------------------------


def test_cover_check_reports_all_identities(capsys):
    code, out, err = run(capsys, "cover-check", "--m", "3", "--samples", "20", "--seed", "5")
    assert code == 0
    assert err == ""
    report = json.loads(out)
    assert len(report) == 8
    assert all(entry["pass"] for entry in report)
    assert all(entry["samples"] == 20 for entry in report)


def test_cover_check_deterministic_for_fixed_seed(capsys):
    _, first, _ = run(capsys, "cover-check", "--m", "4", "--samples", "15", "--seed", "9")
    _, second, _ = run(capsys, "cover-check", "--m", "4", "--samples", "15", "--seed", "9")
    assert first == second


def test_cover_check_fails_on_unreachable_tolerance(capsys):
    code, out, err = run(
        capsys, "cover-check", "--m", "2", "--samples", "5", "--tol", "1e-30"
    )
    assert code == 1
    assert "identity check failed" in err
    assert not all(entry["pass"] for entry in json.loads(out))


def test_cover_check_usage_errors(capsys):
    assert run(capsys, "cover-check", "--m", "1")[0] == 2
    assert run(capsys, "cover-check", "--m", "3", "--samples", "0")[0] == 2
    assert run(capsys, "cover-check", "--m", "3", "--tol", "0")[0] == 2


# --- enumerate ------------------------------------------------------------------


def test_enumerate_streams_json_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--g", "3", "--k", "2", "--eps", "1", "--m", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 16
    first = json.loads(lines[0])
    assert first == {
        "m": 2, "g": 3, "k": 2, "eps": 1, "n": 2,
        "alpha": [0], "beta": [0], "gamma": [0], "delta": [0],
        "gamma_n": 0, "arf_invariant": 1,
    }
    # parities across the stream must add up to the closed forms
    invariants = [json.loads(line)["arf_invariant"] for line in lines]
    assert invariants.count(0) == 12 and invariants.count(1) == 4


def test_enumerate_empty_when_genus_inadmissible(capsys):
    code, out, _ = run(capsys, "enumerate", "--g", "3", "--k", "1", "--eps", "0", "--m", "3")
    assert code == 0
    assert out == ""


def test_enumerate_rejects_bad_curve_count(capsys):
    code, _, err = run(
        capsys, "enumerate", "--g", "4", "--k", "0", "--eps", "0", "--m", "2", "--n", "1"
    )
    assert code == 2
    assert "n=1" in err


# --- generic --------------------------------------------------------------------


def test_output_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "rows.csv"
    code, out, _ = run(
        capsys, "counts", "--g", "3", "--k", "2", "--eps", "1", "--m", "2",
        "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[1] == "3,2,1,2,0,12"


def test_no_arguments_is_a_usage_error(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "unknown-command")[0] == 2
