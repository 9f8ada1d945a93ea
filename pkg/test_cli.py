"""Tests for the wwlab command line."""

import json

import pytest

from conftest import WORKED_LAMBDA, WORKED_MU, WORKED_NU1, WORKED_NU2, WORKED_NU3
from main import main, parse_k_range, parse_substitutions
from core import SubstitutionSyntaxError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ── Argument Helpers ─────────────────────────────────────────

def test_k_ranges():
    assert parse_k_range("3") == [3]
    assert parse_k_range("1..4") == [1, 2, 3, 4]
    for bad in ("4..1", "x", "-1..2"):
        with pytest.raises(ValueError):
            parse_k_range(bad)


def test_a_colour_substituted_twice():
    with pytest.raises(SubstitutionSyntaxError):
        parse_substitutions(["b=c", "b=1"])


# ── enumerate ────────────────────────────────────────────────

def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "P", "--max-part", "1", "--max-weight", "2", "--counts")
    assert code == 0
    assert out.splitlines() == ["0 1", "1 4", "2 5"]


def test_enumerate_lists_partitions(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "C", "--max-part", "2", "--max-weight", "2")
    assert code == 0
    assert set(out.splitlines()) == {"", "1a", "1c", "1d", "2a", "2c", "2d", "1d+1a"}


# ── series ───────────────────────────────────────────────────

@pytest.mark.parametrize("argv,expected", [
    (["--family", "GC", "--k", "1", "--trunc", "3"], "1 + (a+c+d)*q + (a*d)*q^2 + O(q^3)"),
    (["--family", "H", "--k", "0", "--trunc", "3"], "1 + (b)*q + (b^2)*q^2 + O(q^3)"),
    (["--family", "GP", "--k", "1", "--trunc", "2", "--set", "b=c"], "1 + (a+2*c+d)*q + O(q^2)"),
    (["--family", "CLOSED-GC", "--k", "1", "--trunc", "3"], "1 + (a+c+d)*q + (a*d)*q^2 + O(q^3)"),
    (["--family", "PRODUCT-CAPA", "--trunc", "3"], "1 + (1+a+d)*q + (1+a+d+a*d)*q^2 + O(q^3)"),
])
def test_series(capsys, argv, expected):
    code, out, _ = run(capsys, "series", *argv)
    assert code == 0
    assert out.strip() == expected


def test_series_needs_k(capsys):
    code, out, err = run(capsys, "series", "--family", "GC", "--trunc", "3")
    assert code == 2
    assert out == ""
    assert "--k is required" in err


def test_bad_substitution_exits_2(capsys):
    code, _, err = run(capsys, "series", "--family", "GC", "--k", "1", "--set", "b=e")
    assert code == 2
    assert err.startswith("wwlab: error:")


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--family", "GC", "--k", "1", "--trunc", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["k"] == 1
    assert data["series"]["trunc"] == 3
    assert data["text"] == "1 + (a+c+d)*q + (a*d)*q^2 + O(q^3)"


# ── verify ───────────────────────────────────────────────────

def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "main", "--k", "1..2", "--trunc", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["PASS", "main", "k=1"]
    assert lines[-1] == "2 passed, 0 failed"


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "cor-capa-fini-printed", "--k", "1", "--trunc", "6")
    assert code == 1
    assert out.startswith("FAIL")
    assert "differs at q^" in out
    assert out.splitlines()[-1] == "0 passed, 1 failed"


def test_unknown_theorem_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "nope")
    assert code == 2
    assert "Unknown theorem" in err


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    assert any(line.startswith("main ") for line in out.splitlines())
    assert "[report only]" in out


def test_verify_output_is_reproducible(capsys):
    argv = ("verify", "--theorem", "euler", "--trunc", "10", "--json")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    data = json.loads(first)
    assert data["schema"] == 1
    assert data["passed"] == 1
    assert "elapsed" not in data["reports"][0]


def test_verify_timing_adds_elapsed(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "euler", "--trunc", "8", "--json", "--timing")
    assert code == 0
    assert "elapsed" in json.loads(out)["reports"][0]


def test_thread_count_from_the_environment(capsys, monkeypatch):
    monkeypatch.setenv("WWLAB_THREADS", "1")
    code, out, _ = run(capsys, "verify", "--theorem", "primc-h", "--k", "0..2", "--trunc", "6")
    assert code == 0
    assert out.splitlines()[-1] == "3 passed, 0 failed"


def test_verify_without_sizes_uses_the_environment_defaults(capsys, monkeypatch):
    monkeypatch.setenv("WWLAB_DEFAULT_TRUNC", "7")
    monkeypatch.setenv("WWLAB_DEFAULT_MAX_WEIGHT", "3")
    code, out, _ = run(capsys, "verify", "--theorem", "h-base")
    assert code == 0
    assert "trunc=7 max-weight=3" in out.splitlines()[0]


@pytest.mark.slow
def test_verify_without_sizes_uses_the_acceptance_size(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "euler")
    assert code == 0
    assert "trunc=30" in out.splitlines()[0]


def test_invalid_environment_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("WWLAB_THREADS", "0")
    code, out, err = run(capsys, "verify", "--list")
    assert code == 2
    assert out == ""
    assert "invalid configuration" in err


# ── bijection ────────────────────────────────────────────────

def test_bijection_forward(capsys):
    code, out, _ = run(capsys, "bijection", "forward", "--lambda", WORKED_LAMBDA, "--mu", WORKED_MU)
    assert code == 0
    assert out.strip() == WORKED_NU3


def test_bijection_forward_trace(capsys):
    _, out, _ = run(capsys, "bijection", "forward", "--lambda", WORKED_LAMBDA, "--mu", WORKED_MU, "--trace")
    assert out.splitlines() == [
        f"lambda: {WORKED_LAMBDA}",
        f"mu: {WORKED_MU}",
        f"mu': {WORKED_MU.replace('c', 'b')}",
        f"nu1: {WORKED_NU1}",
        f"nu2: {WORKED_NU2}",
        f"nu3: {WORKED_NU3}",
    ]


def test_bijection_of_the_empty_pair(capsys):
    code, out, _ = run(capsys, "bijection", "forward", "--lambda", "", "--mu", "")
    assert code == 0
    assert out == "\n"


def test_bijection_inverse(capsys):
    code, out, _ = run(capsys, "bijection", "inverse", "--nu", WORKED_NU3)
    assert code == 0
    assert out.splitlines() == [f"lambda: {WORKED_LAMBDA}", f"mu: {WORKED_MU}"]


def test_bijection_json(capsys):
    _, out, _ = run(capsys, "bijection", "forward", "--lambda", "1a", "--mu", "1c", "--json")
    data = json.loads(out)
    assert data == {"schema": 1, "direction": "forward", "pair": {"lambda": "1a", "mu": "1c"}, "nu": "1c+1a"}


def test_bijection_rejects_a_lambda_outside_c(capsys):
    code, out, err = run(capsys, "bijection", "forward", "--lambda", "1c+1a", "--mu", "")
    assert code == 2
    assert out == ""
    assert "wwlab: error:" in err


# ── dilate ───────────────────────────────────────────────────

def test_dilate(capsys):
    code, out, _ = run(capsys, "dilate", "--rule", "primc", "--partition", "1d+1c+1b+1a")
    assert code == 0
    assert out.strip() == "3d+2c+2b+1a"


def test_dilate_colour_without_a_rule(capsys):
    code, _, err = run(capsys, "dilate", "--rule", "capparelli", "--partition", "1b")
    assert code == 2
    assert "No dilation given" in err
