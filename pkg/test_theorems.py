"""Tests for the theorem registry and every registered verification."""

import re

import pytest
from pydantic import ValidationError

import main
import theorems
from core import UnknownTheorem, WWLabError
from core.qseries import CoeffPoly, QSeries
from theorems import (
    _THEOREMS,
    Acceptance,
    Outcome,
    Scope,
    TheoremParams,
    TheoremRegistry,
    Verdict,
    VerificationReport,
    registry,
)

PER_K = [
    "oracle-capparelli", "oracle-primc", "recurrence-capparelli", "recurrence-primc",
    "main", "cap-h", "primc-h", "h-closed", "primc-fini", "capa-fini",
    "cor-primc-fini", "cor-capa-fini",
]
ONCE = [
    "h-base", "u-closed", "stabilization", "capparelli-from-primc", "euler",
    "primc-dilated", "capa-dilated", "capa-aag", "tilde-relabel", "product-link",
    "remark", "comb",
]


def run(id, k=None, trunc=10, max_weight=6):
    return registry.execute(id, TheoremParams(k=k, trunc=trunc, max_weight=max_weight))


# ── Registry ─────────────────────────────────────────────────

def test_discovery_finds_every_theorem():
    listed = registry.list_theorems()
    for id in PER_K + ONCE + ["cor-capa-fini-printed"]:
        assert id in listed
    assert listed["main"]["scope"] == "per-k"
    assert listed["comb"]["scope"] == "once"


def test_report_only_theorems_stay_out_of_all():
    assert registry.list_theorems()["cor-capa-fini-printed"]["report_only"]
    ids = registry.default_ids()
    assert "cor-capa-fini-printed" not in ids
    assert set(PER_K + ONCE) <= set(ids)


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem) as info:
        run("no-such-identity")
    assert "main" in str(info.value)
    assert isinstance(info.value, KeyError)


def test_plan_expands_per_k_theorems():
    plan = registry.plan("main", [1, 2, 3], trunc=8, max_weight=4)
    assert [params.k for _, params in plan] == [1, 2, 3]
    assert plan[0][1].substitutions == ("b=c",)
    once = registry.plan("euler", [1, 2, 3], trunc=8, max_weight=4)
    assert len(once) == 1
    assert once[0][1].k is None


def test_unset_sizes_come_from_each_theorems_acceptance():
    plan = registry.plan("main")
    assert [params.k for _, params in plan] == list(range(1, 9))
    assert plan[0][1].trunc == 24
    assert [params.k for _, params in registry.plan("cap-h")] == list(range(0, 9))
    assert registry.plan("euler")[0][1].trunc == 30
    assert registry.plan("primc-dilated")[0][1].trunc == 21
    assert registry.plan("capa-dilated")[0][1].trunc == 31
    assert registry.plan("remark")[0][1].max_weight == 16
    assert registry.plan("comb")[0][1].max_weight == 14


def test_explicit_sizes_and_defaults():
    assert registry.plan("main", [2], trunc=8)[0][1].trunc == 8
    assert registry.plan("euler", max_weight=3)[0][1].trunc == 30
    fallback = Acceptance(trunc=12, max_weight=5, k_min=2, k_max=3)
    (_, params), = registry.plan("tilde-relabel", defaults=fallback)
    assert (params.trunc, params.max_weight) == (12, 5)
    plan = registry.plan("main", defaults=fallback)
    assert [params.k for _, params in plan] == [2, 3]
    assert plan[0][1].trunc == 24
    assert registry.list_theorems()["cap-h"]["acceptance"] == {"trunc": 24, "k_min": 0}


def test_params_are_validated():
    with pytest.raises(ValidationError):
        TheoremParams(trunc=0, max_weight=4)
    with pytest.raises(ValidationError):
        TheoremParams(trunc=4, max_weight=-1)


def test_run_many_keeps_plan_order():
    reports = registry.run_many(["main", "euler", "primc-h"], [1, 2], trunc=8, max_weight=4, threads=4)
    assert [(r.theorem, r.params.k) for r in reports] == [
        ("main", 1), ("main", 2), ("euler", None), ("primc-h", 1), ("primc-h", 2),
    ]
    assert all(r.passed for r in reports)


def test_engine_errors_become_failures(monkeypatch):
    def broken(params):
        raise WWLabError("bad coefficient")

    registry.discover()
    monkeypatch.setitem(_THEOREMS, "broken", {
        "function": broken, "description": "always raises", "scope": Scope.ONCE,
        "substitutions": (), "report_only": True, "acceptance": Acceptance(),
    })
    report = run("broken")
    assert report.verdict is Verdict.FAIL
    assert report.mismatch.label == "engine error"
    assert "bad coefficient" in report.mismatch.actual


# ── Discovery Failures ───────────────────────────────────────

HOLDING_CHECKS = '''
from theorems import Outcome, Scope, theorem


@theorem("always-holds", "nothing to check", scope=Scope.ONCE)
def always_holds(params):
    return Outcome()
'''

BROKEN_CHECKS = "from core.qseries import no_such_name\n"


@pytest.fixture
def broken_registry(tmp_path, monkeypatch):
    """A theorem package with one good module and one that cannot import."""
    package = "extra_" + re.sub(r"\W", "_", tmp_path.name)
    root = tmp_path / package
    root.mkdir()
    (root / "__init__.py").write_text("")
    (root / "holding_checks.py").write_text(HOLDING_CHECKS)
    (root / "broken_checks.py").write_text(BROKEN_CHECKS)
    monkeypatch.syspath_prepend(str(tmp_path))
    monkeypatch.setattr(theorems, "_THEOREMS", {})
    return TheoremRegistry(package=package, path=root)


def test_a_module_that_fails_to_import_fails_the_run(broken_registry):
    ids = broken_registry.default_ids()
    assert set(ids) == {"always-holds", "import:broken_checks"}
    reports = broken_registry.run_many(ids, [1], trunc=6, max_weight=4)
    verdicts = {r.theorem: r.verdict for r in reports}
    assert verdicts == {"always-holds": Verdict.PASS, "import:broken_checks": Verdict.FAIL}
    failed = next(r for r in reports if not r.passed)
    assert failed.mismatch.label.endswith("broken_checks")
    assert "ImportError" in failed.mismatch.actual


def test_verify_all_exits_nonzero_on_an_import_failure(broken_registry, monkeypatch, capsys):
    monkeypatch.setattr(main, "registry", broken_registry)
    assert main.main(["verify", "--theorem", "all", "--k", "1", "--trunc", "6"]) == 1
    out = capsys.readouterr().out
    assert "FAIL  import:broken_checks" in out
    assert "PASS  always-holds" in out


# ── Outcome and Reports ──────────────────────────────────────

def test_outcome_keeps_the_first_mismatch():
    out = Outcome()
    a = CoeffPoly.symbol("a")
    assert out.expect_series("same", QSeries.one(3), QSeries.one(3))
    assert not out.expect_series("first", QSeries.one(3), QSeries.from_poly(3, {0: 1, 2: a}))
    assert not out.expect_sequence("second", [1, 2], [1, 3])
    assert out.mismatch.label == "first"
    assert out.mismatch.q_power == 2
    assert not out.passed


def test_sequence_length_mismatch():
    out = Outcome()
    out.expect_sequence("counts", [1, 1, 2], [1, 1])
    assert out.mismatch.q_power == 2


def test_counts_report_the_weight():
    out = Outcome()
    out.expect_counts("profile", {(3, 1): 2, (4, 1): 1}, {(3, 1): 2, (4, 1): 2})
    assert out.mismatch.q_power == 4
    assert out.mismatch.label == "profile (4, 1)"


def test_headline():
    report = VerificationReport(
        theorem="main",
        params=TheoremParams(k=3, trunc=24, max_weight=14, substitutions=("b=c",)),
        verdict=Verdict.PASS,
    )
    assert report.headline().split() == ["PASS", "main", "k=3", "trunc=24", "max-weight=14", "with", "b=c"]


# ── Verifications ────────────────────────────────────────────

@pytest.mark.parametrize("id", PER_K)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_per_k_theorems_pass(id, k):
    report = run(id, k=k)
    assert report.passed, report.mismatch


@pytest.mark.parametrize("id", ONCE)
def test_once_theorems_pass(id):
    report = run(id)
    assert report.passed, report.mismatch


def test_displayed_index_range_is_reported_not_passed():
    report = run("cor-capa-fini-printed", k=1)
    assert report.verdict is Verdict.FAIL
    assert report.details["G^P_k(b=1) printed"].startswith("first differs")


def test_comb_details():
    report = run("comb", max_weight=4)
    # P family sizes for n = 0..4
    assert report.details["pairs by weight"] == "1,4,9,20,42"


@pytest.mark.slow
@pytest.mark.parametrize("id", PER_K + ONCE)
def test_theorem_at_its_acceptance_size(id):
    reports = registry.run_many([id], threads=4)
    assert reports
    for report in reports:
        assert report.passed, report.mismatch
