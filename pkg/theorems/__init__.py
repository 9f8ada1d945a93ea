"""
WWLab — Theorem Registry

A decorator-based catalogue of the identities wwlab can verify. Every
module in this package registers its checks with @theorem; the registry
auto-discovers them, runs them per k (or once), and wraps each verdict in
a VerificationReport.
"""

from __future__ import annotations

import importlib
import logging
import pkgutil
import time
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Iterable, Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field

from core import UnknownTheorem, WWLabError
from core.qseries import QSeries, first_mismatch

logger = logging.getLogger("wwlab.theorems")


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class Scope(str, Enum):
    PER_K = "per-k"
    ONCE = "once"


# ── Models ──────────────────────────────────────────────────

class TheoremParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int | None = None
    trunc: int = Field(ge=1)
    max_weight: int = Field(ge=0)
    substitutions: tuple[str, ...] = ()


class Acceptance(BaseModel):
    """Sizes a theorem runs at when the caller names none; unset fields fall back."""
    model_config = ConfigDict(frozen=True)

    trunc: int | None = Field(default=None, ge=1)
    max_weight: int | None = Field(default=None, ge=0)
    k_min: int | None = Field(default=None, ge=0)
    k_max: int | None = Field(default=None, ge=0)

    def over(self, defaults: "Acceptance") -> "Acceptance":
        unset = {name: getattr(defaults, name) for name, value in self if value is None}
        return self.model_copy(update=unset)


DEFAULT_SIZES = Acceptance(trunc=20, max_weight=14, k_min=1, k_max=8)


class Mismatch(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    q_power: int
    expected: str
    actual: str

    def __str__(self) -> str:
        return f"{self.label} differs at q^{self.q_power}: expected ({self.expected}), got ({self.actual})"


class VerificationReport(BaseModel):
    theorem: str
    params: TheoremParams
    verdict: Verdict
    mismatch: Mismatch | None = None
    details: dict[str, Any] = Field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def headline(self) -> str:
        p = self.params
        where = [f"k={p.k}"] if p.k is not None else []
        where += [f"trunc={p.trunc}", f"max-weight={p.max_weight}"]
        if p.substitutions:
            where.append("with " + ",".join(p.substitutions))
        return f"{self.verdict.value.upper():<4}  {self.theorem:<22}  {' '.join(where)}"


# ── Evidence Collection ─────────────────────────────────────

class Outcome:
    """
    What a theorem body hands back: the first mismatch seen (if any) and
    free-form details for the report. Later checks still run after a
    failure so their details are recorded, but only the first mismatch is kept.
    """

    def __init__(self):
        self.mismatch: Mismatch | None = None
        self.details: dict[str, Any] = {}

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def _fail(self, label: str, q_power: int, expected, actual) -> bool:
        if self.mismatch is None:
            self.mismatch = Mismatch(label=label, q_power=q_power, expected=str(expected), actual=str(actual))
        return False

    def expect_series(self, label: str, expected: QSeries, actual: QSeries) -> bool:
        found = first_mismatch(expected, actual)
        if found is None:
            return True
        n, left, right = found
        return self._fail(label, n, left, right)

    def expect_sequence(self, label: str, expected: Sequence, actual: Sequence) -> bool:
        """Coefficient lists indexed by weight."""
        for n, (x, y) in enumerate(zip(expected, actual)):
            if x != y:
                return self._fail(label, n, x, y)
        if len(expected) != len(actual):
            n = min(len(expected), len(actual))
            return self._fail(label, n, f"{len(expected)} terms", f"{len(actual)} terms")
        return True

    def expect_counts(self, label: str, expected: Mapping[tuple, int], actual: Mapping[tuple, int]) -> bool:
        """Count tables keyed by tuples whose first entry is the weight."""
        for key in sorted(set(expected) | set(actual)):
            x, y = expected.get(key, 0), actual.get(key, 0)
            if x != y:
                return self._fail(f"{label} {key}", key[0], x, y)
        return True

    def expect_true(self, label: str, condition: bool, q_power: int = 0, note: str = "") -> bool:
        if condition:
            return True
        return self._fail(label, q_power, "holds", note or "fails")

    def note(self, key: str, value: Any):
        self.details[key] = value


TheoremFunc = Callable[[TheoremParams], Outcome]

# ── Global Theorem Store ────────────────────────────────────

_THEOREMS: dict[str, dict[str, Any]] = {}


def theorem(
    id: str,
    description: str,
    scope: Scope = Scope.PER_K,
    substitutions: Iterable[str] = (),
    report_only: bool = False,
    acceptance: Acceptance = Acceptance(),
):
    """
    Register a verification under `id`.

    Usage:
        @theorem("main", "G^C_k/(cq;q)_k = G^P_k with b := c", substitutions=("b=c",),
                 acceptance=Acceptance(trunc=24))
        def main_identity(params: TheoremParams) -> Outcome:
            ...

    Per-k theorems run once for every k requested; ONCE theorems ignore k.
    Report-only theorems are listed and runnable by id but left out of `all`.
    `acceptance` holds the sizes used when the caller leaves trunc, max_weight
    or the k range unset.
    """
    def decorator(func: TheoremFunc) -> TheoremFunc:
        _THEOREMS[id] = {
            "function": func,
            "description": description,
            "scope": scope,
            "substitutions": tuple(substitutions),
            "report_only": report_only,
            "acceptance": acceptance,
        }
        logger.debug("Registered theorem: %s%s", id, " (report only)" if report_only else "")
        return func

    return decorator


def _register_import_failure(module: str, error: Exception):
    reason = f"{type(error).__name__}: {error}"

    def failed_import(params: TheoremParams) -> Outcome:
        out = Outcome()
        out.expect_true(f"import {module}", False, note=reason)
        return out

    theorem(f"import:{module.rpartition('.')[2]}", f"{module} did not import", scope=Scope.ONCE)(failed_import)


class TheoremRegistry:
    """Discovers, lists and runs registered theorems."""

    def __init__(self, package: str = __name__, path: Path | None = None):
        self._package = package
        self._path = path or Path(__file__).parent
        self._discovered = False

    def discover(self):
        """
        Import every module of the package so their @theorem decorators run.

        A module that fails to import registers `import:<module>` in its
        place, a theorem that always fails, so `all` cannot pass without it.
        """
        if self._discovered:
            return

        for _, module_name, _ in pkgutil.iter_modules([str(self._path)]):
            if module_name.startswith("_"):
                continue
            try:
                importlib.import_module(f"{self._package}.{module_name}")
                logger.info("  Loaded: %s.%s", self._package, module_name)
            except Exception as e:
                logger.error("  Failed: %s.%s: %s", self._package, module_name, e)
                _register_import_failure(f"{self._package}.{module_name}", e)

        self._discovered = True
        logger.info("Theorem discovery complete: %d theorems registered.", len(_THEOREMS))

    def list_theorems(self) -> dict[str, dict[str, Any]]:
        self.discover()
        return {
            id: {
                "description": info["description"],
                "scope": info["scope"].value,
                "report_only": info["report_only"],
                "acceptance": info["acceptance"].model_dump(exclude_none=True),
            }
            for id, info in _THEOREMS.items()
        }

    def default_ids(self) -> list[str]:
        """Everything `verify --theorem all` runs, in registration order."""
        self.discover()
        return [id for id, info in _THEOREMS.items() if not info["report_only"]]

    def _lookup(self, id: str) -> dict[str, Any]:
        self.discover()
        if id not in _THEOREMS:
            available = list(_THEOREMS.keys())
            raise UnknownTheorem(f"Unknown theorem: '{id}'. Available: {available}")
        return _THEOREMS[id]

    def sizes(self, id: str, defaults: Acceptance = DEFAULT_SIZES) -> Acceptance:
        """The theorem's acceptance sizes, `defaults` filling whatever it leaves unset."""
        return self._lookup(id)["acceptance"].over(defaults)

    def plan(
        self,
        id: str,
        k_values: Iterable[int] | None = None,
        trunc: int | None = None,
        max_weight: int | None = None,
        defaults: Acceptance = DEFAULT_SIZES,
    ) -> list[tuple[str, TheoremParams]]:
        """Jobs for one theorem; arguments left as None take its acceptance sizes."""
        info = self._lookup(id)
        sizes = self.sizes(id, defaults)
        trunc = sizes.trunc if trunc is None else trunc
        max_weight = sizes.max_weight if max_weight is None else max_weight
        if k_values is None:
            k_values = range(sizes.k_min, sizes.k_max + 1)
        subs = info["substitutions"]
        if info["scope"] is Scope.ONCE:
            return [(id, TheoremParams(trunc=trunc, max_weight=max_weight, substitutions=subs))]
        return [
            (id, TheoremParams(k=k, trunc=trunc, max_weight=max_weight, substitutions=subs))
            for k in k_values
        ]

    def execute(self, id: str, params: TheoremParams) -> VerificationReport:
        """Run one theorem at one parameter set."""
        func = self._lookup(id)["function"]
        started = time.perf_counter()
        try:
            outcome = func(params)
        except WWLabError as e:
            logger.error("Theorem '%s' raised at %s: %s", id, params, e)
            outcome = Outcome()
            outcome.expect_true("engine error", False, note=f"{type(e).__name__}: {e}")
        elapsed = time.perf_counter() - started

        report = VerificationReport(
            theorem=id,
            params=params,
            verdict=Verdict.PASS if outcome.passed else Verdict.FAIL,
            mismatch=outcome.mismatch,
            details=outcome.details,
            elapsed=round(elapsed, 3),
        )
        if report.passed:
            logger.info("%s passed (k=%s, trunc=%d) in %.2fs", id, params.k, params.trunc, elapsed)
        else:
            logger.warning("%s FAILED (k=%s, trunc=%d): %s", id, params.k, params.trunc, report.mismatch)
        return report

    def run_many(
        self,
        ids: Iterable[str],
        k_values: Sequence[int] | None = None,
        trunc: int | None = None,
        max_weight: int | None = None,
        threads: int = 1,
        defaults: Acceptance = DEFAULT_SIZES,
    ) -> list[VerificationReport]:
        """
        Every (theorem, k) job of `ids`, run on up to `threads` workers.
        Reports come back in plan order whatever order the jobs finish in.
        """
        jobs = [job for id in ids for job in self.plan(id, k_values, trunc, max_weight, defaults)]
        logger.debug("Running %d verification jobs on %d threads", len(jobs), threads)
        if threads <= 1 or len(jobs) <= 1:
            return [self.execute(id, params) for id, params in jobs]
        with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="wwlab-verify") as pool:
            return list(pool.map(lambda job: self.execute(*job), jobs))


# Module-level singleton
registry = TheoremRegistry()
