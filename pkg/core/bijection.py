"""
WWLab — Capparelli/Primc Bijection

Pairs (λ, μ), λ in the Capparelli family C and μ any partition coloured c,
correspond one-to-one with partitions ν in the Primc family P:

  step 0   recolour μ from c to b                               → μ'
  step 1   merge μ' into λ, ties at equal value as d > c > b > a → ν₁
  step 2   b-parts sharing their value with an a- or d-part → c  → ν₂
  step 3   a run m_c, m_b, ..., m_b becomes all c               → ν₃ ∈ P

Every stage is validated on the way; a failed check is a bug in the step,
not bad input, and raises StagePostconditionError.
"""

from __future__ import annotations

import logging
from collections import Counter
from enum import Enum
from typing import Iterator

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from core import MembershipError, StagePostconditionError
from core.families import capparelli_spec, m1_spec, m2_spec, primc_spec, unrestricted_c_spec
from core.partitions import (
    Colour,
    ColouredPart,
    ColouredPartition,
    EnumSpec,
    Violation,
    enumerate_partitions,
    format_partition,
    require_member,
    violations,
)

logger = logging.getLogger("wwlab.bijection")

A, B, C, D = Colour.A, Colour.B, Colour.C, Colour.D


class Stage(str, Enum):
    M1C = "M1C"
    M2C = "M2C"
    P = "P"
    C_FAMILY = "C-family"


_STAGE_SPECS = {
    Stage.M1C: m1_spec,
    Stage.M2C: m2_spec,
    Stage.P: primc_spec,
    Stage.C_FAMILY: capparelli_spec,
}


def stage_spec(stage: Stage) -> EnumSpec:
    return _STAGE_SPECS[stage]()


class Direction(str, Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


# ── Models ──────────────────────────────────────────────────

class _PartitionModel(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class PartitionPair(_PartitionModel):
    lam: ColouredPartition = Field(serialization_alias="lambda")
    mu: ColouredPartition

    @field_serializer("lam", "mu")
    def serialize_partition(self, p: ColouredPartition) -> str:
        return format_partition(p)

    @property
    def weight(self) -> int:
        return self.lam.weight + self.mu.weight

    def profile(self) -> tuple[int, int, int, int, int]:
        """(weight, largest part, #a, #c, #d) over both partitions."""
        a, _, c, d = self.lam.slot_counts
        largest = max(self.lam.largest, self.mu.largest)
        return self.weight, largest, a, c + len(self.mu), d


class BijectionTrace(_PartitionModel):
    direction: Direction
    pair: PartitionPair
    mu_prime: ColouredPartition
    nu1: ColouredPartition
    nu2: ColouredPartition
    nu3: ColouredPartition

    @field_serializer("mu_prime", "nu1", "nu2", "nu3")
    def serialize_partition(self, p: ColouredPartition) -> str:
        return format_partition(p)

    @property
    def nu(self) -> ColouredPartition:
        return self.nu3


def nu_profile(nu: ColouredPartition) -> tuple[int, int, int, int, int]:
    """(weight, largest part, #a, #b + #c, #d)."""
    a, b, c, d = nu.slot_counts
    return nu.weight, nu.largest, a, b + c, d


# ── Validation ──────────────────────────────────────────────

def check_conditions(nu: ColouredPartition, stage: Stage) -> list[Violation]:
    """Every gap and named condition of the stage that nu breaks."""
    return violations(nu, stage_spec(stage))


def validate(nu: ColouredPartition, stage: Stage) -> tuple[bool, list[Violation]]:
    found = check_conditions(nu, stage)
    return not found, found


def _ensure(nu: ColouredPartition, stage: Stage, step: str):
    found = check_conditions(nu, stage)
    if found:
        report = "; ".join(str(v) for v in found)
        logger.error("%s produced '%s' outside %s: %s", step, nu, stage.value, report)
        raise StagePostconditionError(f"{step} produced '{nu}' outside {stage.value}: {report}", found)


def _recolour(nu: ColouredPartition, when) -> ColouredPartition:
    return ColouredPartition(tuple(
        ColouredPart(x.value, new) if (new := when(x)) is not None else x
        for x in nu.parts
    ))


def _anchored(nu: ColouredPartition) -> set[int]:
    return nu.values_with(A) | nu.values_with(D)


# ── Forward Steps ───────────────────────────────────────────

def step0_recolour(mu: ColouredPartition) -> ColouredPartition:
    """Every part of μ changes colour c → b."""
    for x in mu.parts:
        if x.colour is not C:
            raise MembershipError(f"μ must be coloured c, found part {x}")
    return ColouredPartition(tuple(ColouredPart(x.value, B) for x in mu.parts))


def step1_insert(lam: ColouredPartition, mu_prime: ColouredPartition) -> ColouredPartition:
    """Merge μ' into λ in Primc's order; equal values sit as d > c > b > a."""
    for x in mu_prime.parts:
        if x.colour is not B:
            raise MembershipError(f"μ' must be coloured b, found part {x}")
    nu1 = ColouredPartition.sorted_from((*lam.parts, *mu_prime.parts))
    _ensure(nu1, Stage.M1C, "step 1")
    return nu1


def step2_recolour_after_ad(nu1: ColouredPartition) -> ColouredPartition:
    """m_b → m_c wherever m_a or m_d is a part."""
    anchored = _anchored(nu1)
    nu2 = _recolour(nu1, lambda x: C if x.colour is B and x.value in anchored else None)
    _ensure(nu2, Stage.M2C, "step 2")
    return nu2


def step3_absorb_after_c(nu2: ColouredPartition) -> ColouredPartition:
    """m_c followed by m_b, ..., m_b becomes m_c, m_c, ..., m_c."""
    led_by_c = nu2.values_with(C)
    nu3 = _recolour(nu2, lambda x: C if x.colour is B and x.value in led_by_c else None)
    _ensure(nu3, Stage.P, "step 3")
    return nu3


def forward(pair: PartitionPair) -> BijectionTrace:
    require_member(pair.lam, capparelli_spec(), "λ")
    mu_prime = step0_recolour(pair.mu)
    nu1 = step1_insert(pair.lam, mu_prime)
    nu2 = step2_recolour_after_ad(nu1)
    nu3 = step3_absorb_after_c(nu2)
    return BijectionTrace(
        direction=Direction.FORWARD, pair=pair, mu_prime=mu_prime, nu1=nu1, nu2=nu2, nu3=nu3,
    )


# ── Inverse Steps ───────────────────────────────────────────

def undo_step3(nu3: ColouredPartition) -> ColouredPartition:
    """A repeated m_c with no m_a or m_d keeps its first copy as c, the rest turn b."""
    anchored = _anchored(nu3)
    repeated = {m for m, n in Counter(x.value for x in nu3.parts if x.colour is C).items()
                if n > 1 and m not in anchored}
    seen: set[int] = set()
    parts = []
    for x in nu3.parts:
        if x.colour is C and x.value in repeated:
            if x.value in seen:
                x = ColouredPart(x.value, B)
            seen.add(x.value)
        parts.append(x)
    nu2 = ColouredPartition(tuple(parts))
    _ensure(nu2, Stage.M2C, "inverse of step 3")
    return nu2


def undo_step2(nu2: ColouredPartition) -> ColouredPartition:
    """Every m_c turns b wherever m_a or m_d is a part."""
    anchored = _anchored(nu2)
    nu1 = _recolour(nu2, lambda x: B if x.colour is C and x.value in anchored else None)
    _ensure(nu1, Stage.M1C, "inverse of step 2")
    return nu1


def undo_step1(nu1: ColouredPartition) -> tuple[ColouredPartition, ColouredPartition]:
    """Split ν₁ into (λ, μ'): the b-parts form μ'."""
    lam = ColouredPartition(tuple(x for x in nu1.parts if x.colour is not B))
    mu_prime = ColouredPartition(tuple(x for x in nu1.parts if x.colour is B))
    _ensure(lam, Stage.C_FAMILY, "inverse of step 1")
    return lam, mu_prime


def undo_step0(mu_prime: ColouredPartition) -> ColouredPartition:
    return ColouredPartition(tuple(ColouredPart(x.value, C) for x in mu_prime.parts))


def inverse(nu: ColouredPartition) -> BijectionTrace:
    require_member(nu, primc_spec(), "ν")
    nu2 = undo_step3(nu)
    nu1 = undo_step2(nu2)
    lam, mu_prime = undo_step1(nu1)
    pair = PartitionPair(lam=lam, mu=undo_step0(mu_prime))
    return BijectionTrace(
        direction=Direction.INVERSE, pair=pair, mu_prime=mu_prime, nu1=nu1, nu2=nu2, nu3=nu,
    )


# ── Sweeps ──────────────────────────────────────────────────

def all_pairs(max_weight: int) -> Iterator[PartitionPair]:
    """Every (λ, μ) of total weight <= max_weight, λ by weight first."""
    lams = enumerate_partitions(capparelli_spec(), max_weight)
    mus = enumerate_partitions(unrestricted_c_spec(), max_weight)
    for lam in lams:
        for mu in mus:
            if lam.weight + mu.weight > max_weight:
                break
            yield PartitionPair(lam=lam, mu=mu)
