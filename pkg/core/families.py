"""
WWLab — Partition Families

The concrete gap matrices, dilation rules and non-adjacent condition sets
of the Capparelli and Primc weighted-words identities, plus EnumSpec
factories for each family.
"""

from __future__ import annotations

import logging
from typing import Callable

from core.partitions import (
    Affine,
    Colour,
    ColouredPart,
    ColouredPartition,
    ConditionSet,
    EnumSpec,
    GapMatrix,
    Violation,
    dilate_spec,
)

logger = logging.getLogger("wwlab.families")

A, B, C, D = Colour.A, Colour.B, Colour.C, Colour.D
AT, BT, CT = Colour.AT, Colour.BT, Colour.CT


# ── Gap Matrices ─────────────────────────────────────────────

CAPPARELLI_TILDE = GapMatrix.from_rows("at bt ct", [
    (2, 0, 2),
    (2, 2, 3),
    (1, 0, 1),
])

CAPPARELLI = GapMatrix.from_rows("a c d", [
    (2, 2, 2),
    (1, 1, 2),
    (0, 1, 2),
])

PRIMC = GapMatrix.from_rows("a b c d", [
    (2, 1, 2, 2),
    (1, 0, 1, 1),
    (0, 1, 0, 2),
    (0, 1, 0, 2),
])

PRIMC_DIL2 = GapMatrix.from_rows("a b c d", [
    (4, 1, 3, 2),
    (3, 0, 2, 1),
    (1, 2, 0, 3),
    (2, 3, 1, 4),
])

# ν₁ of the bijection: Primc's order with Capparelli's gaps, b-parts free to repeat
BIJECTION_M1 = GapMatrix.from_rows("a b c d", [
    (2, 1, 2, 2),
    (0, 0, 1, 1),
    (1, 0, 1, 2),
    (0, 0, 1, 2),
])

# ν₂: b-parts sharing a value with an a- or d-part recoloured c
BIJECTION_M2 = GapMatrix.from_rows("a b c d", [
    (2, 1, 2, 2),
    (1, 0, 1, 1),
    (0, 0, 0, 2),
    (0, 1, 0, 2),
])

UNRESTRICTED_C = GapMatrix.from_rows("c", [(0,)])


# ── Dilations ───────────────────────────────────────────────

PRIMC_DILATION = {A: Affine(2, -1), B: Affine(2, 0), C: Affine(2, 0), D: Affine(2, 1)}
CAPPARELLI_DILATION = {A: Affine(3, -1), C: Affine(3, 0), D: Affine(3, 1)}
CAPPARELLI_TILDE_DILATION = {AT: Affine(3, -2), BT: Affine(3, -4), CT: Affine(3, 0)}

DILATIONS = {
    "primc": PRIMC_DILATION,
    "capparelli": CAPPARELLI_DILATION,
    "capparelli-tilde": CAPPARELLI_TILDE_DILATION,
}


# ── Non-adjacent Conditions ─────────────────────────────────

def _pairs(p: ColouredPartition, first: Colour, second: Colour, drop: int, name: str) -> list[Violation]:
    """m_first together with (m - drop)_second."""
    firsts = p.values_with(first)
    seconds = p.values_with(second)
    return [
        Violation(name, (ColouredPart(m, first), ColouredPart(m - drop, second)))
        for m in sorted(firsts, reverse=True)
        if m - drop in seconds
    ]


def _m1_violations(p: ColouredPartition) -> list[Violation]:
    return (
        _pairs(p, A, A, 1, "C1")
        + _pairs(p, C, A, 0, "C2")
        + _pairs(p, C, D, 1, "C3")
        + _pairs(p, D, D, 1, "C4")
    )


def _m2_violations(p: ColouredPartition) -> list[Violation]:
    found = _pairs(p, D, B, 0, "C'1")
    anchored = p.values_with(A) | p.values_with(D)
    for m in sorted(p.values_with(C), reverse=True):
        reps = p.multiplicity(m, C)
        if reps > 1 and m not in anchored:
            found.append(Violation("C'2", (ColouredPart(m, C),) * reps))
    found.extend(_pairs(p, C, D, 1, "C'3"))
    return found


_CHECKS: dict[ConditionSet, Callable[[ColouredPartition], list[Violation]]] = {
    ConditionSet.M1: _m1_violations,
    ConditionSet.M2: _m2_violations,
}


def condition_violations(p: ColouredPartition, conditions: ConditionSet) -> list[Violation]:
    return _CHECKS[conditions](p)


# ── Family Factories ────────────────────────────────────────

def capparelli_spec(max_part: int | None = None) -> EnumSpec:
    return EnumSpec("C", CAPPARELLI, max_part=max_part)


def capparelli_tilde_spec(max_part: int | None = None) -> EnumSpec:
    return EnumSpec("CT", CAPPARELLI_TILDE, min_part={AT: 2, BT: 2}, max_part=max_part)


def primc_spec(max_part: int | None = None) -> EnumSpec:
    return EnumSpec("P", PRIMC, max_part=max_part)


def primc_dil2_spec() -> EnumSpec:
    return EnumSpec(
        "PDIL2",
        PRIMC_DIL2,
        min_part={A: 1, B: 2, C: 2, D: 3},
        value_classes={A: (2, 1), B: (2, 0), C: (2, 0), D: (2, 1)},
    )


def capparelli_dil3_spec() -> EnumSpec:
    return dilate_spec(capparelli_spec(), CAPPARELLI_DILATION, name="CDIL3")


def m1_spec(max_part: int | None = None) -> EnumSpec:
    return EnumSpec("M1", BIJECTION_M1, max_part=max_part, extra=ConditionSet.M1)


def m2_spec(max_part: int | None = None) -> EnumSpec:
    return EnumSpec("M2", BIJECTION_M2, max_part=max_part, extra=ConditionSet.M2)


def unrestricted_c_spec(max_part: int | None = None) -> EnumSpec:
    return EnumSpec("MU", UNRESTRICTED_C, max_part=max_part)


FAMILIES: dict[str, Callable[..., EnumSpec]] = {
    "C": capparelli_spec,
    "CT": capparelli_tilde_spec,
    "P": primc_spec,
    "PDIL2": lambda max_part=None: primc_dil2_spec().with_max_part(max_part),
    "CDIL3": lambda max_part=None: capparelli_dil3_spec().with_max_part(max_part),
    "M1": m1_spec,
    "M2": m2_spec,
    "MU": unrestricted_c_spec,
}
