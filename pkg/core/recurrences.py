"""
WWLab — Recurrence Solvers

Generating functions by largest part, computed from their recurrences:

  G^C_{k_x}, E^C_{k_x}   matrix C, colours a < c < d at equal value
  G^P_{k_x}, E^P_{k_x}   matrix P, colours a < b < c < d at equal value
  H_k                    the auxiliary sequence both families reduce to

G counts partitions with largest part at most k_x, E those whose largest
part is exactly k_x. Every division performed here is by a unit
(1 − x·q^e with e >= 1); factors like (1 − b) are cancelled by hand.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from core.partitions import Colour
from core.qseries import CoeffPoly, ColourMonomial, QSeries, first_mismatch

logger = logging.getLogger("wwlab.recurrences")

A, B, C, D = Colour.A, Colour.B, Colour.C, Colour.D

MONO_A = ColourMonomial.symbol("a")
MONO_B = ColourMonomial.symbol("b")
MONO_C = ColourMonomial.symbol("c")
MONO_D = ColourMonomial.symbol("d")
MONO_AD = MONO_A.times(MONO_D)
MONO_BC = MONO_B.times(MONO_C)

POLY_B = CoeffPoly.monomial(MONO_B)
POLY_C = CoeffPoly.monomial(MONO_C)
POLY_BC = CoeffPoly.monomial(MONO_BC)


class TableFamily(str, Enum):
    CAP_G = "CAP-G"
    CAP_E = "CAP-E"
    PRIMC_G = "PRIMC-G"
    PRIMC_E = "PRIMC-E"
    H = "H"


Index = tuple[int, Colour | None]


@dataclass
class GFTable:
    """Series keyed by coloured index (k, colour); colour is None for H."""

    family: TableFamily
    trunc: int
    entries: dict[Index, QSeries] = field(default_factory=dict)

    def get(self, k: int, colour: Colour | None = None) -> QSeries:
        try:
            return self.entries[(k, colour)]
        except KeyError:
            label = f"{k}_{colour.value}" if colour else str(k)
            raise KeyError(f"{self.family.value} has no entry {label}") from None

    def put(self, k: int, colour: Colour | None, series: QSeries):
        self.entries[(k, colour)] = series

    def __getitem__(self, key: int | Index) -> QSeries:
        if isinstance(key, int):
            return self.get(key)
        return self.get(*key)

    def __contains__(self, key: Index) -> bool:
        return key in self.entries

    @property
    def k_max(self) -> int:
        return max(k for k, _ in self.entries)

    def sequence(self, colour: Colour | None = None, start: int = 0) -> list[QSeries]:
        """Entries start..k_max of one colour, as a list."""
        return [self.get(k, colour) for k in range(start, self.k_max + 1)]


class GFSystem(NamedTuple):
    g: GFTable
    e: GFTable


class EquationFailure(NamedTuple):
    equation: str
    k: int
    q_power: int

    def __str__(self) -> str:
        return f"{self.equation} fails at k={self.k}, first at q^{self.q_power}"


def _check_args(k_max: int, trunc: int):
    if trunc < 1:
        raise ValueError(f"trunc must be >= 1, got {trunc}")
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")


def _constant(trunc: int, poly: CoeffPoly | int) -> QSeries:
    return QSeries.from_poly(trunc, {0: poly})


def _outer_terms(s: QSeries, k: int) -> QSeries:
    """(a q^k + d q^k + ad q^2k) · s"""
    return s.shift(k, MONO_A) + s.shift(k, MONO_D) + s.shift(2 * k, MONO_AD)


# ── Capparelli ──────────────────────────────────────────────

def capparelli_system(k_max: int, trunc: int) -> GFSystem:
    """
    E^C and G^C for every index up to k_max.

      E_{k_d} = d q^k (E_{k_a} + G_{(k-1)_c})
      E_{k_c} = c q^k G_{(k-1)_c}
      E_{k_a} = a q^k G_{(k-2)_d}

    with E_{0_x} = 0, G_{0_x} = 1, G_{-1_d} = 1.
    """
    _check_args(k_max, trunc)
    one, zero = QSeries.one(trunc), QSeries.zero(trunc)
    g = GFTable(TableFamily.CAP_G, trunc)
    e = GFTable(TableFamily.CAP_E, trunc)
    g.put(-1, D, one)
    for x in (A, C, D):
        g.put(0, x, one)
        e.put(0, x, zero)

    for k in range(1, k_max + 1):
        e_a = g.get(k - 2, D).shift(k, MONO_A)
        e_c = g.get(k - 1, C).shift(k, MONO_C)
        e_d = (e_a + g.get(k - 1, C)).shift(k, MONO_D)
        g_a = g.get(k - 1, D) + e_a
        g_c = g_a + e_c
        for x, ex, gx in ((A, e_a, g_a), (C, e_c, g_c), (D, e_d, g_c + e_d)):
            e.put(k, x, ex)
            g.put(k, x, gx)
    logger.debug("Capparelli system built to k=%d at O(q^%d)", k_max, trunc)
    return GFSystem(g, e)


def capparelli_recurrence(k_max: int, trunc: int) -> list[QSeries]:
    """
    [G^C_0, ..., G^C_{k_max}] (largest part at most k_d) from

      G_k = (1 + c q^k) G_{k-1} + (a q^k + d q^k + ad q^2k) G_{k-2}
            + ad q^(2k-1) (1 - c q^(k-1)) G_{k-3}

    with G_0 = 1, G_{-1} = 1, G_{-2} = 0.
    """
    _check_args(k_max, trunc)
    values = {-2: QSeries.zero(trunc), -1: QSeries.one(trunc), 0: QSeries.one(trunc)}
    for k in range(1, k_max + 1):
        values[k] = (
            values[k - 1].mul_binomial(POLY_C, k, sign=+1)
            + _outer_terms(values[k - 2], k)
            + values[k - 3].mul_binomial(POLY_C, k - 1).shift(2 * k - 1, MONO_AD)
        )
    return [values[k] for k in range(k_max + 1)]


# ── Primc ───────────────────────────────────────────────────

def primc_system(k_max: int, trunc: int) -> GFSystem:
    """
    E^P and G^P for every index up to k_max.

    The two self-referential equations are solved for their left side:
      E_{k_b} = b q^k G_{(k-1)_d} / (1 - b q^k)
      E_{k_c} = c q^k (E_{k_a} + G_{(k-1)_c}) / (1 - c q^k)
    and then
      E_{k_d} = d q^k (E_{k_c} + E_{k_a} + G_{(k-1)_c})
      E_{k_a} = a q^k (E_{(k-1)_b} + G_{(k-2)_d})

    Initial values E_{0_a,c,d} = 0, E_{0_b} = b, G_{0_b,c,d} = 1 and
    G_{0_a} = G_{-1_d} = 1 - b.
    """
    _check_args(k_max, trunc)
    one, zero = QSeries.one(trunc), QSeries.zero(trunc)
    one_minus_b = _constant(trunc, 1 - POLY_B)
    g = GFTable(TableFamily.PRIMC_G, trunc)
    e = GFTable(TableFamily.PRIMC_E, trunc)
    g.put(-1, D, one_minus_b)
    g.put(0, A, one_minus_b)
    for x in (B, C, D):
        g.put(0, x, one)
    for x in (A, C, D):
        e.put(0, x, zero)
    e.put(0, B, _constant(trunc, POLY_B))

    for k in range(1, k_max + 1):
        below_c = g.get(k - 1, C)
        e_a = (e.get(k - 1, B) + g.get(k - 2, D)).shift(k, MONO_A)
        e_b = g.get(k - 1, D).shift(k, MONO_B).div_binomial(POLY_B, k)
        e_c = (e_a + below_c).shift(k, MONO_C).div_binomial(POLY_C, k)
        e_d = (e_c + e_a + below_c).shift(k, MONO_D)
        g_a = g.get(k - 1, D) + e_a
        g_b = g_a + e_b
        g_c = g_b + e_c
        for x, ex, gx in ((A, e_a, g_a), (B, e_b, g_b), (C, e_c, g_c), (D, e_d, g_c + e_d)):
            e.put(k, x, ex)
            g.put(k, x, gx)
    logger.debug("Primc system built to k=%d at O(q^%d)", k_max, trunc)
    return GFSystem(g, e)


def primc_g1(trunc: int) -> QSeries:
    """G^P_1 = bq/(1 - bq) + (1 + aq)(1 + dq)/(1 - cq)."""
    b_part = QSeries.monomial(trunc, MONO_B, 1).div_binomial(POLY_B, 1)
    ad_part = (
        QSeries.one(trunc)
        .mul_binomial(CoeffPoly.monomial(MONO_A), 1, sign=+1)
        .mul_binomial(CoeffPoly.monomial(MONO_D), 1, sign=+1)
        .div_binomial(POLY_C, 1)
    )
    return b_part + ad_part


def primc_recurrence(k_max: int, trunc: int) -> list[QSeries]:
    """
    [G^P_0, ..., G^P_{k_max}] from the closed three-term recurrence

      (1 - c q^k) G_k = (1 - bc q^2k)/(1 - b q^k) G_{k-1}
                        + (a q^k + d q^k + ad q^2k)/(1 - b q^(k-1)) G_{k-2}
                        + ad q^(2k-1)/(1 - b q^(k-2)) G_{k-3}

    for k >= 2. At k = 2 the last term is ad q^3 G_{-1}/(1 - b) with
    G_{-1} = 1 - b, taken as ad q^3 without dividing.
    """
    _check_args(k_max, trunc)
    values = {0: QSeries.one(trunc), 1: primc_g1(trunc)}
    for k in range(2, k_max + 1):
        first = values[k - 1].mul_binomial(POLY_BC, 2 * k).div_binomial(POLY_B, k)
        second = _outer_terms(values[k - 2], k).div_binomial(POLY_B, k - 1)
        if k == 2:
            third = QSeries.monomial(trunc, MONO_AD, 3)
        else:
            third = values[k - 3].shift(2 * k - 1, MONO_AD).div_binomial(POLY_B, k - 2)
        values[k] = (first + second + third).div_binomial(POLY_C, k)
    return [values[k] for k in range(k_max + 1)]


# ── H sequence ──────────────────────────────────────────────

def h_one(trunc: int) -> QSeries:
    """H_1 = (1 - bc q²)/((1 - cq)(1 - bq)(1 - bq²)) + (aq + dq + ad q²)/((1 - cq)(1 - bq²))."""
    one = QSeries.one(trunc)
    first = (
        one.mul_binomial(POLY_BC, 2)
        .div_binomial(POLY_C, 1)
        .div_binomial(POLY_B, 1)
        .div_binomial(POLY_B, 2)
    )
    second = _outer_terms(one, 1).div_binomial(POLY_C, 1).div_binomial(POLY_B, 2)
    return first + second


def h_sequence(k_max: int, trunc: int) -> GFTable:
    """
    H_{-1} .. H_{k_max}. The three given values H_{-1} = 1, H_0 = 1/(1 - bq)
    and H_1 seed the recurrence

      (1 - c q^k)(1 - b q^(k+1)) H_k = (1 - bc q^2k) H_{k-1}
          + (a q^k + d q^k + ad q^2k) H_{k-2} + ad q^(2k-1) H_{k-3}

    which builds every H_k with k >= 2.
    """
    _check_args(k_max, trunc)
    table = GFTable(TableFamily.H, trunc)
    table.put(-1, None, QSeries.one(trunc))
    table.put(0, None, QSeries.one(trunc).div_binomial(POLY_B, 1))
    if k_max >= 1:
        table.put(1, None, h_one(trunc))
    for k in range(2, k_max + 1):
        rhs = (
            table[k - 1].mul_binomial(POLY_BC, 2 * k)
            + _outer_terms(table[k - 2], k)
            + table[k - 3].shift(2 * k - 1, MONO_AD)
        )
        table.put(k, None, rhs.div_binomial(POLY_C, k).div_binomial(POLY_B, k + 1))
    logger.debug("H sequence built to k=%d at O(q^%d)", k_max, trunc)
    return table


_INV_AD = ColourMonomial(-1, 0, 0, -1)


def h_minus_three(trunc: int) -> QSeries:
    """H_{-3} = (b - 1) c q / (ad)."""
    poly = (POLY_B - 1) * CoeffPoly.monomial(MONO_C.times(_INV_AD))
    return QSeries.from_poly(trunc, {1: poly})


def h_minus_four(trunc: int) -> QSeries:
    """H_{-4} = q³ (1 - b)(ac + ad + cd) / (a²d²)."""
    pairs = CoeffPoly({
        MONO_A.times(MONO_C): 1,
        MONO_AD: 1,
        MONO_C.times(MONO_D): 1,
    })
    poly = (1 - POLY_B) * pairs * CoeffPoly.monomial(_INV_AD.power(2))
    return QSeries.from_poly(trunc, {3: poly})


def check_h_base_cases(trunc: int) -> bool:
    """
    The H recurrence at k = 0 and k = 1, by cross-multiplication, with
    H_{-2} = 0 and H_{-3} = (b - 1) c q/(ad). At k = 0 the H_{-3} term
    carries q^-1, so H_{-3} is built one order higher and shifted down.
    """
    if trunc < 2:
        raise ValueError(f"trunc must be >= 2, got {trunc}")
    table = h_sequence(1, trunc)
    h_m1, h_0, h_1 = table[-1], table[0], table[1]

    lhs_0 = h_0.mul_binomial(POLY_C, 0).mul_binomial(POLY_B, 1)
    rhs_0 = h_m1.mul_binomial(POLY_BC, 0) + h_minus_three(trunc + 1).shift(-1, MONO_AD)

    lhs_1 = h_1.mul_binomial(POLY_C, 1).mul_binomial(POLY_B, 2)
    rhs_1 = h_0.mul_binomial(POLY_BC, 2) + _outer_terms(h_m1, 1)

    ok = True
    for k, lhs, rhs in ((0, lhs_0, rhs_0), (1, lhs_1, rhs_1)):
        if lhs != rhs:
            logger.warning("H recurrence fails at k=%d below O(q^%d)", k, trunc)
            ok = False
    return ok


# ── Equation Re-evaluation ──────────────────────────────────

def _compare(failures: list[EquationFailure], label: str, k: int, lhs: QSeries, rhs: QSeries):
    if lhs != rhs:
        n, _, _ = first_mismatch(lhs, rhs)
        failures.append(EquationFailure(label, k, n))


def check_capparelli_equations(system: GFSystem) -> list[EquationFailure]:
    """Re-evaluate every stored Capparelli entry against its defining equation."""
    g, e = system
    failures: list[EquationFailure] = []
    for k in range(1, g.k_max + 1):
        _compare(failures, "E(k_d)", k, e.get(k, D), g.get(k, D) - g.get(k, C))
        _compare(failures, "E(k_d)", k, e.get(k, D), (e.get(k, A) + g.get(k - 1, C)).shift(k, MONO_D))
        _compare(failures, "E(k_c)", k, e.get(k, C), g.get(k, C) - g.get(k, A))
        _compare(failures, "E(k_c)", k, e.get(k, C), g.get(k - 1, C).shift(k, MONO_C))
        _compare(failures, "E(k_a)", k, e.get(k, A), g.get(k, A) - g.get(k - 1, D))
        _compare(failures, "E(k_a)", k, e.get(k, A), g.get(k - 2, D).shift(k, MONO_A))
    return failures


def check_primc_equations(system: GFSystem) -> list[EquationFailure]:
    """Re-evaluate every stored Primc entry, self-referential forms included, without division."""
    g, e = system
    failures: list[EquationFailure] = []
    for k in range(1, g.k_max + 1):
        tail_c = e.get(k, C) + e.get(k, A) + g.get(k - 1, C)
        _compare(failures, "E(k_d)", k, e.get(k, D), g.get(k, D) - g.get(k, C))
        _compare(failures, "E(k_d)", k, e.get(k, D), tail_c.shift(k, MONO_D))
        _compare(failures, "E(k_c)", k, e.get(k, C), g.get(k, C) - g.get(k, B))
        _compare(failures, "E(k_c)", k, e.get(k, C), tail_c.shift(k, MONO_C))
        _compare(failures, "E(k_b)", k, e.get(k, B), g.get(k, B) - g.get(k, A))
        _compare(failures, "E(k_b)", k, e.get(k, B), (e.get(k, B) + g.get(k - 1, D)).shift(k, MONO_B))
        _compare(failures, "E(k_a)", k, e.get(k, A), g.get(k, A) - g.get(k - 1, D))
        _compare(failures, "E(k_a)", k, e.get(k, A), (e.get(k - 1, B) + g.get(k - 2, D)).shift(k, MONO_A))
    return failures
