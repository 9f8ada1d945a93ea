"""Tests for the recurrence solvers."""

import pytest

from core.families import capparelli_spec, primc_spec
from core.partitions import Colour, generating_series
from core.qseries import CoeffPoly, QSeries
from core.recurrences import (
    capparelli_recurrence,
    capparelli_system,
    check_capparelli_equations,
    check_h_base_cases,
    check_primc_equations,
    h_minus_four,
    h_minus_three,
    h_sequence,
    primc_g1,
    primc_recurrence,
    primc_system,
)

A, B, C, D = Colour.A, Colour.B, Colour.C, Colour.D
a, b, c, d = (CoeffPoly.symbol(x) for x in "abcd")

G_C_1 = QSeries.from_poly(3, {0: 1, 1: a + c + d, 2: a * d})
G_P_1 = QSeries.from_poly(3, {0: 1, 1: a + b + c + d, 2: b * b + c * c + a * c + a * d + c * d})


# ── Capparelli ───────────────────────────────────────────────

def test_capparelli_first_entries():
    g, e = capparelli_system(1, 3)
    assert g.get(1, D) == G_C_1
    assert e.get(1, C) == QSeries.from_poly(3, {1: c})
    assert g.get(0, D) == QSeries.one(3)
    assert g[(1, D)] == g.get(1, D)


def test_capparelli_recurrence_first_steps():
    values = capparelli_recurrence(1, 3)
    assert values[0] == QSeries.one(3)
    assert values[1] == G_C_1


@pytest.mark.parametrize("k", range(1, 6))
def test_capparelli_tables_agree_with_the_family(k):
    trunc = 14
    system = capparelli_system(k, trunc)
    oracle = generating_series(capparelli_spec(k), trunc)
    assert system.g.get(k, D) == oracle
    assert capparelli_recurrence(k, trunc)[k] == oracle


def test_capparelli_equations_hold_on_every_entry():
    assert check_capparelli_equations(capparelli_system(6, 12)) == []


# ── Primc ────────────────────────────────────────────────────

def test_primc_first_entries():
    g, e = primc_system(1, 3)
    assert g.get(1, D) == G_P_1
    assert primc_g1(3) == G_P_1
    assert e.get(0, B) == QSeries.from_poly(3, {0: b})
    assert g.get(0, A) == QSeries.from_poly(3, {0: 1 - b})


@pytest.mark.parametrize("k", range(1, 6))
def test_primc_tables_agree_with_the_family(k):
    trunc = 12
    oracle = generating_series(primc_spec(k), trunc)
    assert primc_system(k, trunc).g.get(k, D) == oracle
    assert primc_recurrence(k, trunc)[k] == oracle


def test_primc_equations_hold_on_every_entry():
    assert check_primc_equations(primc_system(6, 12)) == []


def test_table_lookup_of_a_missing_index():
    g, _ = primc_system(2, 6)
    assert g.k_max == 2
    assert (2, D) in g
    with pytest.raises(KeyError):
        g.get(3, D)


def test_bad_arguments():
    with pytest.raises(ValueError):
        capparelli_system(-1, 5)
    with pytest.raises(ValueError):
        primc_system(3, 0)


# ── H ────────────────────────────────────────────────────────

def test_h_initial_values():
    table = h_sequence(1, 5)
    assert table[-1] == QSeries.one(5)
    assert table[0] == QSeries.from_poly(5, {n: b_power for n, b_power in enumerate([1, b, b * b, b * b * b, b * b * b * b])})


def test_h_one_cleared_of_denominators():
    trunc = 8
    h1 = h_sequence(1, trunc)[1]
    left = h1.mul_binomial(c, 1).mul_binomial(b, 1).mul_binomial(b, 2)
    outer = QSeries.from_poly(trunc, {1: a + d, 2: a * d})
    right = QSeries.one(trunc).mul_binomial(b * c, 2) + outer.mul_binomial(b, 1)
    assert left == right


@pytest.mark.parametrize("trunc", [2, 6, 12])
def test_h_base_cases(trunc):
    assert check_h_base_cases(trunc)


def test_negative_index_values():
    h3 = h_minus_three(4)
    assert h3.coefficient(0) == CoeffPoly()
    assert h3.coefficient(1) == (b - 1) * CoeffPoly({(-1, 0, 1, -1): 1})
    h4 = h_minus_four(5)
    assert h4.coefficient(3) == (1 - b) * (a * c + a * d + c * d) * CoeffPoly({(-2, 0, 0, -2): 1})


@pytest.mark.parametrize("k", range(0, 5))
def test_h_relates_both_families(k):
    trunc = 10
    h = h_sequence(k, trunc)[k]
    assert primc_system(k, trunc).g.get(k, D) == h.mul_binomial(b, k + 1)
