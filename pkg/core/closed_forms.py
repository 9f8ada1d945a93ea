"""
WWLab — Closed Forms

Finite sums and infinite products that the recurrence tables must agree
with: the sequence u_n (by recurrence and by explicit sums), the H_k sum,
the finite Primc and Capparelli formulas with their b = 1 / c = 1
specialisations, and the truncated product sides of both identities.

The only non-unit factor anywhere below is (1 − b). It is either a plain
numerator or, in the ℓ = 0 term of u_2n, cancelled against the leading
factor of (b; q²)_{n+1} before anything is divided.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from core.qseries import (
    ONE,
    CoeffPoly,
    ColourImage,
    ColourMonomial,
    QSeries,
    first_mismatch,
    pochhammer,
    pochhammer_divide,
    pochhammer_multiply,
    q_binomial2,
    substitute_colours,
)

logger = logging.getLogger("wwlab.closed_forms")

MONO_A = ColourMonomial.symbol("a")
MONO_B = ColourMonomial.symbol("b")
MONO_C = ColourMonomial.symbol("c")
MONO_D = ColourMonomial.symbol("d")

POLY_B = CoeffPoly.monomial(MONO_B)
POLY_C = CoeffPoly.monomial(MONO_C)
NEG_A = CoeffPoly.monomial(MONO_A, -1)
NEG_B = CoeffPoly.monomial(MONO_B, -1)
NEG_D = CoeffPoly.monomial(MONO_D, -1)

B_AS_C = {"b": ColourImage.of("c")}
C_AS_ONE = {"c": ColourImage()}
B_AS_ONE = {"b": ColourImage()}


class Provenance(str, Enum):
    RECURRENCE = "BY-RECURRENCE"
    CLOSED_FORM = "BY-CLOSED-FORM"


class Variant(str, Enum):
    """Which index range the b = 1 / c = 1 sums run over."""

    CORRECTED = "corrected"   # j <= (k+1)/2 with q^binom(k+1-2j, 2)/(q;q)_{k+1-2j}
    PRINTED = "printed"       # j <= k/2 with q^binom(k+1-j, 2)/(q;q)_{k+1-j}


@dataclass(frozen=True)
class USequence:
    values: tuple[QSeries, ...]
    provenance: Provenance

    def __getitem__(self, n: int) -> QSeries:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def first_disagreement(self, other: "USequence") -> tuple[int, int] | None:
        """(n, q-power) of the first u_n where the two sequences differ."""
        for n, (mine, theirs) in enumerate(zip(self.values, other.values)):
            found = first_mismatch(mine, theirs)
            if found is not None:
                return n, found[0]
        return None


def _check_trunc(trunc: int):
    if trunc < 1:
        raise ValueError(f"trunc must be >= 1, got {trunc}")


def _over_q_factorial(s: QSeries, n: int) -> QSeries:
    """s / (q;q)_n"""
    return pochhammer_divide(s, 1, 1, 1, n)


# ── u_n ─────────────────────────────────────────────────────

def u_by_recurrence(n_max: int, trunc: int) -> USequence:
    """
    u_0 = 1, u_1 = q(b - 1)/((1 - bq)(1 - q)), and for n >= 2

      u_n = (1 + a q^(n-1))(1 + d q^(n-1)) / ((1 - b q^n)(1 - c q^(n-1))) u_{n-2}
            + (-1)^n q^n (1 - b) / ((1 - b q^n)(q;q)_n)
    """
    _check_trunc(trunc)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    values = [QSeries.one(trunc)]
    values.append(
        QSeries.from_poly(trunc, {1: POLY_B - 1}).div_binomial(POLY_B, 1).div_binomial(CoeffPoly.constant(1), 1)
    )
    for n in range(2, n_max + 1):
        carried = (
            values[n - 2]
            .mul_binomial(NEG_A, n - 1)
            .mul_binomial(NEG_D, n - 1)
            .div_binomial(POLY_B, n)
            .div_binomial(POLY_C, n - 1)
        )
        sign = 1 if n % 2 == 0 else -1
        fresh = QSeries.from_poly(trunc, {n: (1 - POLY_B) * sign}).div_binomial(POLY_B, n)
        values.append(carried + _over_q_factorial(fresh, n))
    return USequence(tuple(values[: n_max + 1]), Provenance.RECURRENCE)


def u_even(n: int, trunc: int) -> QSeries:
    """
    u_2n = (1 - b) Σ_{ℓ=0..n} (-aq^(2ℓ+1);q²)_{n-ℓ} (-dq^(2ℓ+1);q²)_{n-ℓ}
           / ((bq^2ℓ;q²)_{n-ℓ+1} (cq^(2ℓ+1);q²)_{n-ℓ}) · q^2ℓ/(q;q)_2ℓ
    """
    # ℓ = 0: (1 - b) cancels the leading factor of (b;q²)_{n+1}
    head = QSeries.one(trunc)
    head = pochhammer_multiply(head, NEG_A, 1, 2, n)
    head = pochhammer_multiply(head, NEG_D, 1, 2, n)
    head = pochhammer_divide(head, POLY_B, 2, 2, n)
    head = pochhammer_divide(head, POLY_C, 1, 2, n)

    rest = QSeries.zero(trunc)
    for ell in range(1, n + 1):
        if 2 * ell >= trunc:
            break
        term = QSeries.monomial(trunc, ONE, 2 * ell)
        term = pochhammer_multiply(term, NEG_A, 2 * ell + 1, 2, n - ell)
        term = pochhammer_multiply(term, NEG_D, 2 * ell + 1, 2, n - ell)
        term = pochhammer_divide(term, POLY_B, 2 * ell, 2, n - ell + 1)
        term = pochhammer_divide(term, POLY_C, 2 * ell + 1, 2, n - ell)
        rest = rest + _over_q_factorial(term, 2 * ell)
    return head + rest * (1 - POLY_B)


def u_odd(n: int, trunc: int) -> QSeries:
    """
    u_2n+1 = (b - 1) Σ_{ℓ=0..n} (-aq^(2ℓ+2);q²)_{n-ℓ} (-dq^(2ℓ+2);q²)_{n-ℓ}
             / ((bq^(2ℓ+1);q²)_{n-ℓ+1} (cq^(2ℓ+2);q²)_{n-ℓ}) · q^(2ℓ+1)/(q;q)_(2ℓ+1)
    """
    total = QSeries.zero(trunc)
    for ell in range(n + 1):
        if 2 * ell + 1 >= trunc:
            break
        term = QSeries.monomial(trunc, ONE, 2 * ell + 1)
        term = pochhammer_multiply(term, NEG_A, 2 * ell + 2, 2, n - ell)
        term = pochhammer_multiply(term, NEG_D, 2 * ell + 2, 2, n - ell)
        term = pochhammer_divide(term, POLY_B, 2 * ell + 1, 2, n - ell + 1)
        term = pochhammer_divide(term, POLY_C, 2 * ell + 2, 2, n - ell)
        total = total + _over_q_factorial(term, 2 * ell + 1)
    return total * (POLY_B - 1)


def u_by_closed_form(n_max: int, trunc: int) -> USequence:
    _check_trunc(trunc)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    values = tuple(u_even(n // 2, trunc) if n % 2 == 0 else u_odd(n // 2, trunc) for n in range(n_max + 1))
    return USequence(values, Provenance.CLOSED_FORM)


# ── H_k and the finite identities ───────────────────────────

def h_closed(k: int, trunc: int, u: USequence | None = None) -> QSeries:
    """H_k = Σ_{j=0..k+1} u_j q^binom(k+1-j, 2) / (q;q)_{k+1-j}."""
    _check_trunc(trunc)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if u is None:
        u = u_by_closed_form(k + 1, trunc)
    elif len(u) < k + 2:
        raise ValueError(f"Need u_0..u_{k + 1}, got {len(u)} values")
    total = QSeries.zero(trunc)
    for j in range(k + 2):
        m = k + 1 - j
        total = total + _over_q_factorial(u[j].shift(q_binomial2(m)), m)
    return total


def finite_primc(k: int, trunc: int, u: USequence | None = None) -> QSeries:
    """G^P_k = (1 - b q^(k+1)) H_k."""
    return h_closed(k, trunc, u).mul_binomial(POLY_B, k + 1)


def finite_capparelli(k: int, trunc: int, u: USequence | None = None) -> QSeries:
    """G^C_k = (cq;q)_{k+1} H_k with b := c."""
    h = substitute_colours(h_closed(k, trunc, u), B_AS_C)
    return pochhammer_multiply(h, POLY_C, 1, 1, k + 1)


def _b_one_sum(k: int, trunc: int, c_coeff: CoeffPoly, variant: Variant) -> QSeries:
    """Σ_j (-aq;q²)_j (-dq;q²)_j / ((q²;q²)_j (c q;q²)_j) · q^binom(m,2)/(q;q)_m."""
    if variant is Variant.CORRECTED:
        indices = [(j, k + 1 - 2 * j) for j in range((k + 1) // 2 + 1)]
    else:
        indices = [(j, k + 1 - j) for j in range(k // 2 + 1)]
    total = QSeries.zero(trunc)
    for j, m in indices:
        exp = q_binomial2(m)
        if exp >= trunc:
            continue
        term = QSeries.monomial(trunc, ONE, exp)
        term = pochhammer_multiply(term, NEG_A, 1, 2, j)
        term = pochhammer_multiply(term, NEG_D, 1, 2, j)
        term = pochhammer_divide(term, 1, 2, 2, j)
        term = pochhammer_divide(term, c_coeff, 1, 2, j)
        total = total + _over_q_factorial(term, m)
    return total


def finite_primc_b1(k: int, trunc: int, variant: Variant = Variant.CORRECTED) -> QSeries:
    """G^P_k(q; a, 1, c, d) = (1 - q^(k+1)) · Σ_j ..."""
    _check_trunc(trunc)
    return _b_one_sum(k, trunc, POLY_C, variant).mul_binomial(CoeffPoly.constant(1), k + 1)


def finite_capparelli_c1(k: int, trunc: int, variant: Variant = Variant.CORRECTED) -> QSeries:
    """
    G^C_k(q; a, 1, d) = (q;q)_{k+1} · Σ_j ...

    The printed variant keeps its (cq;q²)_j denominators symbolic in c.
    """
    _check_trunc(trunc)
    c_coeff = CoeffPoly.constant(1) if variant is Variant.CORRECTED else POLY_C
    return pochhammer_multiply(_b_one_sum(k, trunc, c_coeff, variant), 1, 1, 1, k + 1)


# ── Infinite products ───────────────────────────────────────

def product_capparelli(trunc: int) -> QSeries:
    """(-q;q)_∞ (-aq;q²)_∞ (-dq;q²)_∞"""
    _check_trunc(trunc)
    s = pochhammer(-1, 1, 1, None, trunc)
    s = pochhammer_multiply(s, NEG_A, 1, 2, None)
    return pochhammer_multiply(s, NEG_D, 1, 2, None)


def product_capparelli_tilde(trunc: int) -> QSeries:
    """(-q;q)_∞ (-ãq²;q²)_∞ (-b̃q²;q²)_∞, with ã, b̃ counted in the a, b slots."""
    _check_trunc(trunc)
    s = pochhammer(-1, 1, 1, None, trunc)
    s = pochhammer_multiply(s, NEG_A, 2, 2, None)
    return pochhammer_multiply(s, NEG_B, 2, 2, None)


def product_primc(trunc: int) -> QSeries:
    """(-aq;q²)_∞ (-dq;q²)_∞ / ((q;q)_∞ (cq;q²)_∞)"""
    _check_trunc(trunc)
    s = pochhammer(NEG_A, 1, 2, None, trunc)
    s = pochhammer_multiply(s, NEG_D, 1, 2, None)
    s = pochhammer_divide(s, 1, 1, 1, None)
    return pochhammer_divide(s, POLY_C, 1, 2, None)


def partition_series(trunc: int) -> QSeries:
    """1/(q;q)_∞"""
    _check_trunc(trunc)
    return pochhammer_divide(QSeries.one(trunc), 1, 1, 1, None)


def euler_limit_sums(trunc: int) -> tuple[QSeries, QSeries]:
    """
    (Σ_j q^binom(2j,2)/(q;q)_2j, Σ_j q^binom(2j+1,2)/(q;q)_(2j+1)),
    summed until the leading power reaches trunc; both equal (-q;q)_∞.
    """
    _check_trunc(trunc)
    even, odd = QSeries.zero(trunc), QSeries.zero(trunc)
    m = 0
    while q_binomial2(m) < trunc:
        term = _over_q_factorial(QSeries.monomial(trunc, ONE, q_binomial2(m)), m)
        if m % 2 == 0:
            even = even + term
        else:
            odd = odd + term
        m += 1
    logger.debug("Euler limit sums used %d terms at O(q^%d)", m, trunc)
    return even, odd
