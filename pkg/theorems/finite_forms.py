"""
WWLab Theorems — Finite Forms

Closed-form sums against the recurrence tables and the enumeration oracle,
the b = 1 / c = 1 specialisations, and the k → ∞ limits.
"""

from __future__ import annotations

from core.closed_forms import (
    B_AS_ONE,
    C_AS_ONE,
    Variant,
    euler_limit_sums,
    finite_capparelli,
    finite_capparelli_c1,
    finite_primc,
    finite_primc_b1,
    h_closed,
    product_capparelli,
    product_primc,
    u_by_closed_form,
    u_by_recurrence,
)
from core.families import capparelli_spec, primc_spec
from core.partitions import Colour, generating_series
from core.qseries import (
    euler_partial_sum,
    euler_product,
    first_mismatch,
    pochhammer,
    pochhammer_multiply,
    substitute_colours,
)
from core.recurrences import capparelli_system, h_sequence, primc_system
from theorems import Acceptance, Outcome, Scope, TheoremParams, theorem

D = Colour.D

# u_0 .. u_12
U_CHECK_MAX = 12


@theorem("h-closed", "The finite sum for H_k equals the H recurrence", acceptance=Acceptance(trunc=20))
def h_by_closed_form(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    table = h_sequence(k, trunc)
    out.expect_series("H_k closed (closed-form u)", table[k], h_closed(k, trunc))
    out.expect_series("H_k closed (recurrence u)", table[k], h_closed(k, trunc, u_by_recurrence(k + 1, trunc)))
    return out


@theorem("u-closed", "u_n by explicit sums equals u_n by recurrence", scope=Scope.ONCE,
         acceptance=Acceptance(trunc=20))
def u_sequence(params: TheoremParams) -> Outcome:
    out = Outcome()
    by_recurrence = u_by_recurrence(U_CHECK_MAX, params.trunc)
    by_sum = u_by_closed_form(U_CHECK_MAX, params.trunc)
    for n in range(U_CHECK_MAX + 1):
        out.expect_series(f"u_{n}", by_recurrence[n], by_sum[n])
    out.note("n_max", U_CHECK_MAX)
    return out


@theorem("primc-fini", "Finite Primc formula equals the Primc system and the P enumeration",
         acceptance=Acceptance(trunc=20))
def primc_finite(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    closed = finite_primc(k, trunc)
    out.expect_series("G^P_k system vs closed", primc_system(k, trunc).g.get(k, D), closed)
    out.expect_series("G^P_k enumeration vs closed", generating_series(primc_spec(k), trunc), closed)
    return out


@theorem("capa-fini", "Finite Capparelli formula equals the Capparelli system and the C enumeration",
         acceptance=Acceptance(trunc=20))
def capparelli_finite(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    closed = finite_capparelli(k, trunc)
    out.expect_series("G^C_k system vs closed", capparelli_system(k, trunc).g.get(k, D), closed)
    out.expect_series("G^C_k enumeration vs closed", generating_series(capparelli_spec(k), trunc), closed)
    return out


@theorem("cor-primc-fini", "G^P_k at b = 1 by its single-sum formula", substitutions=("b=1",),
         acceptance=Acceptance(trunc=20))
def primc_finite_b1(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    formula = finite_primc_b1(k, trunc)
    system = substitute_colours(primc_system(k, trunc).g.get(k, D), B_AS_ONE)
    oracle = substitute_colours(generating_series(primc_spec(k), trunc), B_AS_ONE)
    out.expect_series("G^P_k(b=1) enumeration vs formula", oracle, formula)
    out.expect_series("G^P_k(b=1) system vs formula", system, formula)
    out.expect_series("G^P_k(b=1) closed vs formula", substitute_colours(finite_primc(k, trunc), B_AS_ONE), formula)
    return out


@theorem("cor-capa-fini", "G^C_k at c = 1 by its single-sum formula", substitutions=("c=1",),
         acceptance=Acceptance(trunc=20))
def capparelli_finite_c1(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    formula = finite_capparelli_c1(k, trunc)
    oracle = substitute_colours(generating_series(capparelli_spec(k), trunc), C_AS_ONE)
    out.expect_series("G^C_k(c=1) enumeration vs formula", oracle, formula)
    return out


@theorem(
    "cor-capa-fini-printed",
    "The b = 1 / c = 1 sums over the displayed index range k+1-j, j <= k/2",
    substitutions=("b=1", "c=1"),
    report_only=True,
    acceptance=Acceptance(trunc=20),
)
def printed_corollaries(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    primc_oracle = substitute_colours(primc_system(k, trunc).g.get(k, D), B_AS_ONE)
    capa_oracle = substitute_colours(capparelli_system(k, trunc).g.get(k, D), C_AS_ONE)
    printed_capa = finite_capparelli_c1(k, trunc, Variant.PRINTED)

    checks = (
        ("G^P_k(b=1) printed", primc_oracle, finite_primc_b1(k, trunc, Variant.PRINTED)),
        ("G^C_k(c=1) printed", capa_oracle, printed_capa),
        ("G^C_k(c=1) printed, residual c := 1", capa_oracle, substitute_colours(printed_capa, C_AS_ONE)),
    )
    for label, expected, actual in checks:
        found = first_mismatch(expected, actual)
        out.note(label, "agrees" if found is None else f"first differs at q^{found[0]}")
        out.expect_series(label, expected, actual)
    return out


# ── Limits ──────────────────────────────────────────────────

@theorem("stabilization", "For k >= trunc the finite forms reproduce the infinite products", scope=Scope.ONCE,
         acceptance=Acceptance(trunc=20))
def stabilization(params: TheoremParams) -> Outcome:
    trunc = params.trunc
    out = Outcome()
    primc_limit = product_primc(trunc)
    out.expect_series("G^P_k(b=1) closed, k=trunc",
                      primc_limit, substitute_colours(finite_primc(trunc, trunc), B_AS_ONE))
    for k in (trunc, trunc + 1):
        out.expect_series(f"G^P_k(b=1) formula, k={k}", primc_limit, finite_primc_b1(k, trunc))
        out.expect_series(f"G^C_k(c=1) formula, k={k}", product_capparelli(trunc), finite_capparelli_c1(k, trunc))
    out.expect_series("G^C_k(c=1) closed, k=trunc",
                      product_capparelli(trunc), substitute_colours(finite_capparelli(trunc, trunc), C_AS_ONE))
    return out


@theorem(
    "capparelli-from-primc",
    "(q;q)_∞ times the Primc product at b = c = 1 is the Capparelli product",
    scope=Scope.ONCE,
    substitutions=("b=1", "c=1"),
)
def capparelli_from_primc(params: TheoremParams) -> Outcome:
    trunc = params.trunc
    out = Outcome()
    target = product_capparelli(trunc)
    out.expect_series("product", target, pochhammer_multiply(substitute_colours(product_primc(trunc), C_AS_ONE), 1, 1, 1, None))
    limit = substitute_colours(finite_primc_b1(trunc, trunc), C_AS_ONE)
    out.expect_series("finite sum at k=trunc", target, pochhammer_multiply(limit, 1, 1, 1, None))
    return out


@theorem("euler", "Σ x^n q^binom(n,2)/(q;q)_n = (-x;q)_∞, and the even/odd limit sums", scope=Scope.ONCE,
         acceptance=Acceptance(trunc=30))
def euler_expansion(params: TheoremParams) -> Outcome:
    trunc = params.trunc
    out = Outcome()
    out.expect_series("Euler expansion", euler_product(trunc), euler_partial_sum(trunc, trunc))
    even, odd = euler_limit_sums(trunc)
    distinct = pochhammer(-1, 1, 1, None, trunc)
    out.expect_series("even limit sum", distinct, even)
    out.expect_series("odd limit sum", distinct, odd)
    return out
