"""
WWLab Theorems — Recurrences

Oracle equivalence of the recurrence tables with the partition families,
the quotient identity between G^C_k and G^P_k, and the two relations to
the auxiliary series H_k.
"""

from __future__ import annotations

from core.closed_forms import B_AS_C, POLY_B, POLY_C
from core.families import capparelli_spec, primc_spec
from core.partitions import Colour, EnumSpec, enumerate_partitions, generating_series, series_from_partitions
from core.qseries import pochhammer_divide, substitute_colours
from core.recurrences import (
    EquationFailure,
    capparelli_recurrence,
    capparelli_system,
    check_capparelli_equations,
    check_h_base_cases,
    check_primc_equations,
    h_minus_four,
    h_minus_three,
    h_sequence,
    primc_recurrence,
    primc_system,
)
from theorems import Acceptance, Outcome, Scope, TheoremParams, theorem

D = Colour.D


def _against_enumeration(out: Outcome, spec: EnumSpec, params: TheoremParams):
    """Transfer series vs. brute-force listing, up to the weight bound."""
    trunc = min(params.trunc, params.max_weight + 1)
    listed = series_from_partitions(enumerate_partitions(spec, trunc - 1), trunc)
    out.expect_series(f"{spec.name} series by enumeration", listed, generating_series(spec, trunc))


def _equations(out: Outcome, failures: list[EquationFailure]):
    out.note("equation failures", len(failures))
    if failures:
        first = failures[0]
        out.expect_true(f"equation {first.equation} at k={first.k}", False, first.q_power)


@theorem("oracle-capparelli", "Enumeration series of the C family equals the Capparelli system and recurrence",
         acceptance=Acceptance(trunc=24))
def oracle_capparelli(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    spec = capparelli_spec(k)
    oracle = generating_series(spec, trunc)
    out.expect_series("G^C_k by system", oracle, capparelli_system(k, trunc).g.get(k, D))
    out.expect_series("G^C_k by recurrence", oracle, capparelli_recurrence(k, trunc)[k])
    _against_enumeration(out, spec, params)
    return out


@theorem("oracle-primc", "Enumeration series of the P family equals the Primc system",
         acceptance=Acceptance(trunc=24))
def oracle_primc(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    spec = primc_spec(k)
    out.expect_series("G^P_k by system", generating_series(spec, trunc), primc_system(k, trunc).g.get(k, D))
    _against_enumeration(out, spec, params)
    return out


@theorem("recurrence-capparelli", "Closed Capparelli recurrence agrees with the system; every stored equation holds",
         acceptance=Acceptance(trunc=24))
def recurrence_capparelli(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    system = capparelli_system(k, trunc)
    out.expect_series("G^C_k", system.g.get(k, D), capparelli_recurrence(k, trunc)[k])
    _equations(out, check_capparelli_equations(system))
    return out


@theorem("recurrence-primc", "Closed Primc recurrence agrees with the system; every stored equation holds",
         acceptance=Acceptance(trunc=24))
def recurrence_primc(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    system = primc_system(k, trunc)
    out.expect_series("G^P_k", system.g.get(k, D), primc_recurrence(k, trunc)[k])
    _equations(out, check_primc_equations(system))
    return out


@theorem("main", "G^C_k / (cq;q)_k = G^P_k with b := c", substitutions=("b=c",),
         acceptance=Acceptance(trunc=24))
def main_identity(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    left = pochhammer_divide(capparelli_system(k, trunc).g.get(k, D), POLY_C, 1, 1, k)
    right = substitute_colours(primc_system(k, trunc).g.get(k, D), B_AS_C)
    out.expect_series("G^C_k/(cq;q)_k vs G^P_k(b=c)", left, right)
    return out


@theorem("cap-h", "G^C_k / (cq;q)_(k+1) = H_k with b := c", substitutions=("b=c",),
         acceptance=Acceptance(trunc=24, k_min=0))
def capparelli_over_h(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    left = pochhammer_divide(capparelli_system(k, trunc).g.get(k, D), POLY_C, 1, 1, k + 1)
    right = substitute_colours(h_sequence(k, trunc)[k], B_AS_C)
    out.expect_series("G^C_k/(cq;q)_(k+1) vs H_k(b=c)", left, right)
    return out


@theorem("primc-h", "G^P_k = (1 - b q^(k+1)) H_k", acceptance=Acceptance(trunc=24, k_min=0))
def primc_times_h(params: TheoremParams) -> Outcome:
    k, trunc = params.k, params.trunc
    out = Outcome()
    right = h_sequence(k, trunc)[k].mul_binomial(POLY_B, k + 1)
    out.expect_series("G^P_k vs (1-bq^(k+1))H_k", primc_system(k, trunc).g.get(k, D), right)
    return out


@theorem("h-base", "The H recurrence holds at k = 0 and k = 1 from H_-1, H_-2, H_-3", scope=Scope.ONCE)
def h_base_cases(params: TheoremParams) -> Outcome:
    trunc = max(params.trunc, 2)
    out = Outcome()
    out.expect_true("H recurrence at k=0,1", check_h_base_cases(trunc))
    out.note("H_-3", str(h_minus_three(trunc)))
    out.note("H_-4", str(h_minus_four(trunc)))
    return out
