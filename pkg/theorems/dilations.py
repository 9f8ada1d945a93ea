"""
WWLab Theorems — Dilations

Classical identities recovered from the coloured families: Primc's
dilation counts ordinary partitions, Capparelli's dilation gives
C(n) = D(n), and the tilde family ties Capparelli's product to Primc's.
"""

from __future__ import annotations

from collections import Counter

from core.classical import capparelli_c, capparelli_d, partition_counts, primc_quadruples
from core.closed_forms import (
    C_AS_ONE,
    partition_series,
    product_capparelli,
    product_capparelli_tilde,
    product_primc,
)
from core.families import (
    CAPPARELLI_DILATION,
    CAPPARELLI_TILDE_DILATION,
    PRIMC_DILATION,
    capparelli_dil3_spec,
    capparelli_spec,
    capparelli_tilde_spec,
    primc_dil2_spec,
    primc_spec,
)
from core.partitions import (
    dilate_spec,
    enumerate_partitions,
    generating_series,
    is_member,
    relabel_tilde,
    rule_as_substitution,
)
from core.qseries import ColourImage, QSeries, substitute_colours
from theorems import Acceptance, Outcome, Scope, TheoremParams, theorem

ALL_ONE = {var: ColourImage() for var in "abcd"}


def flat_counts(s: QSeries) -> list[int]:
    """Coefficients of s with every colour set to 1."""
    flat = substitute_colours(s, ALL_ONE)
    return [flat.coefficient(n).constant_term() for n in range(flat.trunc)]


def _dilated_product(product: QSeries, rule) -> QSeries:
    m, mapping = rule_as_substitution(rule)
    return substitute_colours(product, mapping, dilation=m)


def _same_family(out: Outcome, label: str, built, expected):
    same = (
        built.matrix == expected.matrix
        and dict(built.min_part) == dict(expected.min_part)
        and dict(built.value_classes) == dict(expected.value_classes)
    )
    out.expect_true(label, same, note=f"matrix {built.matrix.as_dict()}")


@theorem("primc-dilated", "Primc's family under q → q², a → aq⁻¹, d → dq counts ordinary partitions", scope=Scope.ONCE,
         acceptance=Acceptance(trunc=21))
def primc_dilated(params: TheoremParams) -> Outcome:
    trunc = params.trunc
    out = Outcome()
    spec = primc_dil2_spec()
    _same_family(out, "dilate_spec(P) = PDIL2", dilate_spec(primc_spec(), PRIMC_DILATION), spec)

    series = generating_series(spec, trunc)
    counts = flat_counts(series)
    brute = partition_counts(trunc - 1)
    out.expect_sequence("PDIL2 counts vs p(n)", brute, counts)
    listed = Counter(p.weight for p in enumerate_partitions(spec, min(trunc - 1, params.max_weight)))
    out.expect_sequence("PDIL2 listing vs p(n)", brute[: len(listed)], [listed[n] for n in range(len(listed))])

    # colour-tracked refinement against the dilated product, b := 1
    dilated = _dilated_product(product_primc(trunc), PRIMC_DILATION)
    out.expect_series("PDIL2 series vs dilated product", dilated, substitute_colours(series, {"b": ColourImage()}))
    out.note("coefficients", ",".join(str(c) for c in counts))
    return out


@theorem("capa-dilated", "Capparelli's family under q → q³, a → aq⁻¹, d → dq gives C(n) = D(n)", scope=Scope.ONCE,
         acceptance=Acceptance(trunc=31))
def capparelli_dilated(params: TheoremParams) -> Outcome:
    trunc = params.trunc
    out = Outcome()
    spec = capparelli_dil3_spec()
    series = generating_series(spec, trunc)
    from_family = flat_counts(series)
    from_tilde = flat_counts(generating_series(dilate_spec(capparelli_tilde_spec(), CAPPARELLI_TILDE_DILATION), trunc))
    dilated = _dilated_product(product_capparelli(trunc), CAPPARELLI_DILATION)

    c_brute = [capparelli_c(n) for n in range(trunc)]
    d_brute = [capparelli_d(n) for n in range(trunc)]
    out.expect_sequence("C(n) brute force vs CDIL3", c_brute, from_family)
    out.expect_sequence("C(n) brute force vs dilated C~", c_brute, from_tilde)
    out.expect_sequence("D(n) brute force vs dilated product", d_brute, flat_counts(dilated))
    out.expect_sequence("C(n) vs D(n)", c_brute, d_brute)
    out.expect_series("CDIL3 series vs dilated product, c := 1",
                      substitute_colours(dilated, C_AS_ONE), substitute_colours(series, C_AS_ONE))
    out.note("C(n)", ",".join(str(c) for c in c_brute))
    return out


@theorem(
    "capa-aag",
    "The C~ family has product (-q;q)_∞ (-ãq²;q²)_∞ (-b̃q²;q²)_∞",
    scope=Scope.ONCE,
    substitutions=("c=1",),
    acceptance=Acceptance(trunc=20),
)
def capparelli_tilde_product(params: TheoremParams) -> Outcome:
    trunc = params.trunc
    out = Outcome()
    series = substitute_colours(generating_series(capparelli_tilde_spec(), trunc), C_AS_ONE)
    out.expect_series("C~ series vs product", product_capparelli_tilde(trunc), series)
    return out


@theorem("tilde-relabel", "k_ã → (k-1)_d, k_b̃ → (k-1)_a, k_c̃ → k_c maps C~ onto C", scope=Scope.ONCE)
def tilde_relabel(params: TheoremParams) -> Outcome:
    trunc = params.trunc
    out = Outcome()
    shifted = {"a": ColourImage.of("d", q_shift=-1), "b": ColourImage.of("a", q_shift=-1)}
    tilde = substitute_colours(generating_series(capparelli_tilde_spec(), 2 * trunc), shifted).truncate(trunc)
    out.expect_series("relabelled C~ series vs C series", generating_series(capparelli_spec(), trunc), tilde)

    weight = params.max_weight
    target = capparelli_spec()
    images = [relabel_tilde(p) for p in enumerate_partitions(capparelli_tilde_spec(), weight)]
    outside = [p for p in images if not is_member(p, target)]
    out.expect_true("relabelled partitions lie in C", not outside, note=f"{len(outside)} outside, e.g. '{outside[0]}'" if outside else "")
    out.expect_true("relabelling is injective", len(set(images)) == len(images))
    half = weight // 2
    reached = {p for p in images if p.weight <= half}
    out.expect_true(f"relabelling covers C up to weight {half}",
                    reached == set(enumerate_partitions(target, half)))
    out.note("partitions", len(images))
    return out


@theorem("product-link", "Primc's product with c := 1, a := aq, d := bq is the C~ product over (q;q)_∞", scope=Scope.ONCE)
def product_link(params: TheoremParams) -> Outcome:
    trunc = params.trunc
    out = Outcome()
    mapping = {"c": ColourImage(), "a": ColourImage.of("a", q_shift=1), "d": ColourImage.of("b", q_shift=1)}
    left = substitute_colours(product_primc(trunc), mapping)
    out.expect_series("Primc product vs C~ product/(q;q)_∞", product_capparelli_tilde(trunc) * partition_series(trunc), left)
    return out


@theorem("remark", "P(n;i,ℓ) of the P family equals the count of odd/distinct 4-tuples", scope=Scope.ONCE,
         acceptance=Acceptance(max_weight=16))
def remark_quadruples(params: TheoremParams) -> Outcome:
    weight = params.max_weight
    out = Outcome()
    family = Counter()
    for p in enumerate_partitions(primc_spec(), weight):
        a, _, _, d = p.slot_counts
        family[(p.weight, a, d)] += 1
    out.expect_counts("P(n;i,ℓ)", primc_quadruples(weight), family)
    out.note("classes", len(family))
    return out
