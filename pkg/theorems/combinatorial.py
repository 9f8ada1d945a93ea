"""
WWLab Theorems — Combinatorial

The profile-count identity between pairs (λ, μ) and the P family, checked
by exhaustive listing on both sides and by running the bijection forward
and back on every pair.
"""

from __future__ import annotations

import logging
from collections import Counter

from core.bijection import all_pairs, forward, inverse, nu_profile
from core.families import primc_spec
from core.partitions import enumerate_partitions
from theorems import Acceptance, Outcome, Scope, TheoremParams, theorem

logger = logging.getLogger("wwlab.theorems.comb")


@theorem("comb", "Profile counts of (λ, μ) pairs equal those of the P family; the bijection round-trips", scope=Scope.ONCE,
         acceptance=Acceptance(max_weight=14))
def profile_counts(params: TheoremParams) -> Outcome:
    weight = params.max_weight
    out = Outcome()
    pairs = list(all_pairs(weight))
    family = enumerate_partitions(primc_spec(), weight)
    pair_side = Counter(pair.profile() for pair in pairs)
    family_side = Counter(nu_profile(nu) for nu in family)
    out.expect_counts("profile (n, k, #a, #c, #d)", pair_side, family_side)

    images = set()
    for pair in pairs:
        nu = forward(pair).nu
        images.add(nu)
        if nu_profile(nu) != pair.profile():
            out.expect_true(f"forward keeps the profile of ({pair.lam}, {pair.mu})", False, pair.weight, str(nu))
            continue
        back = inverse(nu).pair
        if back.lam != pair.lam or back.mu != pair.mu:
            out.expect_true(f"inverse undoes forward on ({pair.lam}, {pair.mu})", False, pair.weight,
                            f"({back.lam}, {back.mu})")
    out.expect_true("forward is onto the P family", images == set(family))
    logger.debug("Round-tripped %d pairs up to weight %d", len(pairs), weight)

    out.note("pairs", len(pairs))
    out.note("profiles", len(pair_side))
    by_weight = Counter()
    for profile, count in pair_side.items():
        by_weight[profile[0]] += count
    out.note("pairs by weight", ",".join(str(by_weight[n]) for n in range(weight + 1)))
    return out
