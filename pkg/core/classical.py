"""
WWLab — Classical Partition Oracles

Brute-force counts of ordinary (uncoloured) partitions, written without
gap matrices or q-series so they can referee the coloured machinery.
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, Iterator

logger = logging.getLogger("wwlab.classical")

PartPredicate = Callable[[int], bool]


def _any_part(k: int) -> bool:
    return True


def partitions(n: int, allowed: PartPredicate = _any_part, distinct: bool = False,
               largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of allowed parts summing to n."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(n, largest)
    for first in range(top, 0, -1):
        if not allowed(first):
            continue
        cap = first - 1 if distinct else first
        for rest in partitions(n - first, allowed, distinct, cap):
            yield (first,) + rest


def partition_counts(n_max: int) -> list[int]:
    """p(0), p(1), ..., p(n_max) by listing every partition."""
    return [sum(1 for _ in partitions(n)) for n in range(n_max + 1)]


def _capparelli_gap_ok(big: int, small: int) -> bool:
    gap = big - small
    if (big + small) % 3 == 0:
        return gap >= 2
    return gap >= 4


def capparelli_c(n: int) -> int:
    """Partitions of n into parts > 1, gaps >= 2, and >= 4 unless adjacent parts sum to a multiple of 3."""
    count = 0
    for p in partitions(n, lambda k: k > 1, distinct=True):
        if all(_capparelli_gap_ok(x, y) for x, y in zip(p, p[1:])):
            count += 1
    return count


def capparelli_d(n: int) -> int:
    """Partitions of n into distinct parts not congruent to ±1 mod 6."""
    return sum(1 for _ in partitions(n, lambda k: k % 6 not in (1, 5), distinct=True))


# ── Remark 4-tuples ─────────────────────────────────────────

def _by_weight_and_length(n_max: int, allowed: PartPredicate, distinct: bool) -> Counter:
    out: Counter = Counter()
    for n in range(n_max + 1):
        for p in partitions(n, allowed, distinct):
            out[(n, len(p))] += 1
    return out


def _by_weight(n_max: int, allowed: PartPredicate) -> Counter:
    return Counter({n: sum(1 for _ in partitions(n, allowed)) for n in range(n_max + 1)})


def primc_quadruples(n_max: int) -> Counter:
    """
    P'(n; i, ℓ) for n <= n_max: 4-tuples (λ, μ, ν, χ) with λ distinct odd
    parts (i of them), μ any partition, ν odd parts, χ distinct odd parts
    (ℓ of them), keyed by (n, i, ℓ).
    """
    odd = lambda k: k % 2 == 1  # noqa: E731
    lam = _by_weight_and_length(n_max, odd, distinct=True)
    mu = _by_weight(n_max, _any_part)
    nu = _by_weight(n_max, odd)
    chi = lam

    free: Counter = Counter()
    for w1, c1 in mu.items():
        for w2, c2 in nu.items():
            if w1 + w2 <= n_max:
                free[w1 + w2] += c1 * c2

    out: Counter = Counter()
    for (wl, i), cl in lam.items():
        for (wc, ell), cc in chi.items():
            for wf, cf in free.items():
                n = wl + wc + wf
                if n <= n_max:
                    out[(n, i, ell)] += cl * cc * cf
    logger.debug("Counted %d (n, i, ℓ) classes of 4-tuples up to n=%d", len(out), n_max)
    return out
