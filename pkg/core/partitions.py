"""
WWLab — Coloured Partitions

Declarative families of coloured partitions (an EnumSpec: alphabet, gap
matrix, per-colour minimum part, largest-part bound, optional named
non-adjacent condition set) and two independent ways to count them:

  - `enumerate`         depth-first search listing every member
  - `generating_series` transfer recursion on (value, colour) states

Entry (x, y) of a gap matrix is the minimal difference between a part
coloured x and the next (smaller) part coloured y. A part sequence is valid
iff every consecutive pair meets its entry; no separate order is stored.

Partition text grammar: `8d+8a+6c+5c+3d+1a`, tilde colours as `at, bt, ct`,
the empty partition is the empty string.
"""

from __future__ import annotations

import graphlib
import logging
import re
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator, Mapping, NamedTuple

from core import MembershipError, PartitionSyntaxError, UnknownColour
from core.qseries import CoeffPoly, ColourImage, ColourMonomial, QSeries

logger = logging.getLogger("wwlab.partitions")


# ── Colours ──────────────────────────────────────────────────

class Colour(str, Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    AT = "at"
    BT = "bt"
    CT = "ct"

    @property
    def slot(self) -> str:
        """Coefficient symbol counting this colour (tilde colours reuse a, b, c)."""
        return self.value[0]

    @property
    def is_tilde(self) -> bool:
        return self.value.endswith("t")

    @property
    def monomial(self) -> ColourMonomial:
        return ColourMonomial.symbol(self.slot)


# Position of k_x in the coloured order is (k - offset, rank):
#   1_a < 1_b < 1_c < 1_d < 2_a < ...     and     2_bt < 1_ct < 2_at < 3_bt < ...
_ORDER = {
    Colour.A: (0, 0), Colour.B: (0, 1), Colour.C: (0, 2), Colour.D: (0, 3),
    Colour.BT: (1, 0), Colour.CT: (0, 1), Colour.AT: (1, 2),
}


class ColouredPart(NamedTuple):
    value: int
    colour: Colour

    @property
    def order_key(self) -> tuple[int, int]:
        offset, rank = _ORDER[self.colour]
        return self.value - offset, rank

    def __str__(self) -> str:
        return f"{self.value}{self.colour.value}"


def part(value: int, colour: str | Colour) -> ColouredPart:
    return ColouredPart(value, Colour(colour))


# ── Partitions ──────────────────────────────────────────────

@dataclass(frozen=True)
class ColouredPartition:
    """A finite part sequence, largest first; statistics are derived."""

    parts: tuple[ColouredPart, ...] = ()

    @classmethod
    def of(cls, parts: Iterable[ColouredPart]) -> "ColouredPartition":
        return cls(tuple(parts))

    @classmethod
    def sorted_from(cls, parts: Iterable[ColouredPart]) -> "ColouredPartition":
        """Arrange parts non-increasingly in the coloured order."""
        return cls(tuple(sorted(parts, key=lambda p: p.order_key, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    @property
    def largest(self) -> int:
        return max((p.value for p in self.parts), default=0)

    @property
    def colour_counts(self) -> Counter:
        return Counter(p.colour for p in self.parts)

    @property
    def slot_counts(self) -> tuple[int, int, int, int]:
        counts = Counter(p.colour.slot for p in self.parts)
        return counts["a"], counts["b"], counts["c"], counts["d"]

    @property
    def monomial(self) -> ColourMonomial:
        return ColourMonomial(*self.slot_counts)

    def multiplicity(self, value: int, colour: Colour) -> int:
        """A_k, B_k, C_k, D_k: how many parts equal k_colour."""
        return sum(1 for p in self.parts if p.value == value and p.colour == colour)

    def values_with(self, colour: Colour) -> set[int]:
        return {p.value for p in self.parts if p.colour == colour}

    def profile(self) -> tuple[int, int, int, int, int, int]:
        """(weight, largest part, #a, #b, #c, #d) over colour slots."""
        return (self.weight, self.largest, *self.slot_counts)

    def __iter__(self) -> Iterator[ColouredPart]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = ColouredPartition()

_PART_RE = re.compile(r"^(\d+)(at|bt|ct|a|b|c|d)$")


def parse_partition(text: str) -> ColouredPartition:
    """Parse `8d+8a+6c` (empty string = empty partition); order is kept as written."""
    body = text.strip()
    if not body:
        return EMPTY
    parts = []
    for token in body.split("+"):
        match = _PART_RE.match(token.strip())
        if not match or int(match[1]) < 1:
            raise PartitionSyntaxError(f"Bad part '{token}' in '{text}'")
        parts.append(ColouredPart(int(match[1]), Colour(match[2])))
    return ColouredPartition(tuple(parts))


def format_partition(p: ColouredPartition) -> str:
    return "+".join(str(x) for x in p.parts)


# ── Gap Matrices & Families ─────────────────────────────────

@dataclass(frozen=True)
class GapMatrix:
    colours: tuple[Colour, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != len(self.colours) or any(len(r) != len(self.colours) for r in self.rows):
            raise ValueError("Gap matrix must be square over its colours")
        if any(v < 0 for r in self.rows for v in r):
            raise ValueError("Gap matrix entries must be >= 0")

    @classmethod
    def from_rows(cls, colours: str | Iterable, rows: Iterable[Iterable[int]]) -> "GapMatrix":
        cols = tuple(Colour(c) for c in (colours.split() if isinstance(colours, str) else colours))
        return cls(cols, tuple(tuple(r) for r in rows))

    def gap(self, x: Colour, y: Colour) -> int:
        try:
            return self.rows[self.colours.index(x)][self.colours.index(y)]
        except ValueError:
            raise UnknownColour(f"Colour pair ({x.value},{y.value}) not in matrix over "
                                f"{[c.value for c in self.colours]}") from None

    def as_dict(self) -> dict[str, dict[str, int]]:
        return {x.value: {y.value: self.gap(x, y) for y in self.colours} for x in self.colours}


class ConditionSet(str, Enum):
    """Named non-adjacent condition sets of the bijection's middle stages."""

    M1 = "C1-C4"
    M2 = "C'1-C'3"


class Violation(NamedTuple):
    condition: str
    parts: tuple[ColouredPart, ...]

    def __str__(self) -> str:
        return f"{self.condition}: {' '.join(str(p) for p in self.parts)}"


class Affine(NamedTuple):
    """k ↦ scale·k + offset."""

    scale: int
    offset: int

    def __call__(self, k: int) -> int:
        return self.scale * k + self.offset


DilationRule = Mapping[Colour, Affine]


@dataclass(frozen=True)
class EnumSpec:
    name: str
    matrix: GapMatrix
    min_part: Mapping[Colour, int] = field(default_factory=dict)
    max_part: int | None = None
    extra: ConditionSet | None = None
    # colour -> (modulus, residue) for dilated families
    value_classes: Mapping[Colour, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        for colour in (*self.min_part, *self.value_classes):
            if colour not in self.matrix.colours:
                raise UnknownColour(f"{colour.value} is not in the alphabet of {self.name}")
        if self.max_part is not None and self.max_part < 0:
            raise ValueError(f"max_part must be >= 0, got {self.max_part}")

    @property
    def colours(self) -> tuple[Colour, ...]:
        return self.matrix.colours

    def minimum(self, colour: Colour) -> int:
        return self.min_part.get(colour, 1)

    def allows_value(self, value: int, colour: Colour) -> bool:
        if value < self.minimum(colour):
            return False
        if self.max_part is not None and value > self.max_part:
            return False
        if colour in self.value_classes:
            modulus, residue = self.value_classes[colour]
            return value % modulus == residue % modulus
        return True

    def with_max_part(self, k: int | None) -> "EnumSpec":
        return replace(self, max_part=k)


# ── Membership ──────────────────────────────────────────────

def violations(p: ColouredPartition, spec: EnumSpec) -> list[Violation]:
    """Every failed condition of p in spec (empty list = member)."""
    found: list[Violation] = []
    for x in p.parts:
        if x.colour not in spec.colours:
            raise UnknownColour(f"Part {x} uses a colour outside {[c.value for c in spec.colours]}")
        if x.value < spec.minimum(x.colour):
            found.append(Violation("min-part", (x,)))
        if spec.max_part is not None and x.value > spec.max_part:
            found.append(Violation("max-part", (x,)))
        if x.colour in spec.value_classes:
            modulus, residue = spec.value_classes[x.colour]
            if x.value % modulus != residue % modulus:
                found.append(Violation("value-class", (x,)))
    for big, small in zip(p.parts, p.parts[1:]):
        if big.value - small.value < spec.matrix.gap(big.colour, small.colour):
            found.append(Violation("gap", (big, small)))
    if spec.extra is not None:
        from core.families import condition_violations
        found.extend(condition_violations(p, spec.extra))
    return found


def is_member(p: ColouredPartition, spec: EnumSpec) -> bool:
    return not violations(p, spec)


def require_member(p: ColouredPartition, spec: EnumSpec, what: str = "partition"):
    found = violations(p, spec)
    if found:
        raise MembershipError(f"{what} '{p}' is not in {spec.name}: "
                              + "; ".join(str(v) for v in found), found)


# ── Enumeration ─────────────────────────────────────────────

def _candidates(spec: EnumSpec, ceiling: dict[Colour, int], budget: int) -> Iterator[ColouredPart]:
    for colour in spec.colours:
        top = min(ceiling[colour], budget)
        if spec.max_part is not None:
            top = min(top, spec.max_part)
        for value in range(top, spec.minimum(colour) - 1, -1):
            if spec.allows_value(value, colour):
                yield ColouredPart(value, colour)


def enumerate_partitions(spec: EnumSpec, max_weight: int) -> list[ColouredPartition]:
    """
    All members of spec with weight <= max_weight.

    Ordered by weight, then lexicographically by the part list, each part
    keyed by (value desc, colour desc): 2d, 2c, ..., 1d+1c, 1d+1a, 1c+1c, 1c+1a, 1b+1b.
    """
    if max_weight < 0:
        raise ValueError(f"max_weight must be >= 0, got {max_weight}")
    found: list[tuple[ColouredPart, ...]] = []

    def extend(prefix: list[ColouredPart], budget: int):
        found.append(tuple(prefix))
        last = prefix[-1] if prefix else None
        if last is None:
            ceiling = {c: budget for c in spec.colours}
        else:
            ceiling = {c: last.value - spec.matrix.gap(last.colour, c) for c in spec.colours}
        for nxt in _candidates(spec, ceiling, budget):
            prefix.append(nxt)
            extend(prefix, budget - nxt.value)
            prefix.pop()

    extend([], max_weight)
    members = [ColouredPartition(parts) for parts in found]
    if spec.extra is not None:
        from core.families import condition_violations
        members = [p for p in members if not condition_violations(p, spec.extra)]
    members.sort(key=lambda p: (p.weight, [(-x.value, -x.order_key[1]) for x in p.parts]))
    logger.debug("Enumerated %d members of %s up to weight %d", len(members), spec.name, max_weight)
    return members


def count_profiles(partitions: Iterable[ColouredPartition]) -> Counter:
    return Counter(p.profile() for p in partitions)


def series_from_partitions(partitions: Iterable[ColouredPartition], trunc: int) -> QSeries:
    """Σ colour-monomial · q^weight over the given partitions (weight < trunc)."""
    terms: dict[int, dict] = {}
    for p in partitions:
        if p.weight < trunc:
            row = terms.setdefault(p.weight, {})
            row[p.monomial] = row.get(p.monomial, 0) + 1
    return QSeries.from_poly(trunc, {n: CoeffPoly(row) for n, row in terms.items()})


def _colour_schedule(spec: EnumSpec) -> list[Colour]:
    """Colours in an order where k_y is settled before k_x whenever x may be followed by k_y."""
    graph = {
        x: {y for y in spec.colours if y != x and spec.matrix.gap(x, y) == 0}
        for x in spec.colours
    }
    try:
        return list(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as e:
        raise ValueError(f"Zero entries of {spec.name} admit a cycle of equal parts: {e.args[1]}") from None


def generating_series(spec: EnumSpec, trunc: int) -> QSeries:
    """
    Σ over members of weight < trunc of a^#a b^#b c^#c d^#d q^weight.

    S(v,x), the series of valid tails headed by v_x, satisfies
        S(v,x) = x q^v (1 + Σ_y Σ_{v' <= v - M[x][y]} S(v',y))
    with the diagonal self-loop (M[x][x] = 0) solved by dividing by 1 - x q^v.
    """
    if trunc < 1:
        raise ValueError(f"trunc must be >= 1, got {trunc}")
    if spec.extra is not None:
        return series_from_partitions(enumerate_partitions(spec, trunc - 1), trunc)

    top = trunc - 1 if spec.max_part is None else min(spec.max_part, trunc - 1)
    schedule = _colour_schedule(spec)
    one = QSeries.one(trunc)
    zero = QSeries.zero(trunc)
    # cumulative[y][w] = Σ_{v' <= w} S(v', y)
    cumulative: dict[Colour, list[QSeries]] = {y: [zero] for y in spec.colours}

    for v in range(1, top + 1):
        heads: dict[Colour, QSeries] = {}
        for x in schedule:
            if not spec.allows_value(v, x):
                heads[x] = zero
                continue
            tails = one
            for y in spec.colours:
                w = v - spec.matrix.gap(x, y)
                if w <= 0:
                    continue
                if w < v:
                    tails = tails + cumulative[y][w]
                else:
                    tails = tails + cumulative[y][v - 1]
                    if y != x:
                        tails = tails + heads[y]
            head = tails.shift(v, x.monomial)
            if spec.matrix.gap(x, x) == 0:
                head = head.div_binomial(CoeffPoly.monomial(x.monomial), v)
            heads[x] = head
        for y in spec.colours:
            cumulative[y].append(cumulative[y][v - 1] + heads[y])

    total = one
    for y in spec.colours:
        total = total + cumulative[y][top]
    return total


# ── Dilations & Relabelling ─────────────────────────────────

def dilate_partition(p: ColouredPartition, rule: DilationRule) -> ColouredPartition:
    """Rewrite every part k_x as (scale·k + offset)_x; colours and order kept."""
    parts = []
    for x in p.parts:
        if x.colour not in rule:
            raise UnknownColour(f"No dilation given for colour {x.colour.value}")
        value = rule[x.colour](x.value)
        if value < 1:
            raise ValueError(f"Dilation sends {x} to non-positive value {value}")
        parts.append(ColouredPart(value, x.colour))
    return ColouredPartition(tuple(parts))


def dilate_spec(spec: EnumSpec, rule: DilationRule, name: str | None = None) -> EnumSpec:
    """
    The family of dilated partitions: entry (x,y) becomes m·M[x][y] + s_x − s_y.

    The largest-part bound is dropped; dilated bounds differ per colour.
    """
    scales = {rule[c].scale for c in spec.colours}
    if len(scales) != 1:
        raise ValueError(f"Dilation needs one common scale, got {sorted(scales)}")
    m = scales.pop()
    if m < 1:
        raise ValueError(f"Dilation scale must be >= 1, got {m}")
    rows = []
    for x in spec.colours:
        rows.append(tuple(m * spec.matrix.gap(x, y) + rule[x].offset - rule[y].offset for y in spec.colours))
    classes = {}
    for c in spec.colours:
        modulus, residue = spec.value_classes.get(c, (1, 0))
        classes[c] = (m * modulus, (m * residue + rule[c].offset) % (m * modulus))
    return EnumSpec(
        name=name or f"{spec.name}-dil{m}",
        matrix=GapMatrix(spec.colours, tuple(rows)),
        min_part={c: rule[c](spec.minimum(c)) for c in spec.colours},
        max_part=None,
        value_classes=classes,
    )


def rule_as_substitution(rule: DilationRule) -> tuple[int, dict[str, ColourImage]]:
    """The generating-function side of a dilation: q → q^m, x → x·q^offset."""
    scales = {aff.scale for aff in rule.values()}
    if len(scales) != 1:
        raise ValueError(f"Dilation needs one common scale, got {sorted(scales)}")
    mapping = {c.slot: ColourImage(1, c.monomial, aff.offset) for c, aff in rule.items() if aff.offset}
    return scales.pop(), mapping


_TILDE_RELABEL = {Colour.AT: (Colour.D, -1), Colour.BT: (Colour.A, -1), Colour.CT: (Colour.C, 0)}


def relabel_tilde(p: ColouredPartition) -> ColouredPartition:
    """k_at → (k−1)_d, k_bt → (k−1)_a, k_ct → k_c."""
    parts = []
    for x in p.parts:
        if x.colour not in _TILDE_RELABEL:
            raise UnknownColour(f"Part {x} is not tilde-coloured")
        colour, shift = _TILDE_RELABEL[x.colour]
        parts.append(ColouredPart(x.value + shift, colour))
    return ColouredPartition(tuple(parts))
