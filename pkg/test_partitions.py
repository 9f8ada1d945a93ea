"""Tests for coloured partitions, the partition families and the classical oracles."""

import pytest

from core import MembershipError, PartitionSyntaxError, UnknownColour
from core.classical import capparelli_c, capparelli_d, partition_counts, primc_quadruples
from core.families import (
    CAPPARELLI_TILDE_DILATION,
    PRIMC_DILATION,
    capparelli_spec,
    capparelli_tilde_spec,
    m1_spec,
    m2_spec,
    primc_dil2_spec,
    primc_spec,
)
from core.partitions import (
    ColouredPartition,
    count_profiles,
    dilate_partition,
    dilate_spec,
    enumerate_partitions,
    format_partition,
    generating_series,
    is_member,
    parse_partition,
    relabel_tilde,
    require_member,
    series_from_partitions,
    violations,
)
from core.qseries import CoeffPoly, QSeries

a, b, c, d = (CoeffPoly.symbol(x) for x in "abcd")


def strings(partitions):
    return {format_partition(p) for p in partitions}


# ── Grammar ──────────────────────────────────────────────────

def test_parse_and_format_keep_the_written_order():
    text = "8d+8a+6c+5c+3d+1a"
    p = parse_partition(text)
    assert format_partition(p) == text
    assert p.weight == 31
    assert p.largest == 8
    assert p.slot_counts == (2, 0, 2, 2)


def test_empty_partition_is_the_empty_string():
    assert parse_partition("") == ColouredPartition()
    assert format_partition(ColouredPartition()) == ""


def test_tilde_colours_use_two_letters():
    p = parse_partition("4at+2bt+1ct")
    assert format_partition(p) == "4at+2bt+1ct"
    assert p.monomial == (1, 1, 1, 0)


@pytest.mark.parametrize("text", ["8e", "0a", "a", "8d+", "8d++1a", "3x"])
def test_bad_partitions(text):
    with pytest.raises(PartitionSyntaxError):
        parse_partition(text)


# ── Membership ───────────────────────────────────────────────

def test_membership_reads_gap_entries():
    spec = capparelli_spec()
    assert is_member(parse_partition("1d+1a"), spec)
    assert not is_member(parse_partition("1c+1a"), spec)
    assert is_member(ColouredPartition(), spec)


def test_violations_name_the_broken_condition():
    found = violations(parse_partition("2a+1a"), m1_spec())
    assert "C1" in {v.condition for v in found}
    found = violations(parse_partition("5d+5b"), m2_spec())
    assert "C'1" in {v.condition for v in found}


def test_require_member_carries_the_report():
    with pytest.raises(MembershipError) as info:
        require_member(parse_partition("1c+1a"), capparelli_spec(), "λ")
    assert info.value.violations[0].condition == "gap"


def test_colour_outside_the_alphabet():
    with pytest.raises(UnknownColour):
        is_member(parse_partition("1b"), capparelli_spec())


# ── Enumeration ──────────────────────────────────────────────

def test_primc_small_enumeration():
    found = enumerate_partitions(primc_spec(1), 2)
    assert strings(found) == {
        "", "1a", "1b", "1c", "1d", "1b+1b", "1c+1c", "1c+1a", "1d+1a", "1d+1c",
    }
    assert len(found) == 10


def test_capparelli_small_enumeration():
    found = enumerate_partitions(capparelli_spec(2), 2)
    assert strings(found) == {"", "1a", "1c", "1d", "2a", "2c", "2d", "1d+1a"}


def test_enumeration_is_ordered_by_weight():
    weights = [p.weight for p in enumerate_partitions(primc_spec(), 8)]
    assert weights == sorted(weights)


def test_listing_order_within_a_weight():
    found = [format_partition(p) for p in enumerate_partitions(primc_spec(), 2)]
    assert found == [
        "",
        "1d", "1c", "1b", "1a",
        "2d", "2c", "2b", "2a", "1d+1c", "1d+1a", "1c+1c", "1c+1a", "1b+1b",
    ]


def test_max_weight_zero_gives_only_the_empty_partition():
    assert enumerate_partitions(primc_spec(), 0) == [ColouredPartition()]


def test_generating_series_of_small_families():
    expected_p = QSeries.from_poly(3, {0: 1, 1: a + b + c + d, 2: b * b + c * c + a * c + a * d + c * d})
    assert generating_series(primc_spec(1), 3) == expected_p
    expected_c = QSeries.from_poly(3, {0: 1, 1: a + c + d, 2: a * d})
    assert generating_series(capparelli_spec(1), 3) == expected_c


def test_tilde_family_at_low_order():
    series = generating_series(capparelli_tilde_spec(2), 3)
    assert series.coefficient(1) == c
    # 2at, 2bt, 2ct; 1ct+1ct breaks the ct,ct gap
    assert series.coefficient(2) == a + b + c


@pytest.mark.parametrize("factory,max_part", [
    (capparelli_spec, 4), (primc_spec, 3), (capparelli_tilde_spec, 5), (primc_dil2_spec, None),
])
def test_transfer_series_matches_listing(factory, max_part):
    spec = factory(max_part) if max_part is not None else factory()
    listed = series_from_partitions(enumerate_partitions(spec, 11), 12)
    assert generating_series(spec, 12) == listed


def test_bijection_stage_families_enumerate_with_their_conditions():
    for spec in (m1_spec(3), m2_spec(3)):
        for p in enumerate_partitions(spec, 9):
            assert is_member(p, spec)


# ── Dilations ────────────────────────────────────────────────

def test_primc_dilation_of_a_partition():
    p = dilate_partition(parse_partition("1d+1c+1b+1a"), PRIMC_DILATION)
    assert [x.value for x in p.parts] == [3, 2, 2, 1]


def test_tilde_dilation():
    assert format_partition(dilate_partition(parse_partition("2at"), CAPPARELLI_TILDE_DILATION)) == "4at"


def test_dilated_primc_matrix_is_pdil2():
    built = dilate_spec(primc_spec(), PRIMC_DILATION)
    expected = primc_dil2_spec()
    assert built.matrix == expected.matrix
    assert dict(built.min_part) == dict(expected.min_part)
    assert dict(built.value_classes) == dict(expected.value_classes)


def test_relabel_tilde():
    source = parse_partition("6at+4bt+1ct")
    assert is_member(source, capparelli_tilde_spec())
    p = relabel_tilde(source)
    assert format_partition(p) == "5d+3a+1c"
    assert is_member(p, capparelli_spec())


# ── Classical Oracles ────────────────────────────────────────

def test_partition_counts():
    assert partition_counts(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_pdil2_counts_ordinary_partitions():
    counts = [0] * 11
    for p in enumerate_partitions(primc_dil2_spec(), 10):
        counts[p.weight] += 1
    assert counts == partition_counts(10)


def test_capparelli_counts_agree():
    assert [capparelli_c(n) for n in range(20)] == [capparelli_d(n) for n in range(20)]


def test_capparelli_small_values():
    # two partitions each of 6 (6, 4+2) and 8 (8, 6+2)
    assert [capparelli_d(n) for n in range(9)] == [1, 0, 1, 1, 1, 1, 2, 1, 2]


def test_remark_quadruples_against_primc_family():
    weight = 8
    family = {}
    for p in enumerate_partitions(primc_spec(), weight):
        na, _, _, nd = p.slot_counts
        key = (p.weight, na, nd)
        family[key] = family.get(key, 0) + 1
    assert dict(primc_quadruples(weight)) == family


def test_profiles_of_small_primc_partitions():
    counts = count_profiles(enumerate_partitions(primc_spec(1), 2))
    assert counts[(2, 1, 0, 2, 0, 0)] == 1
    assert counts[(2, 1, 1, 0, 1, 0)] == 1
    assert sum(counts.values()) == 10
