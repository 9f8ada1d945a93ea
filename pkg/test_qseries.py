"""Tests for the truncated q-series engine."""

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from core import NegativeQExponent, NotAUnit, SubstitutionSyntaxError, TruncationMismatch
from core.qseries import (
    CoeffPoly,
    ColourImage,
    ColourMonomial,
    QSeries,
    divide,
    euler_partial_sum,
    euler_product,
    first_mismatch,
    invert_unit,
    parse_colour_image,
    parse_substitution,
    pochhammer,
    substitute_colours,
)

a, b, c, d = (CoeffPoly.symbol(x) for x in "abcd")


def series(trunc, **coeffs):
    """series(4, q0=1, q1=a) -> 1 + a q + O(q^4)"""
    return QSeries.from_poly(trunc, {int(k[1:]): v for k, v in coeffs.items()})


# ── Strategies ───────────────────────────────────────────────

monomials = st.tuples(*(st.integers(0, 2),) * 4).map(lambda t: ColourMonomial(*t))
polys = st.dictionaries(monomials, st.integers(-3, 3), max_size=3).map(CoeffPoly)
TRUNC = 5


def series_strategy(unit=False):
    def build(rows):
        if unit:
            rows = [CoeffPoly.constant(1), *rows[1:]]
        return QSeries(TRUNC, rows)
    return st.lists(polys, min_size=TRUNC, max_size=TRUNC).map(build)


# ── Formatting ───────────────────────────────────────────────

def test_product_of_binomials_prints_canonically():
    s = QSeries.one(3).mul_binomial(a, 1, sign=+1).mul_binomial(d, 1, sign=+1)
    assert str(s) == "1 + (a+d)*q + (a*d)*q^2 + O(q^3)"


def test_monomials_print_by_degree_then_alphabetically():
    poly = a * c + a * d + b * b + c * c + c * d
    assert str(poly) == "a*c+a*d+b^2+c^2+c*d"
    assert str(a + c + d) == "a+c+d"
    assert str(2 * c - 1) == "-1+2*c"


def test_zero_series_prints_only_the_order():
    assert str(QSeries.zero(3)) == "O(q^3)"


def test_json_form_keeps_trunc_and_terms():
    s = series(3, q0=1, q1=a + c + d, q2=a * d)
    data = s.to_json()
    assert data["trunc"] == 3
    assert QSeries.from_json(data) == s


# ── Arithmetic ───────────────────────────────────────────────

def test_adding_zero_is_identity():
    s = series(4, q0=1, q1=a, q3=b * c)
    assert s + QSeries.zero(4) == s


def test_geometric_series():
    s = QSeries.one(4).div_binomial(b, 1)
    assert str(s) == "1 + (b)*q + (b^2)*q^2 + (b^3)*q^3 + O(q^4)"
    assert divide(QSeries.one(4), QSeries.one(4).mul_binomial(b, 1)) == s


def test_geometric_series_times_its_binomial_is_one():
    geometric = QSeries.one(10).div_binomial(c, 1)
    assert geometric.mul_binomial(c, 1) == QSeries.one(10)
    assert geometric * QSeries.one(10).mul_binomial(c, 1) == QSeries.one(10)


def test_one_over_one():
    assert invert_unit(QSeries.one(6)) == QSeries.one(6)


def test_non_unit_constant_is_refused():
    with pytest.raises(NotAUnit):
        invert_unit(series(3, q0=1 - b, q1=a))


def test_different_truncations_do_not_mix():
    with pytest.raises(TruncationMismatch):
        QSeries.one(3) + QSeries.one(4)


def test_negative_shift_lowers_trunc():
    s = series(5, q2=a, q3=b)
    assert s.shift(-2) == series(3, q0=a, q1=b)
    with pytest.raises(NegativeQExponent):
        s.shift(-3)


def test_truncate_drops_high_terms():
    s = series(5, q0=1, q2=a, q4=b)
    assert s.truncate(3) == series(3, q0=1, q2=a)


def test_first_mismatch_reports_lowest_power():
    left = series(4, q0=1, q2=a)
    right = series(4, q0=1, q2=d, q3=b)
    n, x, y = first_mismatch(left, right)
    assert (n, x, y) == (2, a, d)
    assert first_mismatch(left, left) is None


@given(series_strategy(), series_strategy(), series_strategy())
@settings(max_examples=40, deadline=None)
def test_ring_laws(s, t, u):
    assert s * t == t * s
    assert (s * t) * u == s * (t * u)
    assert s * (t + u) == s * t + s * u
    assert s - s == QSeries.zero(TRUNC)


@given(series_strategy(unit=True), series_strategy())
@settings(max_examples=40, deadline=None)
def test_division_inverts_multiplication(den, num):
    assert den * invert_unit(den) == QSeries.one(TRUNC)
    assert divide(num * den, den) == num


# ── Pochhammer ───────────────────────────────────────────────

def test_finite_pochhammer():
    expected = series(4, q0=1, q1=-c, q2=-c, q3=c * c)
    assert pochhammer(c, 1, 1, 2, 4) == expected


def test_infinite_pochhammer_on_odd_powers():
    expected = series(5, q0=1, q1=a, q3=a, q4=a * a)
    assert pochhammer(-a, 1, 2, None, 5) == expected


def test_empty_pochhammer_is_one():
    assert pochhammer(c, 1, 1, 0, 5) == QSeries.one(5)


def test_infinite_pochhammer_needs_a_positive_start():
    with pytest.raises(ValueError):
        pochhammer(c, 0, 1, None, 5)


def test_euler_expansion():
    assert euler_partial_sum(12, 12) == euler_product(12)


# ── Substitution ─────────────────────────────────────────────

def test_substitute_b_by_c():
    s = series(3, q0=1, q1=b + c)
    assert substitute_colours(s, {"b": ColourImage.of("c")}) == series(3, q0=1, q1=2 * c)


def test_dilation_with_shifts():
    s = series(6, q2=a * d)
    mapping = {"a": ColourImage.of("a", q_shift=-1), "d": ColourImage.of("d", q_shift=1)}
    assert substitute_colours(s, mapping, dilation=2) == series(6, q4=a * d)


def test_negative_power_of_q_is_an_error():
    s = series(4, q0=a)
    with pytest.raises(NegativeQExponent):
        substitute_colours(s, {"a": ColourImage.of("a", q_shift=-1)}, dilation=2)


def test_setting_a_colour_to_zero_drops_its_terms():
    s = series(3, q0=1, q1=a + c, q2=a * c)
    assert substitute_colours(s, {"a": ColourImage(scalar=0)}) == series(3, q0=1, q1=c)


def test_parse_colour_images():
    assert parse_colour_image("c") == ColourImage.of("c")
    assert parse_colour_image("1") == ColourImage()
    assert parse_colour_image("a*q^-1") == ColourImage.of("a", q_shift=-1)
    assert parse_colour_image("2*a*c^2*q^-1") == ColourImage(2, ColourMonomial(1, 0, 2, 0), -1)
    assert parse_substitution("b=c") == ("b", ColourImage.of("c"))


@pytest.mark.parametrize("text", ["b", "x=c", "b=", "b=e", "b=c*"])
def test_bad_substitutions(text):
    with pytest.raises(SubstitutionSyntaxError):
        parse_substitution(text)
