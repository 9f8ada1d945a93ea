"""
WWLab — Truncated q-Series Engine

Exact arithmetic on q-power series truncated at a fixed order, whose
coefficients are integer Laurent polynomials in the colour symbols a, b, c, d.

Storage is sparse: a coefficient is a dict from exponent 4-tuples to nonzero
ints, and a series is a tuple of such dicts indexed by the power of q. All
values are immutable after construction.

Text form:   1 + (a+c+d)*q + (a*d)*q^2 + O(q^3)
JSON form:   {"trunc": 3, "coeffs": [[[[0,0,0,0], 1]], [[[1,0,0,0], 1], ...], ...]}

Within a coefficient, monomials print by total degree, then alphabetically
(a+c+d, a*c+a*d+b^2+c^2+c*d), so the constant term comes first.
"""

from __future__ import annotations

import logging
import re
from typing import Iterable, Iterator, Mapping, NamedTuple

from core import NegativeQExponent, NotAUnit, SubstitutionSyntaxError, TruncationMismatch

logger = logging.getLogger("wwlab.qseries")

SYMBOLS = ("a", "b", "c", "d")

_Key = tuple[int, int, int, int]
_Dict = dict[_Key, int]
_ONE_KEY: _Key = (0, 0, 0, 0)


# ── Monomials ────────────────────────────────────────────────

class ColourMonomial(NamedTuple):
    """a^exp_a · b^exp_b · c^exp_c · d^exp_d, negative exponents allowed."""

    exp_a: int = 0
    exp_b: int = 0
    exp_c: int = 0
    exp_d: int = 0

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> "ColourMonomial":
        if name not in SYMBOLS:
            raise SubstitutionSyntaxError(f"Unknown colour symbol: '{name}'")
        exps = [0, 0, 0, 0]
        exps[SYMBOLS.index(name)] = power
        return cls(*exps)

    def times(self, other: "ColourMonomial") -> "ColourMonomial":
        return ColourMonomial(*(x + y for x, y in zip(self, other)))

    def power(self, n: int) -> "ColourMonomial":
        return ColourMonomial(*(x * n for x in self))

    @property
    def degree(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        factors = []
        for name, exp in zip(SYMBOLS, self):
            if exp == 1:
                factors.append(name)
            elif exp != 0:
                factors.append(f"{name}^{exp}")
        return "*".join(factors) if factors else "1"


ONE = ColourMonomial()


def _order_key(key: _Key) -> tuple:
    # Total degree first, then exponent vectors in descending lex order,
    # which lists monomials alphabetically: a+c+d, a*c+a*d+b^2+c^2+c*d.
    return (sum(key), tuple(-e for e in key))


def _format_term(key: _Key, coeff: int) -> str:
    mono = str(ColourMonomial(*key))
    if mono == "1":
        return str(coeff)
    if coeff == 1:
        return mono
    if coeff == -1:
        return f"-{mono}"
    return f"{coeff}*{mono}"


def _mul_key(x: _Key, y: _Key) -> _Key:
    return (x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3])


# ── Coefficient Polynomials ─────────────────────────────────

class CoeffPoly:
    """A finite integer combination of colour monomials; never stores zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        self._terms: _Dict = {}
        for mono, coeff in (terms or {}).items():
            if coeff:
                self._terms[tuple(mono)] = self._terms.get(tuple(mono), 0) + coeff
        self._terms = {k: v for k, v in self._terms.items() if v}

    @classmethod
    def _wrap(cls, terms: _Dict) -> "CoeffPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def constant(cls, value: int) -> "CoeffPoly":
        return cls._wrap({_ONE_KEY: value} if value else {})

    @classmethod
    def monomial(cls, mono: ColourMonomial = ONE, coeff: int = 1) -> "CoeffPoly":
        return cls._wrap({tuple(mono): coeff} if coeff else {})

    @classmethod
    def symbol(cls, name: str) -> "CoeffPoly":
        return cls.monomial(ColourMonomial.symbol(name))

    # ── Inspection ───────────────────────────────────────

    def terms(self) -> Iterator[tuple[ColourMonomial, int]]:
        """Terms in canonical print order."""
        for key in sorted(self._terms, key=_order_key):
            yield ColourMonomial(*key), self._terms[key]

    def raw(self) -> _Dict:
        return dict(self._terms)

    def coefficient(self, mono: ColourMonomial) -> int:
        return self._terms.get(tuple(mono), 0)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ONE_KEY}

    def constant_term(self) -> int:
        return self._terms.get(_ONE_KEY, 0)

    def single_term(self) -> tuple[ColourMonomial, int] | None:
        if len(self._terms) != 1:
            return None
        (key, coeff), = self._terms.items()
        return ColourMonomial(*key), coeff

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ── Arithmetic ───────────────────────────────────────

    def __add__(self, other) -> "CoeffPoly":
        other = _as_poly(other)
        out = dict(self._terms)
        _accumulate(out, other._terms)
        return CoeffPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "CoeffPoly":
        return CoeffPoly._wrap({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "CoeffPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "CoeffPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "CoeffPoly":
        other = _as_poly(other)
        out: _Dict = {}
        for kx, vx in self._terms.items():
            for ky, vy in other._terms.items():
                key = _mul_key(kx, ky)
                out[key] = out.get(key, 0) + vx * vy
        return CoeffPoly._wrap({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CoeffPoly.constant(other)
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ── Formats ──────────────────────────────────────────

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for mono, coeff in self.terms():
            text = _format_term(tuple(mono), coeff)
            out += text if not out or text.startswith("-") else "+" + text
        return out

    def __repr__(self) -> str:
        return f"CoeffPoly({self})"

    def to_json(self) -> list:
        return [[list(mono), coeff] for mono, coeff in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable) -> "CoeffPoly":
        return cls({tuple(mono): coeff for mono, coeff in data})


def _as_poly(value) -> CoeffPoly:
    if isinstance(value, CoeffPoly):
        return value
    if isinstance(value, int):
        return CoeffPoly.constant(value)
    if isinstance(value, ColourMonomial):
        return CoeffPoly.monomial(value)
    raise TypeError(f"Cannot use {type(value).__name__} as a coefficient")


def _accumulate(target: _Dict, source: _Dict, scale: int = 1, key_shift: _Key | None = None):
    """target += scale · key_shift · source, dropping cancelled terms."""
    for key, coeff in source.items():
        if key_shift is not None:
            key = _mul_key(key, key_shift)
        value = target.get(key, 0) + scale * coeff
        if value:
            target[key] = value
        else:
            target.pop(key, None)


# ── Substitution Rules ──────────────────────────────────────

class ColourImage(NamedTuple):
    """Right side of one substitution `x := scalar · monomial · q^q_shift`."""

    scalar: int = 1
    monomial: ColourMonomial = ONE
    q_shift: int = 0

    @classmethod
    def of(cls, name: str | None = None, q_shift: int = 0, scalar: int = 1) -> "ColourImage":
        mono = ColourMonomial.symbol(name) if name else ONE
        return cls(scalar, mono, q_shift)

    def __str__(self) -> str:
        parts = []
        if self.scalar != 1 or (self.monomial == ONE and not self.q_shift):
            parts.append(str(self.scalar))
        if self.monomial != ONE:
            parts.append(str(self.monomial))
        if self.q_shift:
            parts.append("q" if self.q_shift == 1 else f"q^{self.q_shift}")
        return "*".join(parts)


_FACTOR_RE = re.compile(r"^(?:(?P<int>-?\d+)|(?P<sym>[abcdq])(?:\^(?P<exp>-?\d+))?)$")


def parse_colour_image(text: str) -> ColourImage:
    """Parse `2*a*q^-1`, `c`, `1`, `0` into a ColourImage."""
    scalar, mono, shift = 1, ONE, 0
    body = text.replace(" ", "")
    if not body:
        raise SubstitutionSyntaxError("Empty substitution expression")
    if body.startswith("-") and not body[1:2].isdigit():
        scalar, body = -1, body[1:]
    for factor in body.split("*"):
        match = _FACTOR_RE.match(factor)
        if not match:
            raise SubstitutionSyntaxError(f"Cannot parse factor '{factor}' in '{text}'")
        if match["int"] is not None:
            scalar *= int(match["int"])
            continue
        exp = int(match["exp"]) if match["exp"] is not None else 1
        if match["sym"] == "q":
            shift += exp
        else:
            mono = mono.times(ColourMonomial.symbol(match["sym"], exp))
    return ColourImage(scalar, mono, shift)


def parse_substitution(text: str) -> tuple[str, ColourImage]:
    """Parse one `VAR=EXPR` rule from the command line."""
    if "=" not in text:
        raise SubstitutionSyntaxError(f"Expected VAR=EXPR, got '{text}'")
    var, expr = (s.strip() for s in text.split("=", 1))
    if var not in SYMBOLS:
        raise SubstitutionSyntaxError(f"Unknown colour variable '{var}' in '{text}'")
    return var, parse_colour_image(expr)


# ── Truncated Series ────────────────────────────────────────

class QSeries:
    """A q-power series known exactly below q^trunc."""

    __slots__ = ("trunc", "_coeffs")

    def __init__(self, trunc: int, coeffs: Iterable = ()):
        if trunc < 0:
            raise ValueError(f"Truncation order must be >= 0, got {trunc}")
        self.trunc = trunc
        rows: list[_Dict] = []
        for poly in coeffs:
            if len(rows) == trunc:
                break
            rows.append(_as_poly(poly).raw())
        rows.extend({} for _ in range(trunc - len(rows)))
        self._coeffs: tuple[_Dict, ...] = tuple(rows)

    @classmethod
    def _wrap(cls, trunc: int, rows: list[_Dict]) -> "QSeries":
        series = cls.__new__(cls)
        series.trunc = trunc
        series._coeffs = tuple(rows)
        return series

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls._wrap(trunc, [{} for _ in range(trunc)])

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls.monomial(trunc)

    @classmethod
    def monomial(cls, trunc: int, mono: ColourMonomial = ONE, q_exp: int = 0, coeff: int = 1) -> "QSeries":
        if q_exp < 0:
            raise NegativeQExponent(f"q^{q_exp} is not a power series term")
        rows: list[_Dict] = [{} for _ in range(trunc)]
        if q_exp < trunc and coeff:
            rows[q_exp][tuple(mono)] = coeff
        return cls._wrap(trunc, rows)

    @classmethod
    def from_poly(cls, trunc: int, poly: Mapping[int, CoeffPoly | int]) -> "QSeries":
        """Series from a finite {q-exponent: coefficient} map."""
        rows: list[_Dict] = [{} for _ in range(trunc)]
        for n, coeff in poly.items():
            if n < 0:
                raise NegativeQExponent(f"q^{n} is not a power series term")
            if n < trunc:
                _accumulate(rows[n], _as_poly(coeff).raw())
        return cls._wrap(trunc, rows)

    # ── Inspection ───────────────────────────────────────

    @property
    def coeffs(self) -> tuple[CoeffPoly, ...]:
        return tuple(CoeffPoly._wrap(dict(row)) for row in self._coeffs)

    def coefficient(self, n: int) -> CoeffPoly:
        if not 0 <= n < self.trunc:
            raise IndexError(f"q^{n} outside 0..{self.trunc - 1}")
        return CoeffPoly._wrap(dict(self._coeffs[n]))

    def nnz(self) -> int:
        return sum(len(row) for row in self._coeffs)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def has_unit_constant(self) -> bool:
        return self.trunc > 0 and self._coeffs[0] == {_ONE_KEY: 1}

    def _check(self, other: "QSeries"):
        if not isinstance(other, QSeries):
            raise TypeError(f"Expected QSeries, got {type(other).__name__}")
        if other.trunc != self.trunc:
            raise TruncationMismatch(f"Truncation orders differ: O(q^{self.trunc}) vs O(q^{other.trunc})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.trunc, tuple(frozenset(row.items()) for row in self._coeffs)))

    # ── Ring Operations ──────────────────────────────────

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        rows = [dict(row) for row in self._coeffs]
        for row, extra in zip(rows, other._coeffs):
            _accumulate(row, extra)
        return QSeries._wrap(self.trunc, rows)

    def __neg__(self) -> "QSeries":
        return QSeries._wrap(self.trunc, [{k: -v for k, v in row.items()} for row in self._coeffs])

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        rows = [dict(row) for row in self._coeffs]
        for row, extra in zip(rows, other._coeffs):
            _accumulate(row, extra, scale=-1)
        return QSeries._wrap(self.trunc, rows)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, CoeffPoly, ColourMonomial)):
            return self.scale(_as_poly(other))
        self._check(other)
        left, right = self._coeffs, other._coeffs
        if self.nnz() > other.nnz():
            left, right = right, left
        n_max = self.trunc
        rows: list[_Dict] = [{} for _ in range(n_max)]
        for i, row_i in enumerate(left):
            for key_i, coeff_i in row_i.items():
                for j in range(n_max - i):
                    if right[j]:
                        _accumulate(rows[i + j], right[j], scale=coeff_i, key_shift=key_i)
        return QSeries._wrap(n_max, rows)

    __rmul__ = __mul__

    def scale(self, poly: CoeffPoly) -> "QSeries":
        """Multiply every coefficient by a CoeffPoly."""
        if not poly:
            return QSeries.zero(self.trunc)
        rows: list[_Dict] = []
        for row in self._coeffs:
            out: _Dict = {}
            for key, coeff in poly.raw().items():
                _accumulate(out, row, scale=coeff, key_shift=key)
            rows.append(out)
        return QSeries._wrap(self.trunc, rows)

    def shift(self, q_exp: int, mono: ColourMonomial = ONE, coeff: int = 1) -> "QSeries":
        """
        Multiply by coeff · mono · q^q_exp.

        A negative q_exp lowers the truncation order by |q_exp| and requires
        the vacated low coefficients to be zero.
        """
        key = tuple(mono)
        if q_exp >= 0:
            rows: list[_Dict] = [{} for _ in range(min(q_exp, self.trunc))]
            for row in self._coeffs[: self.trunc - q_exp]:
                rows.append({_mul_key(k, key): coeff * v for k, v in row.items()} if coeff else {})
            return QSeries._wrap(self.trunc, rows)
        drop = -q_exp
        if any(self._coeffs[:drop]):
            raise NegativeQExponent(f"Multiplying by q^{q_exp} would create negative powers of q")
        rows = [{_mul_key(k, key): coeff * v for k, v in row.items()} if coeff else {}
                for row in self._coeffs[drop:]]
        return QSeries._wrap(max(self.trunc - drop, 0), rows)

    def truncate(self, trunc: int) -> "QSeries":
        """Explicit re-truncation to a lower (or equal) order."""
        if trunc > self.trunc:
            raise TruncationMismatch(f"Cannot extend O(q^{self.trunc}) to O(q^{trunc})")
        return QSeries._wrap(trunc, [dict(row) for row in self._coeffs[:trunc]])

    def mul_binomial(self, poly: CoeffPoly, q_exp: int, sign: int = -1) -> "QSeries":
        """Multiply by (1 + sign · poly · q^q_exp), q_exp >= 0."""
        rows = [dict(row) for row in self._coeffs]
        for n in range(q_exp, self.trunc):
            src = self._coeffs[n - q_exp]
            if src:
                for key, coeff in poly.raw().items():
                    _accumulate(rows[n], src, scale=sign * coeff, key_shift=key)
        return QSeries._wrap(self.trunc, rows)

    def div_binomial(self, poly: CoeffPoly, q_exp: int, sign: int = -1) -> "QSeries":
        """Divide by the unit (1 + sign · poly · q^q_exp), q_exp >= 1."""
        if q_exp < 1:
            raise NotAUnit(f"(1{'+' if sign > 0 else '-'}({poly})) is not a unit")
        rows = [dict(row) for row in self._coeffs]
        for n in range(q_exp, self.trunc):
            src = rows[n - q_exp]
            if src:
                for key, coeff in poly.raw().items():
                    _accumulate(rows[n], src, scale=-sign * coeff, key_shift=key)
        return QSeries._wrap(self.trunc, rows)

    # ── Formats ──────────────────────────────────────────

    def __str__(self) -> str:
        pieces = []
        for n, row in enumerate(self._coeffs):
            if not row:
                continue
            poly = CoeffPoly._wrap(row)
            if n == 0:
                pieces.append(str(poly) if poly.is_constant() else f"({poly})")
            else:
                pieces.append(f"({poly})*q" if n == 1 else f"({poly})*q^{n}")
        pieces.append(f"O(q^{self.trunc})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"QSeries({self})"

    def to_json(self) -> dict:
        return {
            "trunc": self.trunc,
            "coeffs": [CoeffPoly._wrap(row).to_json() for row in self._coeffs],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QSeries":
        return cls(data["trunc"], [CoeffPoly.from_json(row) for row in data["coeffs"]])


# ── Operations ──────────────────────────────────────────────

def add(s1: QSeries, s2: QSeries) -> QSeries:
    return s1 + s2


def mul(s1: QSeries, s2: QSeries) -> QSeries:
    return s1 * s2


def divide(num: QSeries, den: QSeries) -> QSeries:
    """num / den by long division; den must have constant term exactly 1."""
    num._check(den)
    if not den.has_unit_constant():
        raise NotAUnit(f"Constant term {den.coefficient(0) if den.trunc else 0} is not 1")
    tail = [(i, key, coeff) for i, row in enumerate(den._coeffs) if i for key, coeff in row.items()]
    rows: list[_Dict] = []
    for n in range(num.trunc):
        out = dict(num._coeffs[n])
        for i, key, coeff in tail:
            if i > n:
                continue
            if rows[n - i]:
                _accumulate(out, rows[n - i], scale=-coeff, key_shift=key)
        rows.append(out)
    return QSeries._wrap(num.trunc, rows)


def invert_unit(s: QSeries) -> QSeries:
    """t with s·t = 1 up to s.trunc; refuses non-unit constant terms."""
    return divide(QSeries.one(s.trunc), s)


def _factor_coeff(coeff) -> CoeffPoly:
    poly = _as_poly(coeff)
    if poly.single_term() is None and poly:
        raise ValueError(f"Pochhammer base must be a single term, got ({poly})")
    return poly


def _exponents(start_exp: int, step: int, n_factors: int | None, trunc: int) -> list[int]:
    if step < 1:
        raise ValueError(f"Pochhammer step must be positive, got {step}")
    if start_exp < 0:
        raise ValueError(f"Pochhammer start exponent must be >= 0, got {start_exp}")
    if n_factors is None:
        if start_exp == 0:
            raise ValueError("An infinite product starting at q^0 does not truncate")
        return list(range(start_exp, max(trunc, start_exp), step))
    if n_factors < 0:
        raise ValueError(f"Number of factors must be >= 0, got {n_factors}")
    return [start_exp + i * step for i in range(n_factors)]


def pochhammer(coeff, start_exp: int, step: int, n_factors: int | None, trunc: int) -> QSeries:
    """
    ∏ (1 − coeff · q^(start_exp + i·step)) over i < n_factors, truncated.

    n_factors=None is the infinite product; factors at or past q^trunc are
    omitted, so start_exp must then be >= 1.
    """
    return pochhammer_multiply(QSeries.one(trunc), coeff, start_exp, step, n_factors)


def pochhammer_multiply(s: QSeries, coeff, start_exp: int, step: int, n_factors: int | None) -> QSeries:
    """s · (coeff q^start_exp; q^step)_n_factors, one binomial factor at a time."""
    poly = _factor_coeff(coeff)
    result = s
    for exp in _exponents(start_exp, step, n_factors, s.trunc):
        if exp < s.trunc:
            result = result.mul_binomial(poly, exp)
    return result


def pochhammer_divide(s: QSeries, coeff, start_exp: int, step: int, n_factors: int | None) -> QSeries:
    """s / (coeff q^start_exp; q^step)_n_factors, one unit factor at a time."""
    poly = _factor_coeff(coeff)
    result = s
    for exp in _exponents(start_exp, step, n_factors, s.trunc):
        if exp == 0 and poly:
            raise NotAUnit(f"Factor (1-({poly})) is not a unit")
        if exp < s.trunc and poly:
            result = result.div_binomial(poly, exp)
    return result


def substitute_colours(s: QSeries, mapping: Mapping[str, ColourImage], dilation: int = 1) -> QSeries:
    """
    Rewrite every term a^i b^j c^k d^l q^n under q → q^dilation and
    x → scalar · monomial · q^shift for each mapped symbol x.

    The result keeps s.trunc; terms landing at or beyond it are dropped.
    Exactness below trunc is the caller's contract: no term of s at or past
    q^trunc may land below it (true for every dilation that does not
    decrease part sizes).
    """
    if dilation < 1:
        raise ValueError(f"Dilation factor must be >= 1, got {dilation}")
    for var in mapping:
        if var not in SYMBOLS:
            raise SubstitutionSyntaxError(f"Unknown colour variable '{var}'")
    images = [mapping.get(var, ColourImage(1, ColourMonomial.symbol(var), 0)) for var in SYMBOLS]
    rows: list[_Dict] = [{} for _ in range(s.trunc)]
    for n, row in enumerate(s._coeffs):
        for key, coeff in row.items():
            q_exp = dilation * n
            new_key = list(_ONE_KEY)
            value = coeff
            for exp, image in zip(key, images):
                if not exp:
                    continue
                if image.scalar == 0:
                    if exp < 0:
                        raise ZeroDivisionError(f"Substituting 0 into a negative power in ({ColourMonomial(*key)})")
                    value = 0
                    break
                if exp < 0 and abs(image.scalar) != 1:
                    raise ValueError(f"Non-integral coefficient from {image.scalar}^{exp}")
                value *= image.scalar ** abs(exp)
                q_exp += exp * image.q_shift
                for pos, e in enumerate(image.monomial):
                    new_key[pos] += exp * e
            if not value:
                continue
            if q_exp < 0:
                logger.debug("Substitution sends q^%d term (%s) to q^%d", n, ColourMonomial(*key), q_exp)
                raise NegativeQExponent(
                    f"Term ({ColourMonomial(*key)})*q^{n} becomes a multiple of q^{q_exp}"
                )
            if q_exp < s.trunc:
                _accumulate(rows[q_exp], {tuple(new_key): value})
    return QSeries._wrap(s.trunc, rows)


def first_mismatch(s1: QSeries, s2: QSeries) -> tuple[int, CoeffPoly, CoeffPoly] | None:
    """Lowest q-power at which two series differ, or None."""
    s1._check(s2)
    for n, (x, y) in enumerate(zip(s1._coeffs, s2._coeffs)):
        if x != y:
            return n, CoeffPoly._wrap(dict(x)), CoeffPoly._wrap(dict(y))
    return None


def series_sum(terms: Iterable[QSeries], trunc: int) -> QSeries:
    total = QSeries.zero(trunc)
    for term in terms:
        total = total + term
    return total


# ── Euler Expansion ─────────────────────────────────────────

def q_binomial2(m: int) -> int:
    """binom(m, 2), zero for m in {0, 1}."""
    return m * (m - 1) // 2 if m > 1 else 0


def euler_partial_sum(n_max: int, trunc: int) -> QSeries:
    """Σ_{n ≤ n_max} x^n q^binom(n,2) / (q;q)_n with x = a·q."""
    a = ColourMonomial.symbol("a")
    total = QSeries.zero(trunc)
    for n in range(n_max + 1):
        exp = n + q_binomial2(n)
        if exp >= trunc:
            break
        term = QSeries.monomial(trunc, a.power(n), exp)
        total = total + pochhammer_divide(term, 1, 1, 1, n)
    return total


def euler_product(trunc: int) -> QSeries:
    """(−x;q)_∞ with x = a·q, truncated."""
    return pochhammer(CoeffPoly.monomial(ColourMonomial.symbol("a"), -1), 1, 1, None, trunc)
