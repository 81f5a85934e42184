"""Exact truncated power series in ``q`` with Laurent-polynomial-in-``z`` coefficients.

Every series carries its truncation order ``Q``: coefficients of ``q^0 .. q^Q``
are exact, nothing above ``Q`` is stored, and binary operations truncate to
the smaller of the two orders.  Coefficients are Python ``int`` or
``fractions.Fraction`` values, both of which are always in lowest terms.

Products ``(A; q^r)_n`` with a monomial ``A = c z^e q^s`` are built directly in
``q``; a base-``q^2`` factorial is simply ``base=2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Union

Rational = Union[int, Fraction]

__all__ = [
    "Rational",
    "NotAUnit",
    "NoValuationProgress",
    "OrderExceeded",
    "ZeroSubstitution",
    "Monomial",
    "ZLaurent",
    "QSeries",
    "Mismatch",
    "as_rational",
    "monomial",
    "add",
    "mul",
    "scale",
    "invert",
    "pochhammer",
    "qbinomial",
    "sum_valuation",
    "coeff",
    "coeff2",
    "subst_z",
    "z_moment",
    "d2z_at_one",
    "equal_up_to",
    "render_rational",
]


class NotAUnit(ArithmeticError):
    """Raised when inverting a series whose constant term is zero or involves z."""


class NoValuationProgress(ArithmeticError):
    """Raised when a formal infinite sum shows no growth in q-valuation."""


class OrderExceeded(IndexError):
    """Raised when asking for a coefficient beyond a series' truncation order."""


class ZeroSubstitution(ZeroDivisionError):
    """Raised when substituting z = 0 into a series with negative z powers."""


def as_rational(value) -> Rational:
    """Coerce ints, Fractions and strings like ``"3/5"`` to an exact rational."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return as_rational(Fraction(value))
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted; pass a Fraction or a string")
    return as_rational(Fraction(value))


def _div(x: Rational, y: Rational) -> Rational:
    if y == 1:
        return x
    if y == -1:
        return -x
    r = Fraction(x) / y
    return r.numerator if r.denominator == 1 else r


def render_rational(x: Rational) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


@dataclass(frozen=True)
class Monomial:
    """``coeff * z**z_exp * q**q_exp``; used as the argument of q-Pochhammer symbols."""

    coeff: Rational = 1
    z_exp: int = 0
    q_exp: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", as_rational(self.coeff))

    def __mul__(self, other: "Monomial | Rational") -> "Monomial":
        if isinstance(other, Monomial):
            return Monomial(self.coeff * other.coeff, self.z_exp + other.z_exp, self.q_exp + other.q_exp)
        return Monomial(self.coeff * as_rational(other), self.z_exp, self.q_exp)

    __rmul__ = __mul__

    def __truediv__(self, other: "Monomial | Rational") -> "Monomial":
        if not isinstance(other, Monomial):
            other = Monomial(other)
        if other.coeff == 0:
            raise ZeroDivisionError("division by a zero monomial")
        return Monomial(_div(self.coeff, other.coeff), self.z_exp - other.z_exp, self.q_exp - other.q_exp)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.coeff, self.z_exp, self.q_exp)

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            return Monomial(1) / (self ** (-k))
        return Monomial(self.coeff**k, self.z_exp * k, self.q_exp * k)

    def shift(self, q_exp: int) -> "Monomial":
        """Multiply by ``q**q_exp``."""
        return Monomial(self.coeff, self.z_exp, self.q_exp + q_exp)

    @property
    def is_scalar(self) -> bool:
        return self.z_exp == 0 and self.q_exp == 0

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        bits = []
        if self.z_exp:
            bits.append("z" if self.z_exp == 1 else f"z^{self.z_exp}")
        if self.q_exp:
            bits.append("q" if self.q_exp == 1 else f"q^{self.q_exp}")
        if not bits:
            return render_rational(self.coeff)
        if self.coeff == 1:
            return "*".join(bits)
        if self.coeff == -1:
            return "-" + "*".join(bits)
        return "*".join([render_rational(self.coeff)] + bits)


class ZLaurent:
    """Finite-support Laurent polynomial in z with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        self._terms = {int(m): as_rational(c) for m, c in (terms or {}).items() if c != 0}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[int, Rational]) -> "ZLaurent":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Rational) -> "ZLaurent":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, Rational]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Rational]]:
        return iter(sorted(self._terms.items()))

    def __getitem__(self, m: int) -> Rational:
        return self._terms.get(m, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, ZLaurent):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other != 0 else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "ZLaurent") -> "ZLaurent":
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return ZLaurent._wrap(out)

    def __neg__(self) -> "ZLaurent":
        return ZLaurent._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "ZLaurent") -> "ZLaurent":
        return self + (-other)

    def __mul__(self, other: "ZLaurent | Rational") -> "ZLaurent":
        if not isinstance(other, ZLaurent):
            other = ZLaurent.constant(other)
        out: dict[int, Rational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
        return ZLaurent({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    @property
    def is_constant(self) -> bool:
        return all(m == 0 for m in self._terms)

    def evaluate(self, value: Rational) -> Rational:
        value = as_rational(value)
        total: Rational = 0
        for m, c in self._terms.items():
            if m < 0:
                if value == 0:
                    raise ZeroSubstitution("z = 0 substituted into a negative z power")
                total += c * Fraction(1, 1) / Fraction(value) ** (-m)
            else:
                total += c * value**m
        return as_rational(total)

    def moment(self, k: int) -> Rational:
        return sum((c * m**k for m, c in self._terms.items()), 0)

    def render(self) -> str:
        return "[" + ",".join(f"{m}:{render_rational(c)}" for m, c in self.items()) + "]"

    def __repr__(self) -> str:
        return f"ZLaurent({self.render()})"


Row = dict[int, Rational]


def _row_add(dst: Row, src: Row, factor: Rational = 1, z_shift: int = 0) -> None:
    for m, c in src.items():
        key = m + z_shift
        v = dst.get(key, 0) + factor * c
        if v:
            dst[key] = v
        else:
            dst.pop(key, None)


class QSeries:
    """Power series in q truncated at ``order`` (inclusive) with ZLaurent coefficients.

    Instances are treated as immutable; every operation returns a new series.
    """

    __slots__ = ("order", "_rows")

    def __init__(self, order: int, coeffs: Mapping[int, ZLaurent | Mapping[int, Rational] | Rational] | None = None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        rows: dict[int, Row] = {}
        for n, value in (coeffs or {}).items():
            if n < 0:
                raise ValueError("negative q powers are not representable")
            if n > order:
                continue
            if isinstance(value, ZLaurent):
                row = dict(value._terms)
            elif isinstance(value, Mapping):
                row = {int(m): as_rational(c) for m, c in value.items() if c != 0}
            else:
                value = as_rational(value)
                row = {0: value} if value else {}
            if row:
                rows[n] = row
        self._rows = rows

    @classmethod
    def _wrap(cls, order: int, rows: dict[int, Row]) -> "QSeries":
        obj = cls.__new__(cls)
        obj.order = order
        obj._rows = {n: r for n, r in rows.items() if r and n <= order}
        return obj

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls._wrap(order, {})

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls._wrap(order, {0: {0: 1}})

    @classmethod
    def from_monomial(cls, term: Monomial, order: int) -> "QSeries":
        if term.q_exp < 0:
            raise ValueError("negative q powers are not representable")
        if term.coeff == 0 or term.q_exp > order:
            return cls.zero(order)
        return cls._wrap(order, {term.q_exp: {term.z_exp: term.coeff}})

    @classmethod
    def from_sequence(cls, values: Iterable[Rational], order: int) -> "QSeries":
        """z-free series whose q^n coefficient is ``values[n]``."""
        rows = {}
        for n, v in enumerate(values):
            if n > order:
                break
            v = as_rational(v)
            if v:
                rows[n] = {0: v}
        return cls._wrap(order, rows)

    # -- inspection -----------------------------------------------------------

    def coeff(self, n: int) -> ZLaurent:
        if n > self.order:
            raise OrderExceeded(f"coefficient q^{n} requested from a series of order {self.order}")
        if n < 0:
            return ZLaurent()
        return ZLaurent._wrap(dict(self._rows.get(n, {})))

    def coeff2(self, n: int, m: int) -> Rational:
        if n > self.order:
            raise OrderExceeded(f"coefficient q^{n} requested from a series of order {self.order}")
        return self._rows.get(n, {}).get(m, 0)

    def scalar(self, n: int) -> Rational:
        """The q^n coefficient of a z-free series."""
        row = self.coeff(n)
        if not row.is_constant:
            raise ValueError(f"q^{n} coefficient depends on z")
        return row[0]

    def scalars(self) -> list[Rational]:
        return [self.scalar(n) for n in range(self.order + 1)]

    def valuation(self) -> float:
        """Smallest q exponent with a nonzero coefficient (``math.inf`` for zero)."""
        return min(self._rows) if self._rows else math.inf

    @property
    def is_z_free(self) -> bool:
        return all(m == 0 for row in self._rows.values() for m in row)

    def __iter__(self) -> Iterator[tuple[int, ZLaurent]]:
        for n in sorted(self._rows):
            yield n, ZLaurent._wrap(dict(self._rows[n]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.order, frozenset((n, frozenset(r.items())) for n, r in self._rows.items())))

    def render(self) -> str:
        """``c*z^m*q^n + ...`` sorted by (n, m); ``0`` for the zero series."""
        parts = []
        for n in sorted(self._rows):
            for m in sorted(self._rows[n]):
                parts.append(f"{render_rational(self._rows[n][m])}*z^{m}*q^{n}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.order + 1})"

    def __repr__(self) -> str:
        return f"QSeries({self.render()})"

    # -- ring operations ------------------------------------------------------

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise OrderExceeded(f"cannot extend a series of order {self.order} to {order}")
        return QSeries._wrap(order, {n: dict(r) for n, r in self._rows.items() if n <= order})

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, Monomial):
            return QSeries.from_monomial(other, self.order)
        return QSeries(self.order, {0: as_rational(other)})

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        rows = {n: dict(r) for n, r in self._rows.items() if n <= order}
        for n, r in other._rows.items():
            if n <= order:
                _row_add(rows.setdefault(n, {}), r)
        return QSeries._wrap(order, rows)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries._wrap(self.order, {n: {m: -c for m, c in r.items()} for n, r in self._rows.items()})

    def __sub__(self, other) -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSeries":
        return self._coerce(other) - self

    def scale(self, c: Rational) -> "QSeries":
        c = as_rational(c)
        if c == 0:
            return QSeries.zero(self.order)
        return QSeries._wrap(self.order, {n: {m: v * c for m, v in r.items()} for n, r in self._rows.items()})

    def times_monomial(self, term: Monomial) -> "QSeries":
        """Multiply by ``c z^e q^s`` (``s`` may be negative only if the result stays a power series)."""
        if term.coeff == 0:
            return QSeries.zero(self.order)
        s = term.q_exp
        order = self.order if s >= 0 else self.order + s
        if s < 0 and self._rows and min(self._rows) + s < 0:
            raise ValueError("multiplication by a negative q power leaves a non-power series")
        if order < 0:
            raise ValueError("truncation order becomes negative")
        c, e = term.coeff, term.z_exp
        rows = {n + s: {m + e: v * c for m, v in r.items()} for n, r in self._rows.items() if n + s <= order}
        return QSeries._wrap(order, rows)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, Monomial):
            return self.times_monomial(other)
        if not isinstance(other, QSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        a, b = self._rows, other._rows
        if len(a) > len(b):
            a, b = b, a
        rows: dict[int, Row] = {}
        for n1, r1 in a.items():
            if n1 > order:
                continue
            for n2, r2 in b.items():
                n = n1 + n2
                if n > order:
                    continue
                dst = rows.setdefault(n, {})
                for m1, c1 in r1.items():
                    for m2, c2 in r2.items():
                        k = m1 + m2
                        dst[k] = dst.get(k, 0) + c1 * c2
        for dst in rows.values():
            for k in [k for k, v in dst.items() if v == 0]:
                del dst[k]
        return QSeries._wrap(order, rows)

    def __rmul__(self, other) -> "QSeries":
        return self.__mul__(other)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return self * other.invert()
        if isinstance(other, Monomial):
            if other.q_exp != 0:
                raise NotAUnit("division by a monomial carrying q")
            return self.times_monomial(Monomial(_div(1, other.coeff), -other.z_exp, 0))
        c = as_rational(other)
        if c == 0:
            raise ZeroDivisionError("division of a series by zero")
        return self.scale(_div(1, c))

    def __rtruediv__(self, other) -> "QSeries":
        return self._coerce(other) * self.invert()

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.invert() ** (-k)
        out = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def invert(self) -> "QSeries":
        const = self._rows.get(0, {})
        if not const or any(m != 0 for m in const):
            raise NotAUnit("constant term must be a nonzero z-free rational")
        a0 = const[0]
        order = self.order
        rest = {n: r for n, r in self._rows.items() if n > 0}
        inv0 = _div(1, a0)
        out: dict[int, Row] = {0: {0: inv0}}
        for n in range(1, order + 1):
            acc: Row = {}
            for k, rk in rest.items():
                if k > n:
                    continue
                prev = out.get(n - k)
                if not prev:
                    continue
                for m1, c1 in rk.items():
                    for m2, c2 in prev.items():
                        key = m1 + m2
                        acc[key] = acc.get(key, 0) + c1 * c2
            row = {m: -v * inv0 for m, v in acc.items() if v}
            if row:
                out[n] = row
        return QSeries._wrap(order, out)

    # -- multiplying / dividing by a single factor (1 - c z^e q^s) ------------

    def mul_factor(self, term: Monomial) -> "QSeries":
        """Multiply by ``1 - term``."""
        if term.coeff == 0:
            return self
        s = term.q_exp
        if s < 0:
            raise ValueError("factor with negative q power")
        c, e = term.coeff, term.z_exp
        rows = {n: dict(r) for n, r in self._rows.items()}
        if s == 0:
            for n, r in self._rows.items():
                _row_add(rows[n], r, -c, e)
        else:
            for n, r in self._rows.items():
                if n + s <= self.order:
                    _row_add(rows.setdefault(n + s, {}), r, -c, e)
        return QSeries._wrap(self.order, rows)

    def div_factor(self, term: Monomial) -> "QSeries":
        """Divide by ``1 - term``; legal when ``term`` carries q or is a scalar other than 1."""
        if term.coeff == 0:
            return self
        s = term.q_exp
        c, e = term.coeff, term.z_exp
        if s < 0:
            raise NotAUnit("factor with negative q power")
        if s == 0:
            if e != 0:
                raise NotAUnit("1 - c*z^e is not a unit")
            if c == 1:
                raise NotAUnit("division by 1 - 1")
            return self.scale(_div(1, 1 - c))
        rows = {n: dict(r) for n, r in self._rows.items()}
        for n in range(s, self.order + 1):
            prev = rows.get(n - s)
            if prev:
                _row_add(rows.setdefault(n, {}), prev, c, e)
        return QSeries._wrap(self.order, rows)

    def mul_poch(self, term: Monomial, count: int | float, base: int = 1) -> "QSeries":
        out = self
        for factor in _factors(term, count, base, self.order):
            out = out.mul_factor(factor)
        return out

    def div_poch(self, term: Monomial, count: int | float, base: int = 1) -> "QSeries":
        out = self
        for factor in _factors(term, count, base, self.order):
            out = out.div_factor(factor)
        return out

    # -- z operations ---------------------------------------------------------

    def subst_z(self, value: Rational) -> "QSeries":
        value = as_rational(value)
        rows = {}
        for n, r in self._rows.items():
            v = ZLaurent._wrap(r).evaluate(value)
            if v:
                rows[n] = {0: v}
        return QSeries._wrap(self.order, rows)

    def z_moment(self, k: int) -> "QSeries":
        rows = {}
        for n, r in self._rows.items():
            v = sum((c * m**k for m, c in r.items()), 0)
            if v:
                rows[n] = {0: v}
        return QSeries._wrap(self.order, rows)

    def d2z_at_one(self) -> "QSeries":
        rows = {}
        for n, r in self._rows.items():
            v = sum((c * m * (m - 1) for m, c in r.items()), 0)
            if v:
                rows[n] = {0: v}
        return QSeries._wrap(self.order, rows)


def _factors(term: Monomial, count: int | float, base: int, order: int) -> Iterator[Monomial]:
    if base < 1:
        raise ValueError("pochhammer base must be >= 1")
    if count == math.inf or count is None:
        if term.q_exp < 0:
            raise ValueError("infinite product needs a non-negative q exponent")
        k = 0
        while term.q_exp + base * k <= order:
            yield term.shift(base * k)
            k += 1
        return
    if count < 0:
        raise ValueError("negative pochhammer length")
    for k in range(int(count)):
        f = term.shift(base * k)
        if f.q_exp > order:
            return
        yield f


# -- functional API ----------------------------------------------------------


def monomial(c: Rational, z_exp: int, q_exp: int, Q: int) -> QSeries:
    return QSeries.from_monomial(Monomial(c, z_exp, q_exp), Q)


def add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def scale(a: QSeries, c: Rational) -> QSeries:
    return a.scale(c)


def invert(a: QSeries) -> QSeries:
    return a.invert()


@lru_cache(maxsize=4096)
def pochhammer(term: Monomial, count: int | float, base: int, Q: int) -> QSeries:
    """``prod_{k<count} (1 - term * q^(base*k))`` truncated at ``Q``; ``count`` may be ``math.inf``."""
    return QSeries.one(Q).mul_poch(term, count, base)


@lru_cache(maxsize=4096)
def qbinomial(N: int, n: int, base: int, Q: int) -> QSeries:
    """Gaussian binomial ``[N, n]`` in ``q**base``; zero outside ``0 <= n <= N``."""
    if n < 0 or n > N or N < 0:
        return QSeries.zero(Q)
    n = min(n, N - n)
    out = QSeries.one(Q)
    for k in range(1, n + 1):
        out = out.mul_factor(Monomial(1, 0, base * (N - n + k)))
        out = out.div_factor(Monomial(1, 0, base * k))
    return out


def sum_valuation(generator: Callable[[int], QSeries], Q: int, start: int = 0) -> QSeries:
    """Sum ``generator(k)`` for ``k = start, start+1, ...`` until a term has valuation > Q.

    Exactly-zero terms are skipped; ``4*(Q+2)`` of them in a row also end the sum.

    The caller guarantees the valuations are unbounded; if ``4*(Q+2)`` consecutive
    terms fail to raise the best valuation seen so far, the sum is declared divergent.
    """
    total = QSeries.zero(Q)
    best = -1.0
    stalled = zeros = 0
    limit = 4 * (Q + 2)
    k = start
    while True:
        term = generator(k)
        if term.order < Q:
            raise OrderExceeded(f"term {k} has order {term.order} < {Q}")
        v = term.valuation()
        if v == math.inf:
            # an exactly-zero term says nothing about the tail; a long run of them ends the sum
            zeros += 1
            if zeros >= limit:
                return total
            k += 1
            continue
        zeros = 0
        if v > Q:
            return total
        total = total + term.truncate(Q)
        if v > best:
            best = v
            stalled = 0
        else:
            stalled += 1
            if stalled >= limit:
                raise NoValuationProgress(f"{limit} consecutive terms without valuation progress (k={k})")
        k += 1


def coeff(a: QSeries, n: int) -> ZLaurent:
    return a.coeff(n)


def coeff2(a: QSeries, n: int, m: int) -> Rational:
    return a.coeff2(n, m)


def subst_z(a: QSeries, value: Rational) -> QSeries:
    return a.subst_z(value)


def z_moment(a: QSeries, k: int) -> QSeries:
    return a.z_moment(k)


def d2z_at_one(a: QSeries) -> QSeries:
    return a.d2z_at_one()


@dataclass(frozen=True)
class Mismatch:
    n: int
    lhs: ZLaurent
    rhs: ZLaurent


def equal_up_to(a: QSeries, b: QSeries, order: int) -> Mismatch | None:
    """``None`` when ``a`` and ``b`` agree through ``q^order``, else the first difference."""
    if order > a.order or order > b.order:
        raise OrderExceeded(f"comparison order {order} exceeds operand orders {a.order}, {b.order}")
    for n in range(order + 1):
        ra, rb = a._rows.get(n, {}), b._rows.get(n, {})
        if ra != rb:
            return Mismatch(n, ZLaurent._wrap(dict(ra)), ZLaurent._wrap(dict(rb)))
    return None
