"""Exact truncated q-series with coefficients in Z[x, y].

Exponents of q are stored on a quarter grid: the integer key ``e`` stands
for ``q^(e/4)``.  A series carries a precision ``prec`` (also in quarters);
every coefficient with ``e <= prec`` is exact, nothing above it is stored.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Exponent = Union[int, Fraction]


class NonUnitConstantTerm(ValueError):
    pass


class NonConvergentProduct(ValueError):
    pass


def to_quarters(value: Exponent) -> int:
    """Convert a q-exponent to quarter units, rejecting anything off the grid."""
    scaled = Fraction(value) * 4
    if scaled.denominator != 1:
        raise ValueError(f"exponent {value} is not a multiple of 1/4")
    return int(scaled)


class PolyXY:
    """Sparse polynomial in x, y with integer coefficients. Immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    a, b = key
                    if a < 0 or b < 0:
                        raise ValueError(f"negative marker degree in {key}")
                    clean[(a, b)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "PolyXY":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "PolyXY":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, xdeg: int = 0, ydeg: int = 0) -> "PolyXY":
        return cls({(xdeg, ydeg): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, xdeg: int = 0, ydeg: int = 0) -> int:
        return self._terms.get((xdeg, ydeg), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = PolyXY.const(other)
        if not isinstance(other, PolyXY):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "PolyXY":
        return PolyXY._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "PolyXY":
        if isinstance(other, int):
            other = PolyXY.const(other)
        if not isinstance(other, PolyXY):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return PolyXY._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "PolyXY":
        if isinstance(other, int):
            other = PolyXY.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "PolyXY":
        return (-self) + other

    def __mul__(self, other) -> "PolyXY":
        if isinstance(other, int):
            if not other:
                return PolyXY._raw({})
            return PolyXY._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, PolyXY):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyXY":
        result = PolyXY.const(1)
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, x: int = 1, y: int = 1) -> int:
        return sum(c * x**a * y**b for (a, b), c in self._terms.items())

    def specialize(self, x: int | None = None, y: int | None = None) -> "PolyXY":
        """Substitute integer values for some markers."""
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self._terms.items():
            if x is not None:
                c, a = c * x**a, 0
            if y is not None:
                c, b = c * y**b, 0
            out[(a, b)] = out.get((a, b), 0) + c
        return PolyXY(out)

    def __repr__(self) -> str:
        return f"PolyXY({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (a, b), c in sorted(self._terms.items()):
            mono = []
            if a:
                mono.append("x" if a == 1 else f"x^{a}")
            if b:
                mono.append("y" if b == 1 else f"y^{b}")
            body = "*".join(mono)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        sign, text = pieces[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out


ONE = PolyXY.const(1)
ZERO = PolyXY.const(0)
X = PolyXY.monomial(1, 1, 0)
Y = PolyXY.monomial(1, 0, 1)


def poly_mul(a: PolyXY, b: PolyXY) -> PolyXY:
    ta, tb = a._terms, b._terms
    if not ta or not tb:
        return ZERO
    if len(ta) == 1 and len(tb) == 1:
        ((ka, ca),) = ta.items()
        ((kb, cb),) = tb.items()
        return PolyXY._raw({(ka[0] + kb[0], ka[1] + kb[1]): ca * cb})
    out: dict[tuple[int, int], int] = {}
    for (a1, b1), c1 in ta.items():
        for (a2, b2), c2 in tb.items():
            key = (a1 + a2, b1 + b2)
            out[key] = out.get(key, 0) + c1 * c2
    return PolyXY._raw({k: c for k, c in out.items() if c})


def _as_poly(value) -> PolyXY:
    if isinstance(value, PolyXY):
        return value
    if isinstance(value, int):
        return PolyXY.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class QSeries:
    """Truncated power series in q over PolyXY, quarter-exponent grid."""

    __slots__ = ("_coeffs", "prec")

    def __init__(self, coeffs: Mapping[int, PolyXY | int] | None = None, *, prec: int):
        if prec < 0:
            raise ValueError("precision must be non-negative")
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if e < 0:
                    raise ValueError("negative q-exponent")
                if e > prec:
                    continue
                c = _as_poly(c)
                if c:
                    clean[e] = c
        self._coeffs = clean
        self.prec = prec

    @classmethod
    def _raw(cls, coeffs: dict, prec: int) -> "QSeries":
        s = cls.__new__(cls)
        s._coeffs = coeffs
        s.prec = prec
        return s

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls._raw({}, 4 * order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls._raw({0: ONE}, 4 * order)

    @classmethod
    def monomial(cls, coeff: PolyXY | int, exponent: Exponent, order: int) -> "QSeries":
        return cls({to_quarters(exponent): coeff}, prec=4 * order)

    @classmethod
    def from_integral(cls, coeffs: Iterable[PolyXY | int], order: int | None = None) -> "QSeries":
        """Build from a list of coefficients of q^0, q^1, ..."""
        coeffs = list(coeffs)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        return cls({4 * n: c for n, c in enumerate(coeffs)}, prec=4 * order)

    # access -------------------------------------------------------------

    @property
    def order(self) -> int:
        """Largest integer N such that the series is exact through q^N."""
        return self.prec // 4

    def coeff(self, exponent: Exponent) -> PolyXY:
        e = to_quarters(exponent)
        if e > self.prec:
            raise ValueError(f"q^{exponent} lies beyond the truncation order")
        return self._coeffs.get(e, ZERO)

    def quarter_items(self) -> list[tuple[int, PolyXY]]:
        return sorted(self._coeffs.items())

    def integral_coeffs(self, kind=None) -> list:
        """Coefficients of q^0..q^order; ``kind=int`` collapses to integers."""
        out = []
        for n in range(self.order + 1):
            c = self._coeffs.get(4 * n, ZERO)
            out.append(c.evaluate() if kind is int else c)
        return out

    def off_grid(self) -> dict[int, PolyXY]:
        """Nonzero coefficients at non-integral exponents (quarter keys)."""
        return {e: c for e, c in self._coeffs.items() if e % 4}

    def is_integral(self) -> bool:
        return not self.off_grid()

    def __len__(self) -> int:
        return len(self._coeffs)

    # arithmetic ---------------------------------------------------------

    def truncate(self, order: int) -> "QSeries":
        return self.truncate_quarters(4 * order)

    def truncate_quarters(self, prec: int) -> "QSeries":
        prec = min(prec, self.prec)
        return QSeries._raw({e: c for e, c in self._coeffs.items() if e <= prec}, prec)

    def shift(self, quarters: int) -> "QSeries":
        """Multiply by q^(quarters/4); precision moves up by the same amount."""
        return QSeries._raw({e + quarters: c for e, c in self._coeffs.items()},
                            self.prec + quarters)

    def scale(self, factor: PolyXY | int) -> "QSeries":
        factor = _as_poly(factor)
        out = {}
        for e, c in self._coeffs.items():
            p = c * factor
            if p:
                out[e] = p
        return QSeries._raw(out, self.prec)

    def __neg__(self) -> "QSeries":
        return QSeries._raw({e: -c for e, c in self._coeffs.items()}, self.prec)

    def __add__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        return series_add(self, other)

    def __sub__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        return series_add(self, -other)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return series_mul(self, other)
        if isinstance(other, (int, PolyXY)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        return series_invert(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.prec == other.prec and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.prec, frozenset(self._coeffs.items())))

    def map_coeffs(self, fn) -> "QSeries":
        return QSeries({e: fn(c) for e, c in self._coeffs.items()}, prec=self.prec)

    def __repr__(self) -> str:
        return f"QSeries({self}, order={Fraction(self.prec, 4)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.quarter_items():
            power = Fraction(e, 4)
            qpart = "" if e == 0 else ("q" if power == 1 else f"q^{power}")
            cs = str(c)
            if not qpart:
                parts.append(cs)
            elif c.is_one():
                parts.append(qpart)
            elif len(c.terms) > 1:
                parts.append(f"({cs})*{qpart}")
            else:
                parts.append(f"{cs}*{qpart}")
        return " + ".join(parts)


def series_add(a: QSeries, b: QSeries) -> QSeries:
    prec = min(a.prec, b.prec)
    out = {e: c for e, c in a._coeffs.items() if e <= prec}
    for e, c in b._coeffs.items():
        if e > prec:
            continue
        s = out[e] + c if e in out else c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return QSeries._raw(out, prec)


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    prec = min(a.prec, b.prec)
    ia = [(e, c) for e, c in sorted(a._coeffs.items()) if e <= prec]
    ib = [(e, c) for e, c in sorted(b._coeffs.items()) if e <= prec]
    if len(ia) > len(ib):
        ia, ib = ib, ia
    out: dict[int, PolyXY] = {}
    for e1, c1 in ia:
        limit = prec - e1
        for e2, c2 in ib:
            if e2 > limit:
                break
            p = poly_mul(c1, c2)
            e = e1 + e2
            if e in out:
                out[e] = out[e] + p
            else:
                out[e] = p
    return QSeries._raw({e: c for e, c in out.items() if c}, prec)


def series_invert(a: QSeries) -> QSeries:
    if not a._coeffs.get(0, ZERO).is_one():
        raise NonUnitConstantTerm(
            f"constant term {a._coeffs.get(0, ZERO)} is not 1; cancel it before inverting")
    prec = a.prec
    tail = [(e, c) for e, c in sorted(a._coeffs.items()) if e > 0]
    b: dict[int, PolyXY] = {0: ONE}
    # only exponents reachable as sums of exponents of `a` can be nonzero
    reachable = sorted(_reachable({e for e, _ in tail}, prec))
    for e in reachable:
        if e == 0:
            continue
        acc = ZERO
        for f, cf in tail:
            if f > e:
                break
            prev = b.get(e - f)
            if prev is not None:
                acc = acc + poly_mul(cf, prev)
        if acc:
            b[e] = -acc
    return QSeries._raw(b, prec)


def _reachable(steps: set[int], prec: int) -> set[int]:
    if not steps:
        return {0}
    from math import gcd
    g = 0
    for s in steps:
        g = gcd(g, s)
    return set(range(0, prec + 1, g))


def substitute(series: QSeries, *, x: tuple[int, int, int, Exponent] = (1, 1, 0, 0),
               y: tuple[int, int, int, Exponent] = (1, 0, 1, 0), q_power: int = 1) -> QSeries:
    """Apply x -> c*x^a*y^b*q^s, y -> c*x^a*y^b*q^s, q -> q^q_power simultaneously.

    Each replacement is ``(coeff, xdeg, ydeg, qshift)``; the q-shifts must be
    non-negative so that the truncation stays meaningful.
    """
    xc, xa, xb, xs = x
    yc, ya, yb, ys = y
    xs, ys = to_quarters(xs), to_quarters(ys)
    if xs < 0 or ys < 0 or q_power < 1:
        raise ValueError("substitution must not lower q-degrees")
    prec = q_power * series.prec
    out: dict[int, dict[tuple[int, int], int]] = {}
    for e, poly in series._coeffs.items():
        for (a, b), c in poly.items():
            ne = q_power * e + a * xs + b * ys
            if ne > prec:
                continue
            key = (a * xa + b * ya, a * xb + b * yb)
            bucket = out.setdefault(ne, {})
            bucket[key] = bucket.get(key, 0) + c * xc**a * yc**b
    return QSeries({e: PolyXY(t) for e, t in out.items()}, prec=prec)


def specialize(series: QSeries, x: int | None = None, y: int | None = None) -> QSeries:
    return QSeries({e: c.specialize(x, y) for e, c in series._coeffs.items()}, prec=series.prec)


# Pochhammer symbols ------------------------------------------------------

@lru_cache(maxsize=None)
def _poch_quarters(head: PolyXY, amono: PolyXY, shift: int, step: int,
                   n: int | None, prec: int) -> QSeries:
    """Product of (head - amono*q^(shift + k*step)) on the quarter grid."""
    result = QSeries._raw({0: ONE}, prec)
    k = 0
    while n is None or k < n:
        e = shift + k * step
        if n is None and e > prec:
            break
        factor = {0: head} if e else {0: head - amono}
        if e:
            factor[e] = -amono
        result = series_mul(result, QSeries({**factor}, prec=prec))
        k += 1
    return result


def pochhammer_finite(amono: PolyXY | int, shift: Exponent, step: Exponent, n: int,
                      order: int, head: PolyXY | int = 1) -> QSeries:
    """(A; q^step)_n with A = amono*q^shift, truncated at q^order.

    ``head`` generalises each factor to ``head - A*q^(k*step)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    s, st = to_quarters(shift), to_quarters(step)
    if n and st <= 0:
        raise ValueError("step must be positive")
    if s < 0:
        raise ValueError("shift must be non-negative")
    return _poch_quarters(_as_poly(head), _as_poly(amono), s, st, n, 4 * order)


def pochhammer_infinite(amono: PolyXY | int, shift: Exponent, step: Exponent,
                        order: int) -> QSeries:
    """(A; q^step)_infinity truncated at q^order."""
    s, st = to_quarters(shift), to_quarters(step)
    if st <= 0:
        raise NonConvergentProduct("step must be positive")
    if s < 0:
        raise NonConvergentProduct("shift must be non-negative")
    return _poch_quarters(ONE, _as_poly(amono), s, st, None, 4 * order)


@lru_cache(maxsize=None)
def poch_series(head: PolyXY, amono: PolyXY, shift: int, step: int, n: int | None,
                prec: int, inverse: bool = False) -> QSeries:
    """Quarter-unit entry point with memoised inverses, used by the catalog."""
    if n is None and step <= 0:
        raise NonConvergentProduct("step must be positive")
    base = _poch_quarters(head, amono, shift, step, n, prec)
    return series_invert(base) if inverse else base


def first_difference(a: QSeries, b: QSeries):
    """First (quarter exponent, xdeg, ydeg, a-coeff, b-coeff) where a and b differ.

    Only exponents certified in both series are compared. Returns None when
    they agree.
    """
    prec = min(a.prec, b.prec)
    keys = sorted({e for e in a._coeffs if e <= prec} | {e for e in b._coeffs if e <= prec})
    for e in keys:
        ca, cb = a._coeffs.get(e, ZERO), b._coeffs.get(e, ZERO)
        if ca != cb:
            monos = sorted(set(ca._terms) | set(cb._terms))
            for m in monos:
                if ca.coeff(*m) != cb.coeff(*m):
                    return e, m[0], m[1], ca.coeff(*m), cb.coeff(*m)
    return None
