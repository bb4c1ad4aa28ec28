"""Registry of the Rogers-Ramanujan type identities and their evaluators.

Each identity is an :class:`IdentitySpec` whose two sides are lists of
:class:`TermFamily`.  A family maps an index tuple to a :class:`Term`:
a signed marker monomial times ``q^qexp`` times numerator Pochhammer
symbols, divided by denominator Pochhammer symbols.  All q-exponents here
are in quarter units.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .families import FamilyId, binomial2_sign, weighted_gf
from .series import (
    ONE,
    PolyXY,
    QSeries,
    X,
    Y,
    first_difference,
    poch_series,
    series_add,
    series_mul,
    to_quarters,
)


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class Poch:
    """(A; q^step)_n with A = amono * q^shift, generalised to factors
    (head - A q^(k step)); ``n=None`` means infinite.  Quarter units."""

    amono: PolyXY
    shift: int
    step: int
    n: int | None = None
    head: PolyXY = ONE

    def series(self, prec: int, inverse: bool = False) -> QSeries:
        return poch_series(self.head, self.amono, self.shift, self.step, self.n, prec, inverse)


@dataclass(frozen=True)
class Term:
    coeff: PolyXY
    qexp: int
    num: tuple[Poch, ...] = ()
    den: tuple[Poch, ...] = ()


@dataclass(frozen=True)
class TermFamily:
    """Terms indexed by ``arity`` non-negative integers.

    ``min_degree`` bounds the q-degree of a term from below and must be
    non-decreasing in every index; by default it is the term's own q-exponent.
    """

    arity: int
    term: Callable[..., Term]
    min_degree: Callable[..., int] | None = None

    def lower_bound(self, idx: Sequence[int]) -> int:
        if self.min_degree is not None:
            return self.min_degree(*idx)
        return self.term(*idx).qexp

    def indices(self, prec: int):
        """Index tuples whose lower bound is at most ``prec``."""
        def rec(prefix: list[int]):
            d = len(prefix)
            if d == self.arity:
                yield tuple(prefix)
                return
            v = 0
            while True:
                probe = prefix + [v] + [0] * (self.arity - d - 1)
                if self.lower_bound(probe) > prec:
                    break
                yield from rec(prefix + [v])
                v += 1

        yield from rec([])


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    variables: frozenset[str]
    indices: tuple[str, ...]
    sum_side: tuple[TermFamily, ...]
    product_side: tuple[TermFamily, ...] = ()
    # replaces product_side for sides defined by enumeration
    product_override: Callable[[int], QSeries] | None = field(default=None, compare=False)
    default_order: int = 30
    description: str = ""


@dataclass(frozen=True)
class VerificationReport:
    id: str
    order: int
    equal: bool
    first_discrepancy: tuple | None = None

    def as_record(self) -> dict:
        d = None
        if self.first_discrepancy is not None:
            e, a, b, lhs, rhs = self.first_discrepancy
            d = {"q_exponent": str(Fraction(e, 4)), "xdeg": a, "ydeg": b,
                 "lhs": lhs, "rhs": rhs}
        return {"id": self.id, "order": self.order, "equal": self.equal, "discrepancy": d}


# evaluation -----------------------------------------------------------------

def eval_term(t: Term, prec: int) -> QSeries:
    if t.qexp > prec:
        return QSeries._raw({}, prec)
    room = prec - t.qexp
    acc = QSeries({0: t.coeff}, prec=room)
    for p in t.num:
        acc = series_mul(acc, p.series(prec).truncate_quarters(room))
    for p in t.den:
        acc = series_mul(acc, p.series(prec, inverse=True).truncate_quarters(room))
    return acc.shift(t.qexp)


def eval_side(side: Sequence[TermFamily], prec: int) -> QSeries:
    total = QSeries._raw({}, prec)
    for fam in side:
        for idx in fam.indices(prec):
            total = series_add(total, eval_term(fam.term(*idx), prec))
    return total


# construction helpers -------------------------------------------------------

def _q(v) -> int:
    return to_quarters(v)


def mono(c: int = 1, x: int = 0, y: int = 0) -> PolyXY:
    return PolyXY.monomial(c, x, y)


def poch(a: PolyXY | int, shift, step, n: int | None = None, head: PolyXY = ONE) -> Poch:
    if isinstance(a, int):
        a = PolyXY.const(a)
    return Poch(a, _q(shift), _q(step), n, head)


def qq(step, n: int | None = None) -> Poch:
    """(q^step; q^step)_n."""
    return poch(1, step, step, n)


def c2(n: int) -> int:
    return n * (n - 1) // 2


def product(num: Sequence[Poch] = (), den: Sequence[Poch] = (), coeff: PolyXY = ONE) -> TermFamily:
    term = Term(coeff, 0, tuple(num), tuple(den))
    return TermFamily(0, lambda: term)


# the catalog ---------------------------------------------------------------

def _rr(extra: int) -> TermFamily:
    return TermFamily(1, lambda n: Term(ONE, _q(n * n + extra * n), den=(qq(1, n),)))


def _rog(extra: int) -> TermFamily:
    return TermFamily(1, lambda n: Term(ONE, _q(n * n + extra * n), den=(qq(4, n),)))


def _cy_a(shift: int) -> TermFamily:
    def term(i, j):
        return Term(mono(binomial2_sign(i - j)), 3 * i * i + 2 * i * j + 3 * j * j + _q(shift * (i + j)),
                    den=(qq(1, i), qq(1, j)))
    return TermFamily(2, term)


def _cy_b(shift: int) -> TermFamily:
    def term(i, j):
        return Term(mono((-1) ** j), (i + j) ** 2 + _q(shift * (i + j)),
                    den=(qq(2, i), qq(2, j)))
    return TermFamily(2, term)


def _do_sum() -> TermFamily:
    return TermFamily(2, lambda i, j: Term(
        mono(1, i, i + 2 * j), _q(2 * i * i + 4 * j * j + 4 * i * j - i), den=(qq(2, i), qq(4, j))))


def _hkx1_sum() -> TermFamily:
    return TermFamily(2, lambda i, j: Term(
        mono((-1) ** j, 0, i + j), _q((i + j) ** 2), num=(poch(X, 0, 2, j),), den=(qq(2, i), qq(2, j))))


def _hkx1_product() -> TermFamily:
    # (yq;q^2)_inf / (yq;q^2)_n cancelled to (yq^(2n+1);q^2)_inf
    return TermFamily(1, lambda n: Term(
        mono(1, 0, n), _q(n * n), num=(poch(-X, 0, 2, n), poch(Y, 2 * n + 1, 2)), den=(qq(2, n),)))


def _hkx2_sum(shifted: bool) -> TermFamily:
    def term(i, j, k):
        e = c2(k) + c2(i + j + k)
        if shifted:
            return Term(mono(1, 2 * i + 2 * k + j, 2 * j + 2 * k + i), _q(e + 2 * j + 2 * k + i),
                        den=(qq(1, i), qq(1, j), qq(1, k)))
        return Term(mono((-1) ** (i + j), 2 * i + 2 * k + j, 2 * j + 2 * k + i), _q(e),
                    den=(qq(1, i), qq(1, j), qq(1, k)))
    return TermFamily(3, term)


def _hkx2_product() -> TermFamily:
    # (x^2y;q)_inf / (x^2y;q)_k cancelled to (x^2y q^k;q)_inf
    return TermFamily(1, lambda k: Term(
        mono((-1) ** k, k, 2 * k), _q(c2(k)),
        num=(poch(X, 0, 1, k), poch(mono(1, 2, 1), k, 1)), den=(qq(1, k),)))


def _hkx2pc_product() -> TermFamily:
    return TermFamily(1, lambda m: Term(
        mono(1, m, 2 * m), _q(c2(m) + 2 * m),
        num=(poch(-X, 0, 1, m), poch(mono(-1, 2, 1), m + 1, 1)), den=(qq(1, m),)))


def _hkx3_sum() -> TermFamily:
    return TermFamily(2, lambda k, j: Term(
        mono((-1) ** k, k), _q(c2(k + j) + c2(j) + j), den=(qq(1, k), qq(1, j), qq(1, k + j))))


def _hkx3pc_sum() -> TermFamily:
    return TermFamily(2, lambda i, j: Term(
        mono(1, i), _q((i * i + i) // 2 + i * j + j * j),
        num=(poch(1, i + j + 1, 1),), den=(qq(1, i), qq(1, j))))


def _lw_sum(with_y: bool) -> TermFamily:
    return TermFamily(2, lambda i, j: Term(
        mono(1, i, j if with_y else 0), _q(j * j + j + 2 * i * j + i), den=(qq(2, i), qq(2, j))))


def _lwgeny_product() -> TermFamily:
    # (-yq^2;q^2)_inf / (-yq^2;q^2)_i cancelled to (-yq^(2i+2);q^2)_inf
    return TermFamily(1, lambda i: Term(
        mono(1, i), _q(i), num=(poch(-Y, 2 * i + 2, 2),), den=(qq(2, i),)))


def _lwgenk(k: int) -> IdentitySpec:
    sum_side = TermFamily(2, lambda i, j: Term(
        mono(1, i), _q(k * j * (j + 1) // 2 + k * i * j + i), den=(qq(k, i), qq(k, j))))
    prod = product(num=[poch(-1, k, k)], den=[poch(X, 1, 2 * k)])
    return IdentitySpec(f"LWGENK:{k}", frozenset({"x", "k"}), ("i", "j"), (sum_side,), (prod,),
                        description=f"Li-Wang generalisation in q^k, k={k}")


def _wyr_sum() -> TermFamily:
    return TermFamily(2, lambda i, j: Term(
        mono(1, i, 2 * j), _q(i * i + 2 * i * j + 2 * j * j - i - j), den=(qq(1, i), qq(2, j))))


def _wyr_product() -> TermFamily:
    # (-x/y;q)_n y^n = prod_{k<n} (y + x q^k); (y;q)_inf/(y;q)_n = (yq^n;q)_inf
    return TermFamily(1, lambda n: Term(
        ONE, _q(c2(n)), num=(poch(-X, 0, 1, n, head=Y), poch(Y, n, 1)), den=(qq(1, n),)))


def _pcy1_product() -> TermFamily:
    return TermFamily(1, lambda n: Term(mono(1, 2 * n), _q(4 * n * n), den=(qq(16, n),)))


def _pcy2_product() -> TermFamily:
    return TermFamily(1, lambda n: Term(mono(1, 2 * n), _q(8 * n * n), den=(qq(8, n),)))


def _wz_sum() -> TermFamily:
    return TermFamily(2, lambda i, j: Term(
        ONE, _q(4 * i * i + 2 * i * j + Fraction(j * j + j, 2) - 2 * i), den=(qq(1, 2 * i), qq(1, j))))


def _do_gf(order: int) -> QSeries:
    return weighted_gf(FamilyId("Do"), "x^sol2*y^len", order)


def _build() -> dict[str, IdentitySpec]:
    x, xy = frozenset({"x"}), frozenset({"x", "y"})
    none = frozenset()
    rr_a = [poch(1, 1, 5), poch(1, 4, 5)]
    rr_b = [poch(1, 2, 5), poch(1, 3, 5)]
    neg_q2 = poch(-1, 2, 2)
    specs = [
        IdentitySpec("RR1", none, ("n",), (_rr(0),), (product(den=rr_a),), default_order=50,
                     description="first Rogers-Ramanujan identity"),
        IdentitySpec("RR2", none, ("n",), (_rr(1),), (product(den=rr_b),), default_order=50,
                     description="second Rogers-Ramanujan identity"),
        IdentitySpec("ROG1", none, ("n",), (_rog(0),), (product(den=[neg_q2, *rr_a]),),
                     default_order=50, description="Rogers, q^(n^2)/(q^4;q^4)_n"),
        IdentitySpec("ROG2", none, ("n",), (_rog(2),), (product(den=[neg_q2, *rr_b]),),
                     default_order=50, description="Rogers, q^(n^2+2n)/(q^4;q^4)_n"),
        IdentitySpec("HKX1", xy, ("i", "j"), (_hkx1_sum(),), (_hkx1_product(),),
                     description="Hao-Kuai-Xia, first identity"),
        IdentitySpec("HKX2", xy, ("i", "j", "k"), (_hkx2_sum(False),), (_hkx2_product(),),
                     description="Hao-Kuai-Xia, second identity"),
        IdentitySpec("HKX3", x, ("k", "j"), (_hkx3_sum(),),
                     (product(num=[poch(X, 0, 1)], den=[qq(1)]),),
                     description="Hao-Kuai-Xia, third identity"),
        IdentitySpec("LW", x, ("i", "j"), (_lw_sum(False),),
                     (product(num=[neg_q2], den=[poch(X, 1, 4)]),),
                     description="Li-Wang identity"),
        IdentitySpec("CY1", none, ("i", "j"), (_cy_a(0),),
                     (product(den=[poch(1, 2, 10), poch(1, 8, 10)]),), default_order=50,
                     description="Chen-Yin, quarter-integer exponents"),
        IdentitySpec("CY2", none, ("i", "j"), (_cy_a(1),),
                     (product(den=[poch(1, 4, 10), poch(1, 6, 10)]),), default_order=50,
                     description="Chen-Yin, quarter-integer exponents"),
        IdentitySpec("CY3", none, ("i", "j"), (_cy_b(0),), (product(den=[neg_q2, *rr_a]),),
                     default_order=50, description="Chen-Yin, quarter-integer exponents"),
        IdentitySpec("CY4", none, ("i", "j"), (_cy_b(1),), (product(den=[neg_q2, *rr_b]),),
                     default_order=50, description="Chen-Yin, quarter-integer exponents"),
        IdentitySpec("PCY1", x, ("i", "j"),
                     (TermFamily(2, lambda i, j: Term(mono((-1) ** j, i + j), _q((i + j) ** 2),
                                                      den=(qq(8, i), qq(8, j)))),),
                     (_pcy1_product(),), default_order=50,
                     description="parameterised Chen-Yin, first"),
        IdentitySpec("PCY2", x, ("i", "j"),
                     (TermFamily(2, lambda i, j: Term(mono(binomial2_sign(i - j), i + j),
                                                      _q(3 * i * i + 2 * i * j + 3 * j * j),
                                                      den=(qq(4, i), qq(4, j)))),),
                     (_pcy2_product(),), default_order=50,
                     description="parameterised Chen-Yin, second"),
        IdentitySpec("DOGF", xy, ("i", "j"), (_do_sum(),), product_override=_do_gf,
                     description="strict odd partitions counted by sol2 and length"),
        IdentitySpec("WYR", xy, ("i", "j"), (_wyr_sum(),), (_wyr_product(),),
                     description="two-parameter Wang-Yee-Rogers type identity"),
        IdentitySpec("MAIN1", xy, ("i", "j"), (_do_sum(),), (_hkx1_product(),),
                     description="strict odd partitions against the HKX1 right side"),
        IdentitySpec("MAIN2", xy, ("i", "j"), (_do_sum(),), (_hkx1_sum(),),
                     description="strict odd partitions against the HKX1 left side"),
        IdentitySpec("HKX2PC", xy, ("i", "j", "k"), (_hkx2_sum(True),), (_hkx2pc_product(),),
                     description="HKX2 after x -> -x, y -> -yq"),
        IdentitySpec("HKX3PC", x, ("i", "j"), (_hkx3pc_sum(),), (product(num=[poch(-X, 1, 1)]),),
                     description="HKX3 after x -> -xq, times (q;q)_inf"),
        IdentitySpec("LWGENY", xy, ("i", "j"), (_lw_sum(True),), (_lwgeny_product(),),
                     description="Li-Wang with a second parameter y"),
        IdentitySpec("WZ", none, ("i", "j"), (_wz_sum(),),
                     (product(num=[poch(-1, 1, 1), neg_q2]),), default_order=50,
                     description="Wang-Zhong type identity"),
    ]
    out = {s.id: s for s in specs}
    for k in (1, 2, 3):
        out[f"LWGENK:{k}"] = _lwgenk(k)
    return out


_CATALOG = _build()

CATALOG_IDS = ("RR1", "RR2", "ROG1", "ROG2", "HKX1", "HKX2", "HKX3", "LW", "CY1", "CY2",
               "CY3", "CY4", "PCY1", "PCY2", "DOGF", "WYR", "MAIN1", "MAIN2", "HKX2PC",
               "HKX3PC", "LWGENY", "LWGENK", "WZ")
LWGENK_VALUES = (1, 2, 3)


def catalog_list() -> list[str]:
    return list(CATALOG_IDS)


def concrete_ids(identity: str) -> list[str]:
    """Expand the parameterised LWGENK entry; other ids map to themselves."""
    identity = identity.upper()
    if identity == "LWGENK":
        return [f"LWGENK:{k}" for k in LWGENK_VALUES]
    return [identity]


def lookup(identity: str) -> IdentitySpec:
    key = identity.upper()
    if key.startswith("LWGENK:"):
        try:
            k = int(key.split(":", 1)[1])
        except ValueError:
            raise UnknownIdentity(identity) from None
        if k < 1:
            raise UnknownIdentity(identity)
        if key not in _CATALOG:
            _CATALOG[key] = _lwgenk(k)
        return _CATALOG[key]
    if key == "LWGENK":
        raise UnknownIdentity("LWGENK needs a parameter, e.g. LWGENK:2")
    if key not in _CATALOG:
        raise UnknownIdentity(identity)
    return _CATALOG[key]


def _spec(identity: str | IdentitySpec) -> IdentitySpec:
    return identity if isinstance(identity, IdentitySpec) else lookup(identity)


def default_order(identity: str) -> int:
    return _spec(concrete_ids(identity)[0]).default_order


def eval_sum_side(identity: str | IdentitySpec, order: int) -> QSeries:
    """Left side to q^order.  Off-grid coefficients are kept, so a quarter-grid
    identity that failed to cancel would show up in ``off_grid()``."""
    return eval_side(_spec(identity).sum_side, 4 * order)


def eval_product_side(identity: str | IdentitySpec, order: int) -> QSeries:
    spec = _spec(identity)
    if spec.product_override is not None:
        return spec.product_override(order)
    return eval_side(spec.product_side, 4 * order)


def verify_identity(identity: str | IdentitySpec, order: int | None = None) -> VerificationReport:
    if isinstance(identity, str) and identity.upper() == "LWGENK":
        reports = [verify_identity(k, order) for k in concrete_ids(identity)]
        bad = next((r for r in reports if not r.equal), None)
        return VerificationReport("LWGENK", reports[0].order, bad is None,
                                  None if bad is None else bad.first_discrepancy)
    spec = _spec(identity)
    if order is None:
        order = spec.default_order
    diff = first_difference(eval_sum_side(spec, order), eval_product_side(spec, order))
    return VerificationReport(spec.id, order, diff is None, diff)
