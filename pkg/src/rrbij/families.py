"""Membership tests, bounded enumerators and generating functions for every
partition family used by the maps.

A family is named by a :class:`FamilyId` such as ``FamilyId("AI", (2,))``.
Objects are plain part tuples, :class:`LabeledPartition` for families with a
choice of labels, ``(mu, eta)`` increment pairs for ``AIIL`` and
:class:`SignedTriple` for ``MII``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .partitions import (
    Label,
    LabeledPartition,
    Partition,
    is_partition,
    is_strict,
    stat_sol2,
    stat_zero_sequences,
)
from .series import PolyXY, QSeries


class WrongObjectKind(TypeError):
    pass


class UnknownFamily(KeyError):
    pass


@dataclass(frozen=True)
class SignedTriple:
    """(lambda, mu, eta) with lambda in AVII_i, mu in BVII_j and eta = 2^(ij)."""

    lam: Partition
    mu: Partition

    @property
    def i(self) -> int:
        return len(self.lam)

    @property
    def j(self) -> int:
        return len(self.mu)

    @property
    def eta(self) -> Partition:
        return (2,) * (self.i * self.j)

    @property
    def sign(self) -> int:
        return binomial2_sign(self.i - self.j)

    @property
    def weight(self) -> int:
        return sum(self.lam) + sum(self.mu) + 2 * self.i * self.j

    @property
    def a(self) -> tuple[int, ...]:
        return tuple((p - (6 * r - 3)) // 4 for r, p in enumerate(self.lam, 1))

    @property
    def b(self) -> tuple[int, ...]:
        return tuple((p - (6 * r - 3)) // 4 for r, p in enumerate(self.mu, 1))

    @classmethod
    def from_vectors(cls, a: Sequence[int], b: Sequence[int]) -> "SignedTriple":
        return cls(avii_parts(a), avii_parts(b))


def binomial2_sign(d: int) -> int:
    """(-1)^C(d,2) with C(d,2) = d(d-1)/2 for every integer d."""
    return -1 if d % 4 in (2, 3) else 1


def avii_parts(a: Sequence[int]) -> Partition:
    return tuple(6 * r - 3 + 4 * v for r, v in enumerate(a, 1))


def avi_parts(k: Sequence[int], start: int = 0) -> Partition:
    """Parts (2(start+r)-1 + 8k_r), r = 1..len(k)."""
    return tuple(2 * (start + r) - 1 + 8 * v for r, v in enumerate(k, 1))


@dataclass(frozen=True)
class FamilyId:
    name: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(map(str, self.params))})"

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        text = "".join(text.split())
        m = re.fullmatch(r"(R2|[A-Za-z]+(?:_kn)?)(?:\(([\d,]*)\)|((?:_\d+)*))", text)
        if not m:
            raise UnknownFamily(text)
        name = m.group(1)
        raw = m.group(2) if m.group(2) is not None else (m.group(3) or "").replace("_", ",")
        params = tuple(int(p) for p in raw.split(",") if p)
        fam = cls(name, params)
        if name not in _ARITY:
            raise UnknownFamily(text)
        if len(params) != _ARITY[name]:
            raise UnknownFamily(f"{name} takes {_ARITY[name]} parameter(s)")
        return fam


_ARITY = {
    "P": 0, "D": 0, "R": 0, "R2": 0, "Do": 0, "De": 0, "F": 0,
    "Ek": 1, "E_kn": 2, "Pstar": 1,
    "AI": 1, "BI": 1, "AIIL": 2, "BIIL": 2, "AIIR": 2, "BIIR": 2,
    "AIII": 2, "BIII": 2, "AIV": 1, "BIV": 1, "AV": 1, "BV": 1,
    "AVI": 1, "BVI": 2, "AVII": 1, "BVII": 1, "ETA": 2,
    "RI": 1, "RII": 1, "MI": 1, "MII": 1,
}

LABELED = {"AI", "AIIR", "AIII"}


# generic generator ----------------------------------------------------------

def increasing(max_weight: int, *, lo: int = 1, gap: int = 0,
               ok: Callable[[int], bool] | None = None,
               length: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Tuples a_1 <= a_2 <= ... with a_{r+1} - a_r >= gap, a_1 >= lo and sum <= max_weight.

    ``length`` fixes the number of entries, ``max_len`` bounds it.
    """
    cap = length if length is not None else max_len

    def floor_sum(start: int, count: int) -> int:
        return count * start + gap * count * (count - 1) // 2

    def rec(prefix: tuple, nxt: int, remaining: int):
        n = len(prefix)
        if length is None or n == length:
            yield prefix
        if cap is not None and n >= cap:
            return
        need = (length - n) if length is not None else 1
        v = nxt
        while floor_sum(v, need) <= remaining:
            if ok is None or ok(v):
                yield from rec(prefix + (v,), v + gap, remaining - v)
            v += 1

    if max_weight < 0:
        return
    yield from rec((), lo, max_weight)


def _label_choices(parts: Partition, base: Label, extra: Label,
                   allowed: Callable[[int], bool]) -> Iterator[tuple[Label, ...]]:
    """Every labeling with ``base`` everywhere and ``extra`` where allowed(index)."""
    slots = [r for r in range(len(parts)) if allowed(r)]

    def rec(r: int, acc: list):
        if r == len(parts):
            yield tuple(acc)
            return
        acc.append(base)
        yield from rec(r + 1, acc)
        acc.pop()
        if r in slots:
            acc.append(extra)
            yield from rec(r + 1, acc)
            acc.pop()

    yield from rec(0, [])


def _next_gap(parts: Sequence[int], r: int) -> float:
    return parts[r + 1] - parts[r] if r + 1 < len(parts) else float("inf")


# weights --------------------------------------------------------------------

def aiil_base(j: int, k: int) -> Partition:
    return tuple(range(2, j + 2)) + tuple(j + 2 * r for r in range(1, k + 1))


def object_weight(f: FamilyId, obj) -> int:
    if f.name == "AIIL":
        mu, eta = obj
        return sum(aiil_base(*f.params)) + sum(mu) + sum(eta)
    if isinstance(obj, SignedTriple):
        return obj.weight
    if isinstance(obj, LabeledPartition):
        return obj.weight
    return sum(obj)


def natural_monomial(f: FamilyId, obj) -> tuple[int, int, int]:
    """(sign, xdeg, ydeg) of an object under its family's labels and sign rule."""
    n = f.name
    if n in ("AI", "AIIR", "AIII"):
        xd, yd = obj.marker_degrees
        sign = (-1) ** obj.count(Label.Y) if n == "AI" else 1
        return sign, xd, yd
    if n == "BI":
        return 1, 0, len(obj)
    if n == "AIIL":
        j, k = f.params
        return 1, j + 2 * k, 2 * j + 2 * k
    if n in ("BIIL", "BIIR"):
        return 1, 2 * len(obj), len(obj)
    if n == "BIII":
        return (-1) ** len(obj), 0, 0
    if n in ("AIV", "F", "AVI", "AVII", "BVII", "MI"):
        return 1, len(obj), 0
    if n == "BVI":
        return (-1) ** len(obj), len(obj), 0
    if n == "ETA":
        return binomial2_sign(f.params[0] - f.params[1]), 0, 0
    if n == "MII":
        return obj.sign, obj.i + obj.j, 0
    if n in ("RI", "RII"):
        return 1, 2 * len(obj), 0
    return 1, 0, 0


# membership -----------------------------------------------------------------

def _pstar_from(parts: Sequence[int], base: Callable[[int], int], step: int):
    """Recover the increment vector (parts[r] - base(r)) / step, or None."""
    out = []
    for r, p in enumerate(parts, 1):
        d = p - base(r)
        if d < 0 or d % step:
            return None
        out.append(d // step)
    if any(a > b for a, b in zip(out, out[1:])):
        return None
    return tuple(out)


def is_member(f: FamilyId, obj) -> bool:
    n, ps = f.name, f.params
    if n in LABELED:
        if not isinstance(obj, LabeledPartition):
            raise WrongObjectKind(f"{f} holds labeled partitions")
        return _labeled_member(f, obj)
    if n == "AIIL":
        if not (isinstance(obj, tuple) and len(obj) == 2 and all(isinstance(c, tuple) for c in obj)):
            raise WrongObjectKind("AIIL holds (mu, eta) increment pairs")
        mu, eta = obj
        j, k = ps
        return is_partition(mu) and is_partition(eta) and len(mu) <= j and len(eta) <= k
    if n == "MII":
        if not isinstance(obj, SignedTriple):
            raise WrongObjectKind("MII holds signed triples")
        return (obj.i == obj.j == ps[0] and obj.lam == obj.mu
                and _pstar_from(obj.lam, lambda r: 6 * r - 3, 4) is not None)
    if isinstance(obj, LabeledPartition):
        # uniform labels carry no information; check the parts
        obj = obj.parts
    if not isinstance(obj, tuple):
        raise WrongObjectKind(f"{f} holds part tuples")
    p = obj
    if n == "Pstar":
        return len(p) == ps[0] and all(x >= 0 for x in p) and all(a <= b for a, b in zip(p, p[1:]))
    if not is_partition(p):
        return False
    m = len(p)
    gaps = [b - a for a, b in zip(p, p[1:])]
    if n == "P":
        return True
    if n == "D":
        return is_strict(p)
    if n == "R":
        return all(g >= 2 for g in gaps)
    if n == "R2":
        return all(g >= 2 for g in gaps) and (m == 0 or p[0] > 1)
    if n == "Do":
        return is_strict(p) and all(x % 2 for x in p)
    if n == "De":
        return is_strict(p) and all(x % 2 == 0 for x in p)
    if n == "F":
        return all(x % 4 == 1 for x in p)
    if n == "Ek":
        return all(x % ps[0] == 0 for x in p)
    if n == "E_kn":
        return all(x % ps[0] == 0 for x in p) and m <= ps[1]
    if n == "BI":
        return is_strict(p) and all(x % 2 for x in p) and all(x >= 2 * ps[0] + 1 for x in p)
    if n in ("BIIL", "BIIR"):
        return is_strict(p) and all(x >= ps[0] + ps[1] + 1 for x in p)
    if n == "BIII":
        return is_strict(p) and all(x >= ps[0] + ps[1] + 1 for x in p)
    if n == "AIV":
        return m == ps[0] and all(x % 2 for x in p)
    if n == "BIV":
        return is_strict(p) and all(x % 2 == 0 and x >= 2 * ps[0] + 2 for x in p)
    if n == "AV":
        i = ps[0]
        if not all(g >= 2 for g in gaps):
            return False
        if m == 2 * i:
            return True
        return m == 2 * i - 1 and p[0] > 1
    if n == "BV":
        return is_strict(p) and all(x >= 2 * ps[0] + 1 for x in p)
    if n == "AVI":
        return m == ps[0] and _pstar_from(p, lambda r: 2 * r - 1, 8) is not None
    if n == "BVI":
        i, j = ps
        return m == j and _pstar_from(p, lambda r: 2 * i + 2 * r - 1, 8) is not None
    if n in ("AVII", "BVII"):
        return m == ps[0] and _pstar_from(p, lambda r: 6 * r - 3, 4) is not None
    if n == "ETA":
        return p == (2,) * (ps[0] * ps[1])
    if n == "RI":
        return m == ps[0] and _pstar_from(p, lambda r: 8 * r - 4, 16) is not None
    if n == "RII":
        return m == ps[0] and _pstar_from(p, lambda r: 16 * r - 8, 8) is not None
    if n == "MI":
        k = _pstar_from(p, lambda r: 2 * r - 1, 8)
        return (m == ps[0] and k is not None
                and all(len(run) % 2 == 0 for run in stat_zero_sequences(k)))
    raise UnknownFamily(str(f))


def _labeled_member(f: FamilyId, lp: LabeledPartition) -> bool:
    p, labels = lp.parts, lp.labels
    if not is_strict(p):
        return False
    if f.name == "AI":
        (j,) = f.params
        if len(p) != j or any(x % 2 == 0 for x in p):
            return False
        for r, l in enumerate(labels):
            if l not in (Label.Y, Label.XY):
                return False
            if l is Label.XY and _next_gap(p, r) < 4:
                return False
        return True
    if f.name == "AIIR":
        j, k = f.params
        if len(p) != j + k or (p and p[0] < 2):
            return False
        if labels.count(Label.XY2) != j or labels.count(Label.X2Y2) != k:
            return False
        return all(l is not Label.X2Y2 or _next_gap(p, r) >= 2 for r, l in enumerate(labels))
    if f.name == "AIII":
        i, j = f.params
        if labels.count(Label.X) != i or labels.count(Label.NONE) != j or len(p) != i + j:
            return False
        return all(l is not Label.NONE or _next_gap(p, r) >= 2 for r, l in enumerate(labels))
    raise UnknownFamily(str(f))


# enumeration ----------------------------------------------------------------

def enumerate_family(f: FamilyId, max_weight: int) -> list:
    """All members of weight <= max_weight, in canonical order."""
    out = list(_generate(f, max_weight))
    return sorted(out, key=_sort_key)


def _sort_key(obj):
    if isinstance(obj, LabeledPartition):
        return (obj.parts, tuple(l.value for l in obj.labels))
    if isinstance(obj, SignedTriple):
        return (obj.lam, obj.mu)
    return obj


def _generate(f: FamilyId, W: int):
    n, ps = f.name, f.params
    if n == "P":
        yield from increasing(W)
    elif n == "D":
        yield from increasing(W, gap=1)
    elif n == "R":
        yield from increasing(W, gap=2)
    elif n == "R2":
        yield from increasing(W, lo=2, gap=2)
    elif n == "Do":
        yield from increasing(W, gap=2, ok=lambda v: v % 2 == 1)
    elif n == "De":
        yield from increasing(W, lo=2, gap=2, ok=lambda v: v % 2 == 0)
    elif n == "F":
        yield from increasing(W, ok=lambda v: v % 4 == 1)
    elif n == "Ek":
        yield from increasing(W, lo=ps[0], ok=lambda v: v % ps[0] == 0)
    elif n == "E_kn":
        yield from increasing(W, lo=ps[0], ok=lambda v: v % ps[0] == 0, max_len=ps[1])
    elif n == "Pstar":
        yield from increasing(W, lo=0, length=ps[0])
    elif n == "AI":
        (j,) = ps
        for p in increasing(W, gap=2, ok=lambda v: v % 2 == 1, length=j):
            for labels in _label_choices(p, Label.Y, Label.XY, lambda r, p=p: _next_gap(p, r) >= 4):
                yield LabeledPartition(p, labels)
    elif n == "BI":
        yield from increasing(W, lo=2 * ps[0] + 1, gap=2, ok=lambda v: v % 2 == 1)
    elif n == "AIIL":
        j, k = ps
        rest = W - sum(aiil_base(j, k))
        for mu in increasing(rest, max_len=j):
            for eta in increasing(rest - sum(mu), max_len=k):
                yield (mu, eta)
    elif n in ("BIIL", "BIIR"):
        yield from increasing(W, lo=ps[0] + ps[1] + 1, gap=1)
    elif n == "AIIR":
        j, k = ps
        for p in increasing(W, lo=2, gap=1, length=j + k):
            for labels in _choose_labels(p, k, Label.XY2, Label.X2Y2, 2):
                yield LabeledPartition(p, labels)
    elif n == "AIII":
        i, j = ps
        for p in increasing(W, gap=1, length=i + j):
            for labels in _choose_labels(p, j, Label.X, Label.NONE, 2):
                yield LabeledPartition(p, labels)
    elif n == "BIII":
        yield from increasing(W, lo=ps[0] + ps[1] + 1, gap=1)
    elif n == "AIV":
        yield from increasing(W, ok=lambda v: v % 2 == 1, length=ps[0])
    elif n == "BIV":
        yield from increasing(W, lo=2 * ps[0] + 2, gap=2, ok=lambda v: v % 2 == 0)
    elif n == "AV":
        i = ps[0]
        yield from increasing(W, gap=2, length=2 * i)
        if i >= 1:
            yield from increasing(W, lo=2, gap=2, length=2 * i - 1)
    elif n == "BV":
        yield from increasing(W, lo=2 * ps[0] + 1, gap=1)
    elif n in ("AVI", "MI"):
        i = ps[0]
        base = i * i
        for k in increasing((W - base) // 8 if W >= base else -1, lo=0, length=i):
            if n == "MI" and any(len(run) % 2 for run in stat_zero_sequences(k)):
                continue
            yield avi_parts(k)
    elif n == "BVI":
        i, j = ps
        base = 2 * i * j + j * j
        for t in increasing((W - base) // 8 if W >= base else -1, lo=0, length=j):
            yield avi_parts(t, start=i)
    elif n in ("AVII", "BVII"):
        i = ps[0]
        base = 3 * i * i
        for a in increasing((W - base) // 4 if W >= base else -1, lo=0, length=i):
            yield avii_parts(a)
    elif n == "ETA":
        if 2 * ps[0] * ps[1] <= W:
            yield (2,) * (ps[0] * ps[1])
    elif n == "RI":
        m = ps[0]
        base = 4 * m * m
        for s in increasing((W - base) // 16 if W >= base else -1, lo=0, length=m):
            yield tuple(8 * r - 4 + 16 * v for r, v in enumerate(s, 1))
    elif n == "RII":
        m = ps[0]
        base = 8 * m * m
        for s in increasing((W - base) // 8 if W >= base else -1, lo=0, length=m):
            yield tuple(16 * r - 8 + 8 * v for r, v in enumerate(s, 1))
    elif n == "MII":
        i = ps[0]
        base = 6 * i * i + 2 * i * i
        for a in increasing((W - base) // 8 if W >= base else -1, lo=0, length=i):
            parts = avii_parts(a)
            yield SignedTriple(parts, parts)
    else:
        raise UnknownFamily(str(f))


def _choose_labels(p: Partition, count: int, base: Label, special: Label,
                   min_gap: int) -> Iterator[tuple[Label, ...]]:
    """Labelings with exactly ``count`` parts labeled ``special``, each followed
    by a gap of at least ``min_gap`` (the top part is unconstrained)."""
    allowed = [r for r in range(len(p)) if _next_gap(p, r) >= min_gap]

    def rec(start: int, left: int, chosen: list):
        if left == 0:
            labels = [base] * len(p)
            for r in chosen:
                labels[r] = special
            yield tuple(labels)
            return
        for idx in range(start, len(allowed)):
            chosen.append(allowed[idx])
            yield from rec(idx + 1, left - 1, chosen)
            chosen.pop()

    yield from rec(0, count, [])


# generating functions -------------------------------------------------------

Marker = Callable[[object], tuple[int, int, int]]

MARKERS: dict[str, Callable[[FamilyId], Marker]] = {
    "natural": lambda f: (lambda obj: natural_monomial(f, obj)),
    "plain": lambda f: (lambda obj: (1, 0, 0)),
    "x^len": lambda f: (lambda obj: (1, len(obj), 0)),
    "x^2len": lambda f: (lambda obj: (1, 2 * len(obj), 0)),
    "x^sol2*y^len": lambda f: (lambda obj: (1, stat_sol2(obj), len(obj))),
}


def weighted_gf(f: FamilyId, markers: str | Marker = "natural", order: int = 20) -> QSeries:
    """Sum of sign * x^a * y^b * q^weight over the members of weight <= order."""
    marker = MARKERS[markers](f) if isinstance(markers, str) else markers
    acc: dict[int, dict[tuple[int, int], int]] = {}
    for obj in _generate(f, order):
        sign, a, b = marker(obj)
        bucket = acc.setdefault(4 * object_weight(f, obj), {})
        bucket[(a, b)] = bucket.get((a, b), 0) + sign
    return QSeries({e: PolyXY(t) for e, t in acc.items()}, prec=4 * order)
