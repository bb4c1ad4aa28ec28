"""The bijections alpha, tau, theta1, theta2, the involutions phi, iota,
psi1, psi2, and the two fixed-point folds.

Partitions are increasing tuples; labeled inputs are LabeledPartition.
Every map has a ``*_monomial`` companion giving (sign, xdeg, ydeg, weight)
of its domain objects, which the harness uses to check preservation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .families import SignedTriple, avi_parts, avii_parts, binomial2_sign
from .partitions import (
    INF,
    Label,
    LabeledPartition,
    Partition,
    first_odd_zero_sequence,
    insert_tl_shape,
    is_partition,
    is_strict,
    remove_tl_shape,
    runs_with_gap,
    stat_sol2,
    stat_zero_sequences,
    tl_insert_position,
)


class MapError(ValueError):
    pass


class NotInFamily(MapError):
    pass


class NotInTarget(MapError):
    pass


class BadIncrementShape(MapError):
    pass


class OddLength(MapError):
    pass


class NotFixed(MapError):
    pass


@dataclass(frozen=True)
class MapReport:
    input: Any
    output: Any
    weight_in: int
    weight_out: int
    sign_in: int
    sign_out: int
    is_fixed_point: bool


def _strip_zeros(p: Sequence[int]) -> Partition:
    return tuple(v for v in p if v)


def _pad(p: Sequence[int], n: int, what: str) -> list[int]:
    p = _strip_zeros(p)
    if not is_partition(p) or len(p) > n:
        raise BadIncrementShape(f"{what} must be a partition with at most {n} parts, got {tuple(p)}")
    return [0] * (n - len(p)) + list(p)


# alpha ----------------------------------------------------------------------

def alpha_base(i: int, j: int) -> Partition:
    pairs = [v for s in range(1, j + 1) for v in (4 * s - 3, 4 * s - 1)]
    singles = [4 * j + 4 * r - 3 for r in range(1, i + 1)]
    return tuple(pairs + singles)


def alpha_forward(i: int, j: int, mu: Sequence[int] = (), eta: Sequence[int] = ()) -> Partition:
    """Base partition beta^(i,j) plus even increments mu and 4-multiple increments eta."""
    m = _pad(mu, i, "mu")
    e = _pad(eta, j, "eta")
    if any(v % 2 for v in m):
        raise BadIncrementShape("mu must have even parts")
    if any(v % 4 for v in e):
        raise BadIncrementShape("eta must have parts divisible by 4")
    singles = {4 * j + 4 * r - 3 + m[r - 1] for r in range(1, i + 1)}
    pairs = {s: 4 * s - 3 for s in range(1, j + 1)}  # pair s -> its smaller part
    for s in range(j, 0, -1):
        a = pairs[s]
        for _ in range(e[s - 1] // 4):
            if a + 4 in singles:
                # the pair jumps over a singleton, which slides down to a
                singles.remove(a + 4)
                singles.add(a)
                a += 4
            else:
                a += 2
        pairs[s] = a
    out = sorted(singles | {v for a in pairs.values() for v in (a, a + 2)})
    return tuple(out)


def alpha_indices(p: Sequence[int]) -> tuple[int, int]:
    """(i, j) with i = sol2(p), i + 2j = len(p)."""
    p = tuple(p)
    if not (is_strict(p) and all(v % 2 for v in p) and all(v > 0 for v in p)):
        raise NotInTarget(f"{p} is not a partition into distinct odd parts")
    i = stat_sol2(p)
    return i, (len(p) - i) // 2


def alpha_inverse(p: Sequence[int]) -> tuple[Partition, Partition]:
    """Recover (mu, eta) from a strict odd partition; see alpha_indices for (i, j)."""
    p = tuple(p)
    i, j = alpha_indices(p)
    pair_bottoms: list[int] = []
    singles: set[int] = set()
    for run in runs_with_gap(p, 2):
        body = run[:-1] if len(run) % 2 else run
        pair_bottoms.extend(body[0::2])
        if len(run) % 2:
            singles.add(run[-1])
    occupied = set(p)
    moves = []
    for s in range(1, j + 1):
        b = pair_bottoms[s - 1]
        count = 0
        occupied.discard(b)
        occupied.discard(b + 2)
        while b > 4 * s - 3:
            if b - 4 in singles:
                singles.remove(b - 4)
                singles.add(b)
                occupied.discard(b - 4)
                occupied.add(b)
                b -= 4
            else:
                b -= 2
            count += 1
        occupied.update((b, b + 2))
        moves.append(4 * count)
    base_singles = [4 * j + 4 * r - 3 for r in range(1, i + 1)]
    mu = [v - b for v, b in zip(sorted(singles), base_singles)]
    if any(v < 0 for v in mu) or any(v < 0 for v in moves):
        raise NotInTarget(f"{p} does not decompose")
    return _strip_zeros(mu), _strip_zeros(sorted(moves))


def alpha_monomial(p: Sequence[int]) -> tuple[int, int, int, int]:
    return 1, stat_sol2(p), len(p), sum(p)


# phi ------------------------------------------------------------------------

def _check_phi(lam: LabeledPartition, mu: Sequence[int]) -> None:
    from .families import FamilyId, is_member
    j = len(lam)
    if not is_member(FamilyId("AI", (j,)), lam) or not is_member(FamilyId("BI", (j,)), tuple(mu)):
        raise NotInFamily(f"({lam}, {tuple(mu)}) is not in AI x BI")


def sfi(lam: LabeledPartition) -> float:
    """2L-shape size at the smallest part of the first illegal 2-sequence."""
    a = _first_illegal(lam)
    if a is None:
        return INF
    return lam.parts[a] + 2 * (len(lam) - a - 1)


def _first_illegal(lam: LabeledPartition) -> int | None:
    """0-based index of the smallest part in the first illegal 2-sequence."""
    start = 0
    for run in runs_with_gap(lam.parts, 2):
        top = lam.labels[start + len(run) - 1]
        if (len(run) % 2 == 1) == (top is Label.Y):
            return start
        start += len(run)
    return None


def phi(lam: LabeledPartition, mu: Sequence[int]) -> tuple[LabeledPartition, Partition]:
    mu = tuple(mu)
    _check_phi(lam, mu)
    mu1 = mu[0] if mu else INF
    s = sfi(lam)
    if s == INF and mu1 == INF:
        return lam, mu
    if s < mu1:
        a = _first_illegal(lam)
        rest, size = remove_tl_shape(lam.parts, a + 1, 2)
        labels = lam.labels[:a] + lam.labels[a + 1:]
        return LabeledPartition(rest, labels), (size,) + mu
    k = tl_insert_position(lam.parts, mu1, 2)
    parts = insert_tl_shape(lam.parts, mu1, 2)
    labels = lam.labels[: k - 1] + (Label.Y,) + lam.labels[k - 1:]
    return LabeledPartition(parts, labels), mu[1:]


def phi_monomial(pair) -> tuple[int, int, int, int]:
    lam, mu = pair
    xd, yd = lam.marker_degrees
    return (-1) ** lam.count(Label.Y), xd, yd + len(mu), lam.weight + sum(mu)


# tau ------------------------------------------------------------------------

def tau_base(j: int, k: int) -> LabeledPartition:
    parts = tuple(range(2, j + 2)) + tuple(j + 2 * r for r in range(1, k + 1))
    return LabeledPartition(parts, (Label.XY2,) * j + (Label.X2Y2,) * k)


def tau(j: int, k: int, mu: Sequence[int] = (), eta: Sequence[int] = ()) -> LabeledPartition:
    m = _pad(mu, j, "mu")
    e = _pad(eta, k, "eta")
    heavy = {j + 2 * r + e[r - 1] for r in range(1, k + 1)}
    movers = {s: s + 1 for s in range(1, j + 1)}
    for s in range(j, 0, -1):
        a = movers[s]
        for _ in range(m[s - 1]):
            if a + 1 in heavy:
                heavy.remove(a + 1)
                heavy.add(a)
                a += 2
            else:
                a += 1
        movers[s] = a
    labeled = [(v, Label.XY2) for v in movers.values()] + [(v, Label.X2Y2) for v in heavy]
    labeled.sort()
    return LabeledPartition(tuple(v for v, _ in labeled), tuple(l for _, l in labeled))


def tau_inverse(lam: LabeledPartition) -> tuple[int, int, Partition, Partition]:
    """Return (j, k, mu, eta) with tau(j, k, mu, eta) == lam."""
    if not is_strict(lam.parts) or any(l not in (Label.XY2, Label.X2Y2) for l in lam.labels):
        raise NotInTarget(f"{lam} is not in AII_R")
    movers = [v for v, l in zip(lam.parts, lam.labels) if l is Label.XY2]
    heavy = {v for v, l in zip(lam.parts, lam.labels) if l is Label.X2Y2}
    j, k = len(movers), len(heavy)
    counts = []
    for s in range(1, j + 1):
        c = movers[s - 1]
        n = 0
        while c > s + 1:
            if c - 2 in heavy and c - 1 not in heavy:
                heavy.remove(c - 2)
                heavy.add(c - 1)
                c -= 2
            else:
                c -= 1
            n += 1
        movers[s - 1] = c
        counts.append(n)
    eta = [v - (j + 2 * r) for r, v in enumerate(sorted(heavy), 1)]
    if any(v < 0 for v in eta) or counts != sorted(counts):
        raise NotInTarget(f"{lam} does not decompose")
    return j, k, _strip_zeros(counts), _strip_zeros(eta)


# iota -----------------------------------------------------------------------

def _check_iota(lam: LabeledPartition, mu: Sequence[int]) -> None:
    from .families import FamilyId, is_member
    i, j = lam.count(Label.X), lam.count(Label.NONE)
    if not is_member(FamilyId("AIII", (i, j)), lam) or not is_member(FamilyId("BIII", (i, j)), tuple(mu)):
        raise NotInFamily(f"({lam}, {tuple(mu)}) is not in AIII x BIII")


def sfi1(lam: LabeledPartition) -> float:
    """L-shape size at the smallest unlabeled part."""
    for k, l in enumerate(lam.labels):
        if l is Label.NONE:
            return lam.parts[k] + len(lam) - k - 1
    return INF


def iota(lam: LabeledPartition, mu: Sequence[int]) -> tuple[LabeledPartition, Partition]:
    mu = tuple(mu)
    _check_iota(lam, mu)
    mu1 = mu[0] if mu else INF
    s = sfi1(lam)
    if s == INF and mu1 == INF:
        return lam, mu
    if s < mu1:
        k = lam.labels.index(Label.NONE)
        rest, size = remove_tl_shape(lam.parts, k + 1, 1)
        return LabeledPartition(rest, lam.labels[:k] + lam.labels[k + 1:]), (size,) + mu
    p, m = lam.parts, len(lam)
    pos = next((k for k in range(m) if p[k] + m - k - 1 >= mu1), m)
    new = mu1 - (m - pos)
    parts = p[:pos] + (new,) + tuple(v + 1 for v in p[pos:])
    labels = lam.labels[:pos] + (Label.NONE,) + lam.labels[pos:]
    return LabeledPartition(parts, labels), mu[1:]


def iota_monomial(pair) -> tuple[int, int, int, int]:
    lam, mu = pair
    return (-1) ** len(mu), lam.count(Label.X), 0, lam.weight + sum(mu)


# theta1 ---------------------------------------------------------------------

def theta1(lam: Sequence[int], mu: Sequence[int]) -> tuple[Partition, Partition]:
    lam, mu = list(lam), tuple(mu)
    i = len(lam)
    if (not is_partition(lam) or any(v % 2 == 0 for v in lam)
            or not is_strict(mu) or any(v % 2 or v < 2 * i + 2 for v in mu)):
        raise NotInFamily(f"({tuple(lam)}, {mu}) is not in AIV x BIV")
    emitted: list[int] = []
    while True:
        t = next((r for r, v in enumerate(lam) if v % 4 == 3), None)
        if t is None:
            break
        for r in range(t, i):
            lam[r] -= 2
        emitted.append(2 * (i - t))
    return tuple(lam), tuple(sorted(emitted)) + mu


def theta1_inverse(beta: Sequence[int], gamma: Sequence[int]) -> tuple[Partition, Partition]:
    beta, gamma = list(beta), tuple(gamma)
    n = len(beta)
    if (not is_partition(beta) or any(v % 4 != 1 for v in beta)
            or not is_strict(gamma) or any(v % 2 for v in gamma)):
        raise NotInFamily(f"({tuple(beta)}, {gamma}) is not in F x De")
    small = [v for v in gamma if v < 2 * n + 2]
    for v in small:
        g = v // 2
        for r in range(n - g, n):
            beta[r] += 2
    return tuple(beta), gamma[len(small):]


# theta2 ---------------------------------------------------------------------

def av_index(lam: Sequence[int]) -> int:
    return (len(lam) + 1) // 2


def theta2(lam: Sequence[int], mu: Sequence[int]) -> tuple[Partition, Partition]:
    lam, mu = list(lam), tuple(mu)
    i = av_index(lam)
    gaps_ok = all(b - a >= 2 for a, b in zip(lam, lam[1:])) and is_partition(lam)
    odd_ok = len(lam) % 2 == 0 or lam[0] > 1
    if not (gaps_ok and odd_ok and is_strict(mu) and all(v >= 2 * i + 1 for v in mu)):
        raise NotInFamily(f"({tuple(lam)}, {mu}) is not in AV x BV")
    emitted: list[int] = []
    while True:
        t = next((r for r, v in enumerate(lam) if v % 2), None)
        if t is None:
            break
        g = len(lam) - t
        for r in range(t, len(lam)):
            lam[r] -= 1
        lam = [v for v in lam if v > 0]
        emitted.append(g)
    return tuple(lam), tuple(sorted(emitted)) + mu


def theta2_inverse(beta: Sequence[int], gamma: Sequence[int]) -> tuple[Partition, Partition]:
    beta, gamma = list(beta), tuple(gamma)
    if (not is_strict(beta) or any(v % 2 or v <= 0 for v in beta)
            or not is_strict(gamma) or any(v <= 0 for v in gamma)):
        raise NotInFamily(f"({tuple(beta)}, {gamma}) is not in De x D")
    n = len(beta)
    limit = n if n % 2 == 0 else n + 1
    small = [v for v in gamma if v <= limit]
    for v in small:
        if v == len(beta) + 1:
            beta = [0] + beta
        for r in range(len(beta) - v, len(beta)):
            beta[r] += 1
    return tuple(beta), gamma[len(small):]


# psi1 -----------------------------------------------------------------------

def _avi_vector(lam: Sequence[int], start: int = 0):
    out = []
    for r, v in enumerate(lam, 1):
        d = v - (2 * (start + r) - 1)
        if d < 0 or d % 8:
            return None
        out.append(d // 8)
    if any(a > b for a, b in zip(out, out[1:])):
        return None
    return out


def psi1_vectors(lam: Sequence[int], mu: Sequence[int]) -> tuple[list[int], list[int]]:
    k = _avi_vector(lam)
    t = _avi_vector(mu, start=len(lam))
    if k is None or t is None:
        raise NotInFamily(f"({tuple(lam)}, {tuple(mu)}) is not in AVI x BVI")
    return k, t


def psi1(lam: Sequence[int], mu: Sequence[int]) -> tuple[Partition, Partition]:
    k, t = psi1_vectors(lam, mu)
    f, pos = first_odd_zero_sequence(k)
    t1 = t[0] if t else INF
    if f == INF and t1 == INF:
        return tuple(lam), tuple(mu)
    if f <= t1:
        m = int(pos)
        del k[m - 1]
        t = [int(f)] + t
    else:
        pos = next((r for r, v in enumerate(k) if v >= t1), len(k))
        k.insert(pos, t1)
        t = t[1:]
    return avi_parts(k), avi_parts(t, start=len(k))


def psi1_monomial(pair) -> tuple[int, int, int, int]:
    lam, mu = pair
    return (-1) ** len(mu), len(lam) + len(mu), 0, sum(lam) + sum(mu)


def psi1_fixed_fold(lam: Sequence[int]) -> Partition:
    k = _avi_vector(lam)
    if k is None:
        raise NotInFamily(f"{tuple(lam)} is not in AVI")
    if len(k) % 2:
        raise OddLength(f"{tuple(lam)} has an odd number of parts")
    if any(len(run) % 2 for run in stat_zero_sequences(k)):
        raise NotFixed(f"{tuple(lam)} is not fixed by psi1")
    lam = tuple(lam)
    return tuple(lam[2 * m] + lam[2 * m + 1] for m in range(len(lam) // 2))


def psi1_unfold(pi: Sequence[int]) -> Partition:
    out: list[int] = []
    for m, v in enumerate(pi, 1):
        s, rem = divmod(v - (8 * m - 4), 16)
        if rem or s < 0:
            raise NotInFamily(f"{tuple(pi)} is not in RI")
        # a fixed K pairs equal entries, so k_{2m-1} = k_{2m} = s
        out += [4 * m - 3 + 8 * s, 4 * m - 1 + 8 * s]
    return tuple(out)


# psi2 -----------------------------------------------------------------------

def psi2(t: SignedTriple) -> SignedTriple:
    a, b = t.a, t.b
    if avii_parts(a) != t.lam or avii_parts(b) != t.mu or a != tuple(sorted(a)) or b != tuple(sorted(b)) \
            or any(v < 0 for v in a + b):
        raise NotInFamily(f"{t} is not in AVII x BVII x ETA")
    if a == b:
        return t
    p = 0
    while True:
        ap = a[p] if p < len(a) else INF
        bp = b[p] if p < len(b) else INF
        if ap != bp:
            break
        p += 1
    if ap > bp:
        na = a[:p] + (b[p],) + tuple(v - 1 for v in a[p:])
        nb = b[:p] + tuple(v + 1 for v in b[p + 1:])
    else:
        nb = b[:p] + (a[p],) + tuple(v - 1 for v in b[p:])
        na = a[:p] + tuple(v + 1 for v in a[p + 1:])
    return SignedTriple.from_vectors(na, nb)


def psi2_monomial(t: SignedTriple) -> tuple[int, int, int, int]:
    return t.sign, t.i + t.j, 0, t.weight


def psi2_fixed_fold(t: SignedTriple) -> Partition:
    if t.lam != t.mu:
        raise NotFixed(f"{t} is not fixed by psi2")
    return tuple(2 * v + 4 * m - 2 for m, v in enumerate(t.lam, 1))


def psi2_unfold(pi: Sequence[int]) -> SignedTriple:
    a = []
    for m, v in enumerate(pi, 1):
        s, rem = divmod(v - (16 * m - 8), 8)
        if rem or s < 0:
            raise NotInFamily(f"{tuple(pi)} is not in RII")
        a.append(s)
    return SignedTriple.from_vectors(a, a)


# registry -------------------------------------------------------------------

INVOLUTIONS = ("phi", "iota", "psi1", "psi2")
BIJECTIONS = ("alpha", "tau", "theta1", "theta2")
MAP_IDS = INVOLUTIONS + BIJECTIONS


def apply(map_id: str, obj, inverse: bool = False):
    """Apply a map to a domain object in the harness's canonical form.

    Involutions take their pair (or triple); alpha takes (i, j, mu, eta),
    tau takes (j, k, mu, eta), theta1/theta2 take (lam, mu).  With
    ``inverse`` the bijections run backwards.
    """
    if map_id == "phi":
        return phi(*obj)
    if map_id == "iota":
        return iota(*obj)
    if map_id == "psi1":
        return psi1(*obj)
    if map_id == "psi2":
        return psi2(obj)
    if map_id == "alpha":
        if inverse:
            i, j = alpha_indices(obj)
            mu, eta = alpha_inverse(obj)
            return (i, j, mu, eta)
        return alpha_forward(*obj)
    if map_id == "tau":
        return tau_inverse(obj) if inverse else tau(*obj)
    if map_id == "theta1":
        return theta1_inverse(*obj) if inverse else theta1(*obj)
    if map_id == "theta2":
        return theta2_inverse(*obj) if inverse else theta2(*obj)
    raise KeyError(map_id)


def weight_of(map_id: str, obj, inverse: bool = False) -> int:
    """q-weight of an object on the forward-domain side (or target side with inverse)."""
    if map_id in ("alpha", "tau") and not inverse:
        base = alpha_base(obj[0], obj[1]) if map_id == "alpha" else tau_base(obj[0], obj[1]).parts
        return sum(base) + sum(obj[2]) + sum(obj[3])
    if map_id == "alpha":
        return sum(obj)
    if map_id == "tau":
        return obj.weight
    if map_id == "psi2":
        return obj.weight
    lam, mu = obj
    w = lam.weight if isinstance(lam, LabeledPartition) else sum(lam)
    return w + sum(mu)


MONOMIALS = {
    "phi": phi_monomial,
    "iota": iota_monomial,
    "psi1": psi1_monomial,
    "psi2": psi2_monomial,
}


def run_map(map_id: str, obj, inverse: bool = False) -> MapReport:
    out = apply(map_id, obj, inverse)
    if map_id in MONOMIALS:
        mono = MONOMIALS[map_id]
        s_in, s_out = mono(obj)[0], mono(out)[0]
    else:
        s_in = s_out = 1
    return MapReport(obj, out, weight_of(map_id, obj, inverse), weight_of(map_id, out, not inverse),
                     s_in, s_out, out == obj)
