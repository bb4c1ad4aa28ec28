"""Bounded exhaustive checks: identities, involutions, bijections,
generating-function cross-checks and the example tables.

Every check returns a :class:`SuiteResult`; failures are recorded, never
raised.  Reports are deterministic so two runs can be compared byte for byte.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import maps
from .catalog import (
    catalog_list,
    concrete_ids,
    default_order,
    eval_product_side,
    eval_sum_side,
    verify_identity,
)
from .families import FamilyId, SignedTriple, enumerate_family, is_member, weighted_gf
from .notation import render, render_parts
from .partitions import Label, LabeledPartition, stat_sol2
from .series import PolyXY, QSeries, first_difference


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    counters: dict = field(default_factory=dict)
    discrepancy: str | None = None

    def fail(self, message: str) -> None:
        # keep the first failure only
        if self.passed:
            self.passed = False
            self.discrepancy = message

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_record(self) -> dict:
        return {"suite": self.suite, "status": self.status,
                "counters": dict(self.counters), "discrepancy": self.discrepancy}

    def __str__(self) -> str:
        counters = " ".join(f"{k}={v}" for k, v in self.counters.items())
        line = f"{self.status.upper():4} {self.suite}"
        if counters:
            line += f"  [{counters}]"
        if self.discrepancy:
            line += f"  first failure: {self.discrepancy}"
        return line


# domains --------------------------------------------------------------------

def _labeled(name: str, params, W: int):
    return enumerate_family(FamilyId(name, tuple(params)), W)


def phi_domain(W: int) -> list:
    out = []
    j = 0
    while j * j <= W:
        for lam in _labeled("AI", (j,), W):
            for mu in enumerate_family(FamilyId("BI", (j,)), W - lam.weight):
                out.append((lam, mu))
        j += 1
    return out


def iota_domain(W: int) -> list:
    out = []
    n = 0
    while n * (n + 1) // 2 <= W:
        for i in range(n + 1):
            j = n - i
            for lam in _labeled("AIII", (i, j), W):
                for mu in enumerate_family(FamilyId("BIII", (i, j)), W - lam.weight):
                    out.append((lam, mu))
        n += 1
    return out


def psi1_domain(W: int) -> list:
    out = []
    i = 0
    while i * i <= W:
        for lam in enumerate_family(FamilyId("AVI", (i,)), W):
            j = 0
            while sum(lam) + 2 * i * j + j * j <= W:
                for mu in enumerate_family(FamilyId("BVI", (i, j)), W - sum(lam)):
                    out.append((lam, mu))
                j += 1
        i += 1
    return out


def psi2_domain(W: int) -> list:
    out = []
    i = 0
    while 3 * i * i <= W:
        for lam in enumerate_family(FamilyId("AVII", (i,)), W):
            j = 0
            while sum(lam) + 3 * j * j + 2 * i * j <= W:
                for mu in enumerate_family(FamilyId("BVII", (j,)), W - sum(lam) - 2 * i * j):
                    out.append(SignedTriple(lam, mu))
                j += 1
        i += 1
    return out


def in_domain(map_id: str, obj) -> bool:
    if map_id == "phi":
        lam, mu = obj
        j = len(lam)
        return is_member(FamilyId("AI", (j,)), lam) and is_member(FamilyId("BI", (j,)), mu)
    if map_id == "iota":
        lam, mu = obj
        p = (lam.count(Label.X), lam.count(Label.NONE))
        return (len(lam) == sum(p) and is_member(FamilyId("AIII", p), lam)
                and is_member(FamilyId("BIII", p), mu))
    if map_id == "psi1":
        lam, mu = obj
        i, j = len(lam), len(mu)
        return is_member(FamilyId("AVI", (i,)), lam) and is_member(FamilyId("BVI", (i, j)), mu)
    if map_id == "psi2":
        return (is_member(FamilyId("AVII", (obj.i,)), obj.lam)
                and is_member(FamilyId("BVII", (obj.j,)), obj.mu))
    raise KeyError(map_id)


DOMAINS: dict[str, Callable[[int], list]] = {
    "phi": phi_domain, "iota": iota_domain, "psi1": psi1_domain, "psi2": psi2_domain,
}

STYLE = {"phi": "AI", "iota": "AIII", "psi1": "FULL", "psi2": "FULL"}


def _monomial(map_id: str, obj):
    return maps.MONOMIALS[map_id](obj)


def _sort_key(map_id: str, obj):
    mono = _monomial(map_id, obj)
    if map_id == "psi2":
        return (mono[3], obj.lam, obj.mu)
    lam, mu = obj
    lk = lam.sort_key() if isinstance(lam, LabeledPartition) else lam
    return (mono[3], lk, mu)


def _gf(objs: Iterable, mono: Callable, order: int) -> QSeries:
    acc: dict[int, dict] = {}
    for obj in objs:
        sign, a, b, w = mono(obj)
        bucket = acc.setdefault(4 * w, {})
        bucket[(a, b)] = bucket.get((a, b), 0) + sign
    return QSeries({e: PolyXY(t) for e, t in acc.items()}, prec=4 * order)


def _compare(result: SuiteResult, label: str, got: QSeries, want: QSeries) -> None:
    diff = first_difference(got, want)
    if diff is not None:
        e, a, b, lhs, rhs = diff
        result.fail(f"{label}: coefficient of x^{a} y^{b} q^{e / 4:g} is {lhs}, expected {rhs}")


# the registered series each involution is checked against
def _signed_target(map_id: str, order: int) -> QSeries:
    return {
        "phi": lambda: eval_product_side("MAIN2", order),
        "iota": lambda: eval_sum_side("HKX3PC", order),
        "psi1": lambda: eval_sum_side("PCY1", order),
        "psi2": lambda: eval_sum_side("PCY2", order),
    }[map_id]()


def _fixed_target(map_id: str, order: int) -> QSeries:
    return {
        "phi": lambda: weighted_gf(FamilyId("Do"), "x^sol2*y^len", order),
        "iota": lambda: eval_product_side("HKX3PC", order),
        "psi1": lambda: eval_product_side("PCY1", order),
        "psi2": lambda: eval_product_side("PCY2", order),
    }[map_id]()


# involutions ----------------------------------------------------------------

def check_involution(map_id: str, max_weight: int) -> SuiteResult:
    result = SuiteResult(f"involution:{map_id}:W={max_weight}")
    if map_id not in maps.INVOLUTIONS:
        result.fail(f"unknown involution {map_id!r}")
        return result
    domain = DOMAINS[map_id](max_weight)
    fixed, pairs = [], 0
    fixed_top = pairs_top = domain_top = 0
    for obj in domain:
        mono = _monomial(map_id, obj)
        top = mono[3] == max_weight
        domain_top += top
        try:
            image = maps.apply(map_id, obj)
        except maps.MapError as exc:
            result.fail(f"{_show(map_id, obj)} raised {exc}")
            continue
        if not in_domain(map_id, image):
            result.fail(f"{_show(map_id, obj)} -> {_show(map_id, image)} leaves the domain")
            continue
        back = maps.apply(map_id, image)
        if back != obj:
            result.fail(f"{_show(map_id, obj)} is not returned by the second application")
        out = _monomial(map_id, image)
        if out[1:] != mono[1:]:
            result.fail(f"{_show(map_id, obj)} -> {_show(map_id, image)} changes the weight")
        if image == obj:
            # fixed points survive cancellation, so they must all count positively
            if mono[0] != 1:
                result.fail(f"{_show(map_id, obj)} is fixed but has sign {mono[0]}")
            fixed.append(obj)
            fixed_top += top
        else:
            pairs += 1
            pairs_top += top
            if out[0] != -mono[0]:
                result.fail(f"{_show(map_id, obj)} -> {_show(map_id, image)} keeps its sign")
    result.counters.update(domain=len(domain), fixed=len(fixed), pairs=pairs // 2,
                           domain_at_weight=domain_top, fixed_at_weight=fixed_top,
                           pairs_at_weight=pairs_top // 2)
    mono = maps.MONOMIALS[map_id]
    _compare(result, "signed domain", _gf(domain, mono, max_weight),
             _signed_target(map_id, max_weight))
    _compare(result, "fixed points", _gf(fixed, mono, max_weight),
             _fixed_target(map_id, max_weight))
    if map_id in ("psi1", "psi2"):
        _check_fold(result, map_id, fixed, max_weight)
    return result


def _check_fold(result: SuiteResult, map_id: str, fixed: list, W: int) -> None:
    """The fold is a weight-preserving bijection from fixed points onto RI / RII."""
    if map_id == "psi1":
        fold, unfold, fam = (lambda o: maps.psi1_fixed_fold(o[0])), maps.psi1_unfold, "RI"
    else:
        fold, unfold, fam = maps.psi2_fixed_fold, maps.psi2_unfold, "RII"
    images = set()
    for obj in fixed:
        pi = fold(obj)
        weight = sum(obj[0]) + sum(obj[1]) if map_id == "psi1" else obj.weight
        if sum(pi) != weight:
            result.fail(f"fold of {_show(map_id, obj)} changes the weight")
        if not is_member(FamilyId(fam, (len(pi),)), pi):
            result.fail(f"fold of {_show(map_id, obj)} is {pi}, outside {fam}")
        back = unfold(pi)
        if (back != obj[0] if map_id == "psi1" else back != obj):
            result.fail(f"unfolding {pi} does not return {_show(map_id, obj)}")
        images.add(pi)
    target = set()
    n = 1
    while True:
        members = enumerate_family(FamilyId(fam, (n,)), W)
        if not members:
            break
        target.update(members)
        n += 1
    target.add(())
    if images != target:
        missing = sorted(target - images)
        result.fail(f"fold misses {fam} members such as {missing[:3]}")
    result.counters["fold_images"] = len(images)
    gf = _gf(images, lambda p: (1, 2 * len(p), 0, sum(p)), W)
    _compare(result, "folded generating function", gf, _fixed_target(map_id, W))


def _show(map_id: str, obj) -> str:
    if map_id == "psi2":
        return "(" + ", ".join(render_parts(c) for c in (obj.lam, obj.mu, obj.eta)) + ")"
    if map_id in DOMAINS:
        lam, mu = obj
        return f"({render(lam, STYLE[map_id])}, {render(mu)})"
    return repr(obj)


# bijections -----------------------------------------------------------------

def alpha_domain(max_len: int, W: int) -> list:
    out = []
    for j in range(max_len // 2 + 1):
        for i in range(max_len - 2 * j + 1):
            base = sum(maps.alpha_base(i, j))
            if base > W:
                continue
            for mu in enumerate_family(FamilyId("E_kn", (2, i)), W - base):
                for eta in enumerate_family(FamilyId("E_kn", (4, j)), W - base - sum(mu)):
                    out.append((i, j, mu, eta))
    return out


def tau_domain(max_jk: int, W: int) -> list:
    out = []
    for j in range(max_jk + 1):
        for k in range(max_jk + 1):
            for mu, eta in enumerate_family(FamilyId("AIIL", (j, k)), W):
                out.append((j, k, mu, eta))
    return out


def _pairs(first: str, second: str, W: int) -> list:
    out = []
    for lam in enumerate_family(FamilyId(first), W):
        for mu in enumerate_family(FamilyId(second), W - sum(lam)):
            out.append((lam, mu))
    return out


def theta1_domain(W: int) -> list:
    out = []
    i = 0
    while i <= W:
        for lam in enumerate_family(FamilyId("AIV", (i,)), W):
            for mu in enumerate_family(FamilyId("BIV", (i,)), W - sum(lam)):
                out.append((lam, mu))
        i += 1
    return out


def theta2_domain(W: int) -> list:
    out = []
    i = 0
    while i * (2 * i - 1) <= W + 1:
        for lam in enumerate_family(FamilyId("AV", (i,)), W):
            for mu in enumerate_family(FamilyId("BV", (i,)), W - sum(lam)):
                out.append((lam, mu))
        i += 1
    return out


def _codomain(map_id: str, bounds: dict) -> list:
    W = bounds["weight"]
    if map_id == "alpha":
        return [p for p in enumerate_family(FamilyId("Do"), W) if len(p) <= bounds["length"]]
    if map_id == "tau":
        out = []
        for j in range(bounds["jk"] + 1):
            for k in range(bounds["jk"] + 1):
                out += enumerate_family(FamilyId("AIIR", (j, k)), W)
        return out
    if map_id == "theta1":
        return _pairs("F", "De", W)
    if map_id == "theta2":
        return _pairs("De", "D", W)
    raise KeyError(map_id)


def _in_codomain(map_id: str, src, out) -> bool:
    if map_id == "alpha":
        i, j = src[0], src[1]
        return (is_member(FamilyId("Do"), out) and len(out) == i + 2 * j
                and stat_sol2(out) == i)
    if map_id == "tau":
        return is_member(FamilyId("AIIR", (src[0], src[1])), out)
    if map_id == "theta1":
        beta, gamma = out
        return (is_member(FamilyId("F"), beta) and is_member(FamilyId("De"), gamma)
                and len(beta) == len(src[0]))
    if map_id == "theta2":
        beta, gamma = out
        return is_member(FamilyId("De"), beta) and is_member(FamilyId("D"), gamma)
    raise KeyError(map_id)


def _target_weight(map_id: str, out) -> int:
    if map_id == "alpha":
        return sum(out)
    if map_id == "tau":
        return out.weight
    return sum(out[0]) + sum(out[1])


DEFAULT_BOUNDS = {
    "alpha": {"length": 6, "weight": 40},
    "tau": {"jk": 4, "weight": 30},
    "theta1": {"weight": 30},
    "theta2": {"weight": 30},
}


def check_bijection(map_id: str, bounds: dict | int | None = None) -> SuiteResult:
    if isinstance(bounds, int):
        bounds = {**DEFAULT_BOUNDS.get(map_id, {}), "weight": bounds}
    bounds = {**DEFAULT_BOUNDS.get(map_id, {}), **(bounds or {})}
    label = ",".join(f"{k}={v}" for k, v in sorted(bounds.items()))
    result = SuiteResult(f"bijection:{map_id}:{label}")
    if map_id not in maps.BIJECTIONS:
        result.fail(f"unknown bijection {map_id!r}")
        return result
    W = bounds["weight"]
    if map_id == "alpha":
        domain = alpha_domain(bounds["length"], W)
    elif map_id == "tau":
        domain = tau_domain(bounds["jk"], W)
    elif map_id == "theta1":
        domain = theta1_domain(W)
    else:
        domain = theta2_domain(W)
    images = {}
    for src in domain:
        try:
            out = maps.apply(map_id, src)
        except maps.MapError as exc:
            result.fail(f"{src} raised {exc}")
            continue
        if not _in_codomain(map_id, src, out):
            result.fail(f"{src} -> {out} lands outside the target family")
        w_in = maps.weight_of(map_id, src)
        if _target_weight(map_id, out) != w_in:
            result.fail(f"{src} -> {out} changes the weight")
        if map_id == "tau":
            base = maps.tau_base(src[0], src[1])
            if out.marker_degrees != base.marker_degrees:
                result.fail(f"{src} -> {out} changes the labels")
        try:
            back = maps.apply(map_id, out, inverse=True)
        except maps.MapError as exc:
            result.fail(f"inverse of {out} raised {exc}")
            continue
        if back != src:
            result.fail(f"inverse of {out} gives {back}, expected {src}")
        if out in images:
            result.fail(f"{src} and {images[out]} share the image {out}")
        images[out] = src
    target = _codomain(map_id, bounds)
    got = Counter(_target_weight(map_id, o) for o in images)
    want = Counter(_target_weight(map_id, o) for o in target)
    for w in sorted(set(got) | set(want)):
        if got[w] != want[w]:
            result.fail(f"weight {w}: {got[w]} images but {want[w]} target members")
            break
    if set(images) != set(target):
        result.fail("image differs from the enumerated target family")
    result.counters.update(domain=len(domain), target=len(target))
    return result


# identities and cross-checks ------------------------------------------------

def check_identity(identity: str, order: int | None = None) -> SuiteResult:
    result = SuiteResult(f"identity:{identity}")
    for cid in concrete_ids(identity):
        n = order if order is not None else default_order(cid)
        report = verify_identity(cid, n)
        result.counters[f"{cid}_order"] = n
        if not report.equal:
            e, a, b, lhs, rhs = report.first_discrepancy
            result.fail(f"{cid}: x^{a} y^{b} q^{e / 4:g}: {lhs} vs {rhs}")
    return result


def check_quarter_grid(identity: str, order: int = 50) -> SuiteResult:
    result = SuiteResult(f"quarter-grid:{identity}:N={order}")
    off = eval_sum_side(identity, order).off_grid()
    result.counters["nonzero_off_grid"] = len(off)
    if off:
        e = min(off)
        result.fail(f"q^{e / 4:g} has coefficient {off[e]}")
    return result


CROSS_CHECKS = {
    ("Do", "DOGF"): ("x^sol2*y^len", "sum"),
    ("R", "RR1"): ("plain", "product"),
    ("R2", "RR2"): ("plain", "product"),
    ("D", "HKX3PC"): ("x^len", "product"),
}


def cross_check_gf(family: str, identity: str, order: int, markers: str | None = None,
                   side: str | None = None) -> SuiteResult:
    default_markers, default_side = CROSS_CHECKS.get((family, identity), ("natural", "sum"))
    markers = markers or default_markers
    side = side or default_side
    result = SuiteResult(f"gf:{family}[{markers}]~{identity}.{side}:N={order}")
    got = weighted_gf(FamilyId.parse(family), markers, order)
    want = (eval_sum_side if side == "sum" else eval_product_side)(identity, order)
    result.counters["terms"] = len(got)
    _compare(result, family, got, want)
    return result


# tables ---------------------------------------------------------------------

def _row(map_id: str, obj) -> str:
    return _show(map_id, obj)


def involution_table(map_id: str, weight: int) -> tuple[list[str], list[tuple[str, str]]]:
    """(fixed rows, [(sign -1 row, sign +1 row)]) at weight exactly ``weight``."""
    domain = [o for o in DOMAINS[map_id](weight) if _monomial(map_id, o)[3] == weight]
    domain.sort(key=lambda o: _sort_key(map_id, o))
    fixed, pairs, seen = [], [], set()
    for obj in domain:
        image = maps.apply(map_id, obj)
        if image == obj:
            fixed.append(_row(map_id, obj))
            continue
        key = _sort_key(map_id, obj)
        if key in seen:
            continue
        seen.add(key)
        seen.add(_sort_key(map_id, image))
        neg, pos = (obj, image) if _monomial(map_id, obj)[0] < 0 else (image, obj)
        pairs.append((_sort_key(map_id, neg), _row(map_id, neg), _row(map_id, pos)))
    pairs.sort(key=lambda t: t[0])
    return fixed, [(a, b) for _, a, b in pairs]


def emit_table(map_id: str, weight: int) -> str:
    fixed, pairs = involution_table(map_id, weight)
    lines = [f"{map_id} at weight {weight}: {len(fixed)} fixed points, {len(pairs)} pairs",
             "fixed points:"]
    lines += [f"  {r}" for r in fixed]
    lines.append("sign=-1  <->  sign=+1")
    width = max((len(a) for a, _ in pairs), default=0)
    lines += [f"  {a.ljust(width)}  <->  {b}" for a, b in pairs]
    return "\n".join(lines) + "\n"


# full run -------------------------------------------------------------------

def run_all(quick: bool = False) -> list[SuiteResult]:
    """Every acceptance-level suite, in a fixed order."""
    results = [check_identity(i, 20 if quick else None) for i in catalog_list()]
    results += [check_quarter_grid(i, 20 if quick else 50) for i in ("CY1", "CY2", "CY3", "CY4")]
    results += [
        check_involution("phi", 14 if quick else 20),
        check_involution("iota", 10 if quick else 15),
        check_involution("psi1", 30 if quick else 60),
        check_involution("psi2", 30 if quick else 60),
    ]
    for m in maps.BIJECTIONS:
        b = dict(DEFAULT_BOUNDS[m])
        if quick:
            b["weight"] = min(b["weight"], 16)
        results.append(check_bijection(m, b))
    results += [
        cross_check_gf("Do", "DOGF", 20),
        cross_check_gf("R", "RR1", 25),
        cross_check_gf("R2", "RR2", 25),
        cross_check_gf("D", "HKX3PC", 20),
    ]
    return results


def format_report(results: list[SuiteResult], as_json: bool = False) -> str:
    if as_json:
        return "\n".join(json.dumps(r.as_record(), sort_keys=True) for r in results) + "\n"
    return "\n".join(str(r) for r in results) + "\n"
