import itertools

import pytest

from oracles import partitions, strict
from rrbij.catalog import eval_product_side, eval_sum_side
from rrbij.families import (
    FamilyId,
    SignedTriple,
    UnknownFamily,
    WrongObjectKind,
    enumerate_family,
    is_member,
    weighted_gf,
)
from rrbij.partitions import Label, LabeledPartition, stat_sol2
from rrbij.series import PolyXY

W = 14


def upto(w):
    return [p for n in range(w + 1) for p in partitions(n)]


def fam(text):
    return FamilyId.parse(text)


def test_family_id_parsing():
    assert fam("AI(2)") == fam("AI_2") == FamilyId("AI", (2,))
    assert fam("BVI(1,2)").params == (1, 2)
    assert str(fam("E_kn(2,3)")) == "E_kn(2,3)"
    assert fam("R2") == FamilyId("R2")
    with pytest.raises(UnknownFamily):
        fam("AI")
    with pytest.raises(UnknownFamily):
        fam("Nope")


ORACLES = {
    "R": lambda p: all(b - a >= 2 for a, b in zip(p, p[1:])),
    "R2": lambda p: all(b - a >= 2 for a, b in zip(p, p[1:])) and (not p or p[0] >= 2),
    "D": strict,
    "Do": lambda p: strict(p) and all(v % 2 for v in p),
    "De": lambda p: strict(p) and all(v % 2 == 0 for v in p),
    "F": lambda p: all(v % 4 == 1 for v in p),
    "Ek(3)": lambda p: all(v % 3 == 0 for v in p),
    "E_kn(2,2)": lambda p: all(v % 2 == 0 for v in p) and len(p) <= 2,
    "AIV(2)": lambda p: len(p) == 2 and all(v % 2 for v in p),
    "BIV(1)": lambda p: strict(p) and all(v % 2 == 0 and v >= 4 for v in p),
    "AV(1)": lambda p: len(p) == 2 and p[1] - p[0] >= 2 or len(p) == 1 and p[0] >= 2,
    "AV(2)": lambda p: (len(p) == 4 or len(p) == 3 and p[0] >= 2)
    and all(b - a >= 2 for a, b in zip(p, p[1:])),
    "BV(1)": lambda p: strict(p) and all(v >= 3 for v in p),
    "BI(1)": lambda p: strict(p) and all(v % 2 and v >= 3 for v in p),
    "AVI(2)": lambda p: len(p) == 2 and p[0] % 8 == 1 and p[1] % 8 == 3 and p[1] - p[0] >= 2,
}


@pytest.mark.parametrize("name", sorted(ORACLES))
def test_enumeration_matches_brute_force(name):
    f = fam(name)
    want = sorted(p for p in upto(W) if ORACLES[name](p))
    got = enumerate_family(f, W)
    assert got == want
    assert all(is_member(f, p) for p in got)


@pytest.mark.parametrize("name", ["AI(2)", "AIII(1,1)", "AIIR(1,1)"])
def test_labeled_enumeration_matches_membership(name):
    f = fam(name)
    brute = set()
    for p in upto(12):
        if not strict(p):
            continue
        for labels in itertools.product(list(Label), repeat=len(p)):
            lp = LabeledPartition(p, labels)
            if is_member(f, lp):
                brute.add(lp)
    got = enumerate_family(f, 12)
    assert len(got) == len(set(got))
    assert set(got) == brute


def test_spec_examples():
    assert [p for p in enumerate_family(fam("R"), 9) if sum(p) == 9] == [
        (1, 3, 5), (1, 8), (2, 7), (3, 6), (9,)]
    assert enumerate_family(fam("Do"), 0) == [()]
    assert [p for p in enumerate_family(fam("De"), 6) if sum(p) == 6] == [(2, 4), (6,)]
    assert is_member(fam("AV(1)"), (1, 3))
    assert is_member(fam("AV(2)"), (2, 4, 6))
    assert is_member(fam("RI(1)"), (4,))


def test_ai_xy_label_needs_room():
    f = fam("AI(2)")
    assert is_member(f, LabeledPartition((1, 5), (Label.XY, Label.Y)))
    assert not is_member(f, LabeledPartition((1, 3), (Label.XY, Label.Y)))


def test_wrong_object_kind():
    with pytest.raises(WrongObjectKind):
        is_member(fam("AI(1)"), (1,))
    with pytest.raises(WrongObjectKind):
        is_member(fam("MII(1)"), (3,))


def test_signed_triple():
    t = SignedTriple((3,), (3, 9))
    assert t.eta == (2, 2)
    assert t.weight == 3 + 12 + 4
    assert t.sign == -1                # C(-1, 2) = 1
    assert SignedTriple.from_vectors((0,), (0, 0)) == t


def test_do_gf_small_coefficient():
    gf = weighted_gf(fam("Do"), "x^sol2*y^len", 10)
    assert gf.coeff(1) == PolyXY.monomial(1, 1, 1)


def test_do_gf_matches_brute_force():
    gf = weighted_gf(fam("Do"), "x^sol2*y^len", 16)
    for n in range(17):
        want = {}
        for p in partitions(n):
            if strict(p) and all(v % 2 for v in p):
                key = (stat_sol2(p), len(p))
                want[key] = want.get(key, 0) + 1
        assert gf.coeff(n).terms == want


def test_gf_matches_catalog_sides():
    assert weighted_gf(fam("Do"), "x^sol2*y^len", 20) == eval_sum_side("DOGF", 20)
    assert weighted_gf(fam("D"), "x^len", 20) == eval_product_side("HKX3PC", 20)


def test_sol2_run_count_property():
    for p in upto(30):
        if strict(p) and all(v % 2 for v in p):
            runs, cur = 0, 0
            even = 0
            for k, v in enumerate(p):
                if k == 0 or v - p[k - 1] != 2:
                    if cur:
                        runs += 1
                        even += cur % 2 == 0
                    cur = 0
                cur += 1
            if cur:
                runs += 1
                even += cur % 2 == 0
            assert stat_sol2(p) + even == runs
