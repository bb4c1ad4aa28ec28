"""The nine acceptance criteria, each at its stated bound.

A summary line per criterion is printed at the end of the pytest run.
"""

import subprocess
import sys
import time

import pytest

from oracles import count, gap_at_least, partitions, strict
from published_tables import IOTA_9_FIXED, IOTA_9_PAIRS, PHI_18_FIXED, PHI_18_PAIRS
from rrbij import harness, maps
from rrbij.catalog import eval_product_side, eval_sum_side, verify_identity
from rrbij.series import PolyXY

SINGLE = ["RR1", "RR2", "ROG1", "ROG2", "CY1", "CY2", "CY3", "CY4", "PCY1", "PCY2", "WZ"]
MULTI = ["HKX1", "HKX2", "HKX3", "LW", "DOGF", "WYR", "MAIN1", "MAIN2", "HKX2PC", "HKX3PC",
         "LWGENY", "LWGENK:1", "LWGENK:2", "LWGENK:3"]


@pytest.mark.criterion(1, "identity suite, all 23 entries exact (N=50 / N=30)")
def test_identity_suite():
    start = time.perf_counter()
    failures = [i for i in SINGLE if not verify_identity(i, 50).equal]
    failures += [i for i in MULTI if not verify_identity(i, 30).equal]
    assert failures == []
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(2, "RR1 q^9 coefficient is 5 on both sides and in both partition classes")
def test_spot_coefficient():
    start = time.perf_counter()
    lhs = eval_sum_side("RR1", 9).coeff(9)
    rhs = eval_product_side("RR1", 9).coeff(9)
    gap2 = count(9, lambda p: gap_at_least(p, 2))
    mod5 = count(9, lambda p: all(v % 5 in (1, 4) for v in p))
    assert lhs == rhs == PolyXY.const(5)
    assert gap2 == mod5 == 5
    assert time.perf_counter() - start < 1


@pytest.mark.criterion(3, "CY1-CY4 sums have no off-grid coefficients at N=50")
def test_quarter_grid():
    for ident in ("CY1", "CY2", "CY3", "CY4"):
        assert eval_sum_side(ident, 50).off_grid() == {}
        assert harness.check_quarter_grid(ident, 50).passed


def _table(map_id, weight):
    fixed, pairs = harness.involution_table(map_id, weight)
    assert len(set(fixed)) == len(fixed) and len(set(pairs)) == len(pairs)
    return set(fixed), set(pairs)


@pytest.mark.criterion(4, "phi suite at W=20; weight-18 table equals the published one")
def test_phi_suite():
    result = harness.check_involution("phi", 20)
    assert result.passed, result.discrepancy
    fixed, pairs = _table("phi", 18)
    assert len(fixed) == 5 and len(pairs) == 26
    assert fixed == PHI_18_FIXED
    assert pairs == PHI_18_PAIRS


@pytest.mark.criterion(5, "iota suite at W=15; weight-9 table and fixed-point slice")
def test_iota_suite():
    result = harness.check_involution("iota", 15)
    assert result.passed, result.discrepancy
    fixed, pairs = _table("iota", 9)
    assert len(fixed) == 8 and len(pairs) == 38
    assert fixed == IOTA_9_FIXED
    assert pairs == IOTA_9_PAIRS
    # fixed points weighted by x^length against (-xq;q)_inf at q^9
    fixed_objs = [o for o in harness.iota_domain(9)
                  if maps.iota_monomial(o)[3] == 9 and maps.apply("iota", o) == o]
    slice9 = {}
    for lam, _ in fixed_objs:
        slice9[len(lam)] = slice9.get(len(lam), 0) + 1
    product = eval_product_side("HKX3PC", 9).coeff(9)
    assert {a: c for (a, _), c in product.items()} == slice9
    brute = {}
    for p in partitions(9):
        if strict(p):
            brute[len(p)] = brute.get(len(p), 0) + 1
    assert slice9 == brute and sum(brute.values()) == 8


@pytest.mark.criterion(6, "psi1 and psi2 suites at W=60 with verified fixed-point folds")
def test_psi_suites():
    for map_id in ("psi1", "psi2"):
        result = harness.check_involution(map_id, 60)
        assert result.passed, result.discrepancy
        assert result.counters["fold_images"] == result.counters["fixed"]


@pytest.mark.criterion(7, "alpha, tau, theta1, theta2 bijection suites and the theta1 example")
def test_bijection_suites():
    bounds = {"alpha": {"length": 6, "weight": 40}, "tau": {"jk": 4, "weight": 30},
              "theta1": {"weight": 30}, "theta2": {"weight": 30}}
    for map_id, b in bounds.items():
        result = harness.check_bijection(map_id, b)
        assert result.passed, result.discrepancy
        assert result.counters["domain"] == result.counters["target"] > 0
    # alpha's bound: every (i, j) with i + 2j <= 6 whose base fits in weight 40
    ij = {(o[0], o[1]) for o in harness.alpha_domain(6, 40)}
    assert ij == {(i, j) for i in range(7) for j in range(4)
                  if i + 2 * j <= 6 and sum(maps.alpha_base(i, j)) <= 40}
    assert maps.theta1((3, 3, 5, 9, 9, 15), (14, 16)) == (
        (1, 1, 1, 5, 5, 9), (2, 8, 12, 14, 16))


@pytest.mark.criterion(8, "generating-function cross-checks")
def test_gf_cross_checks():
    for family, ident, order in [("Do", "DOGF", 20), ("R", "RR1", 25), ("R2", "RR2", 25),
                                 ("D", "HKX3PC", 20)]:
        result = harness.cross_check_gf(family, ident, order)
        assert result.passed, result.discrepancy


@pytest.mark.criterion(9, "two consecutive full runs give byte-identical reports")
def test_determinism():
    def full_run():
        return subprocess.run([sys.executable, "-m", "rrbij", "--json", "run-all"],
                              capture_output=True, check=True).stdout

    first, second = full_run(), full_run()
    assert first == second
    assert first.count(b'"status": "pass"') == len(first.splitlines())
