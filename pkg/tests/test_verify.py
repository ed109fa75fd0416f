import math

import numpy as np
import pytest

from bohrradii.radii import radius_R, radius_rho, radius_S
from bohrradii.series import (
    BlaschkeSample,
    ExtremalFunction,
    blaschke_coefficients,
    bohr_sum,
    extremal_bohr_sum_exact,
    extremal_coefficients,
    order_for_tail,
    quadratic_sum,
    refined_lhs,
    refined_lhs_extremal_exact,
)
from bohrradii.verify import (
    SamplePlan,
    Theorem,
    check_classical,
    check_corollary1,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_theoremB,
    draw_samples,
    run_check,
    sharpness_sweep,
)


def test_plan_validation():
    with pytest.raises(ValueError):
        SamplePlan(2, 0)
    with pytest.raises(ValueError):
        SamplePlan(2, 5, zero_modulus_cap=1.0)
    with pytest.raises(ValueError):
        SamplePlan(2, 5, seed=-1)


def test_samples_deterministic():
    a = draw_samples(SamplePlan(3, 50, seed=123))
    b = draw_samples(SamplePlan(3, 50, seed=123))
    assert a == b
    assert a != draw_samples(SamplePlan(3, 50, seed=124))
    assert max(s.degree for s in a) <= 6
    assert all(abs(w) < 0.95 for s in a for w in s.zeros)


def test_reports_deterministic():
    plan = SamplePlan(2, 60, seed=99)
    assert check_theorem1(plan) == check_theorem1(plan)
    assert check_theorem3(2, 0.4, plan) == check_theorem3(2, 0.4, plan)


def test_theorem1_plan():
    rep = check_theorem1(SamplePlan(2, 500, seed=42))
    assert rep.violations == 0 and rep.samples_checked == 500
    assert rep.max_lhs <= 1.0
    assert rep.witness_lhs == pytest.approx(1.0, abs=1e-10)


def test_theorem1_monomial_at_radius():
    R = radius_R(4)
    cs = blaschke_coefficients(BlaschkeSample(4), 20)
    assert refined_lhs(cs, R, 5).upper == pytest.approx(R**4, rel=1e-14)
    assert R**4 < 1


def test_theorem2_plan_and_witness():
    rep = check_theorem2(SamplePlan(3, 500, seed=7))
    assert rep.violations == 0
    S = radius_S(3)
    assert S**3 * (3 - S) / (2 * (1 - S)) == pytest.approx(1.0, abs=1e-10)
    assert refined_lhs_extremal_exact(ExtremalFunction(3, 1.0), S + 0.01, 3) > 1


def test_theorem3_examples():
    rho = (math.sqrt(5) - 1) / 2
    assert refined_lhs_extremal_exact(ExtremalFunction(2, 1 / math.sqrt(2)), rho) == pytest.approx(
        1.0, abs=1e-12)
    for k, a in ((2, 0.5), (4, 0.9), (11, 0.2)):
        r = radius_rho(k, a) + 0.01
        assert refined_lhs_extremal_exact(ExtremalFunction(k, a), r) > 1
    assert refined_lhs_extremal_exact(ExtremalFunction(2, 0.5), 0.639802) == pytest.approx(
        1.0, abs=1e-5)
    rep = check_theorem3(2, 1 / math.sqrt(2), SamplePlan(2, 200, seed=9))
    assert rep.violations == 0
    assert rep.witness_radius == pytest.approx(rho, abs=1e-12)


def test_theoremB_plan():
    rep = check_theoremB(SamplePlan(2, 500, seed=1))
    assert rep.violations == 0
    assert rep.radius_used == pytest.approx(0.786151, abs=5e-7)
    # the Cauchy-Schwarz branch binds for k = 2
    assert rep.witness_lhs == pytest.approx(1.0, abs=1e-5)


def test_classical_examples():
    # 0.36 > 1/(1 + 1.9) for a = 0.95
    assert extremal_bohr_sum_exact(ExtremalFunction(0, 0.95), 0.36) > 1
    assert extremal_bohr_sum_exact(ExtremalFunction(0, 0.95), 0.34) < 1
    const = blaschke_coefficients(BlaschkeSample(0, (), 2.0), 5)
    assert bohr_sum(const, 1 / 3, start=1).upper == 0.0
    rep = check_classical(SamplePlan(0, 500, seed=4))
    assert rep.violations == 0 and rep.max_lhs <= 1


def test_classical_threshold_is_exact_crossing():
    for a in (0.2, 0.5, 0.9):
        t = 1 / (1 + 2 * a)
        ef = ExtremalFunction(0, a)
        assert extremal_bohr_sum_exact(ef, t) == pytest.approx(1.0, abs=1e-14)
        assert extremal_bohr_sum_exact(ef, t - 1e-3) < 1 < extremal_bohr_sum_exact(ef, t + 1e-3)


def test_corollary1():
    rep = check_corollary1(SamplePlan(2, 200, seed=3))
    assert rep.violations == 0 and rep.max_lhs < 1
    R = radius_R(2)
    ef = ExtremalFunction(2, (1 - R) / (2 * R))
    assert refined_lhs_extremal_exact(ef, R, 3) == pytest.approx(1.0, abs=1e-12)
    plain = extremal_bohr_sum_exact(ef, R)
    assert plain < 1
    assert quadratic_sum(extremal_coefficients(ef, 202), R, 3).value > 0


def test_theorem_hierarchy():
    """For r <= S_k: start=k functional >= start=k+1 functional >= Bohr sum."""
    for k in (2, 5):
        S = radius_S(k)
        for s in draw_samples(SamplePlan(k, 100, seed=31)):
            for r in (S / 3, S / 2, S):
                cs = blaschke_coefficients(s, order_for_tail(k, r))
                th2 = refined_lhs(cs, r, k).value
                th1 = refined_lhs(cs, r, k + 1).value
                assert th2 >= th1 >= bohr_sum(cs, r).value


def test_uncovered_violation_is_counted():
    """Far beyond R_k the extremal series breaks the refined inequality, and
    the harness must see it through the truncated path."""
    k, r = 2, 0.8
    ef = ExtremalFunction(k, (1 - r) / (2 * r))
    fv = refined_lhs(extremal_coefficients(ef, order_for_tail(k, r)), r, k + 1)
    assert fv.value > 1


@pytest.mark.parametrize(
    "theorem, k, a, eps",
    [(Theorem.TH1, 2, None, 0.01), (Theorem.TH2, 2, None, 0.001), (Theorem.TH3, 2, 0.5, 0.01)],
)
def test_sharpness_examples(theorem, k, a, eps):
    [(r, lhs)] = sharpness_sweep(theorem, k, a, [eps])
    assert lhs > 1


def test_sharpness_sweep_errors():
    with pytest.raises(ValueError):
        sharpness_sweep(Theorem.TH2, 100, epsilons=[0.1])
    with pytest.raises(ValueError):
        sharpness_sweep(Theorem.THB, 2)
    with pytest.raises(ValueError):
        sharpness_sweep(Theorem.TH1, 2, epsilons=[0.0])
    with pytest.raises(ValueError):
        sharpness_sweep(Theorem.CLASSICAL, 0, 1.0)


def test_run_check_dispatch():
    plan = SamplePlan(2, 20, seed=0)
    assert run_check("th2", plan).theorem is Theorem.TH2
    assert run_check(Theorem.TH3, plan, a=0.5).theorem is Theorem.TH3
    with pytest.raises(ValueError):
        run_check(Theorem.TH3, plan)


def test_plan_k_only_sets_zero_order():
    zs2 = [s.zeros for s in draw_samples(SamplePlan(2, 10, seed=5))]
    zs3 = [s.zeros for s in draw_samples(SamplePlan(3, 10, seed=5))]
    assert zs2 == zs3
    assert np.all([len(z) <= 6 for z in zs2])
