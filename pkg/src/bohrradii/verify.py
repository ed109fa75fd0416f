"""Seeded property checks of the Bohr-type inequalities at the computed radii.

Each ``check_*`` draws a deterministic batch of finite Blaschke products,
evaluates the relevant functional with its certified tail added, and counts
samples whose upper bound violates the inequality.  Checks are run at the
left end of the solver bracket, which lies at or below the exact radius.

Equality witnesses and sharpness sweeps use the closed forms on the extremal
family ``z^k (a - z)/(1 - a z)`` and never touch truncated series.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

import numpy as np

from .radii import (
    RadiusKind,
    RadiusProblem,
    classical_sharpness_threshold,
    solve,
)
from .series import (
    BlaschkeSample,
    CoefficientSeries,
    ExtremalFunction,
    SchurSample,
    blaschke_coefficients,
    bohr_sum,
    cauchy_schwarz_bound,
    extremal_bohr_sum_exact,
    order_for_tail,
    refined_lhs,
    refined_lhs_extremal_exact,
    schur_coefficients,
)

TAIL_TOLERANCE = 1e-15
DEFAULT_EPSILONS = (1e-3, 1e-2, 1e-1)


class Theorem(enum.Enum):
    TH1 = "th1"
    TH2 = "th2"
    TH3 = "th3"
    THB = "thb"
    CLASSICAL = "classical"
    COR1 = "cor1"


@dataclass(frozen=True)
class SamplePlan:
    """Recipe for a deterministic batch of samples.

    Zeros are drawn uniformly (area measure) from the disk of radius
    ``zero_modulus_cap``, the degree uniformly from ``0..max_blaschke_degree``
    and the phase uniformly from ``[0, 2 pi)``.
    """

    k: int
    count: int
    max_blaschke_degree: int = 6
    zero_modulus_cap: float = 0.95
    seed: int = 0

    def __post_init__(self):
        if self.k < 0 or self.count < 1 or self.max_blaschke_degree < 0:
            raise ValueError("invalid sample plan")
        if not 0.0 < self.zero_modulus_cap < 1.0:
            raise ValueError("zero_modulus_cap must lie in (0, 1)")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class VerificationReport:
    theorem: Theorem
    radius_used: float
    samples_checked: int
    max_lhs: float
    violations: int
    witness_radius: Optional[float] = None
    witness_lhs: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _random_zeros(rng, degree, cap):
    radius = cap * np.sqrt(rng.random(degree))
    angle = 2 * np.pi * rng.random(degree)
    return tuple(radius * np.exp(1j * angle))


def draw_samples(plan: SamplePlan) -> list[BlaschkeSample]:
    """The full sample sequence for ``plan``, generated up front."""
    rng = np.random.default_rng(plan.seed)
    out = []
    for _ in range(plan.count):
        degree = int(rng.integers(0, plan.max_blaschke_degree + 1))
        zeros = _random_zeros(rng, degree, plan.zero_modulus_cap)
        out.append(BlaschkeSample(plan.k, zeros, float(2 * np.pi * rng.random())))
    return out


def draw_schur_samples(plan: SamplePlan, a: float) -> list[SchurSample]:
    """Samples with ``|a_k| = a`` exactly.

    ``h`` has degree at most ``max_blaschke_degree - 1`` so the whole inner
    factor stays within the plan's degree cap.
    """
    rng = np.random.default_rng(plan.seed)
    out = []
    for _ in range(plan.count):
        degree = int(rng.integers(0, max(plan.max_blaschke_degree, 1)))
        zeros = _random_zeros(rng, degree, plan.zero_modulus_cap)
        lead = a * np.exp(2j * np.pi * rng.random())
        out.append(SchurSample(plan.k, lead, zeros, float(2 * np.pi * rng.random())))
    return out


def _report(theorem, radius, lhs: Sequence[float], strict=False, bound=1.0, **witness):
    lhs = np.asarray(lhs, dtype=float)
    bad = lhs >= bound if strict else lhs > bound
    return VerificationReport(
        theorem, radius, len(lhs), float(lhs.max()), int(bad.sum()), **witness
    )


def _series(samples: Iterable[BlaschkeSample], k: int, r: float) -> list[CoefficientSeries]:
    order = order_for_tail(k, r, TAIL_TOLERANCE)
    return [blaschke_coefficients(s, order) for s in samples]


def _solve(kind, k, a=None):
    return solve(RadiusProblem(kind, k, a))


def check_theorem1(plan: SamplePlan) -> VerificationReport:
    """Refined functional with the quadratic sum from ``k + 1``, at ``R_k``."""
    k = plan.k
    res = _solve(RadiusKind.REFINED_RK, k)
    r = res.lo
    lhs = [refined_lhs(cs, r, k + 1, require_certified=True).upper
           for cs in _series(draw_samples(plan), k, r)]
    R = res.root
    ef = ExtremalFunction(k, (1 - R) / (2 * R))
    return _report(Theorem.TH1, r, lhs, witness_radius=R,
                   witness_lhs=refined_lhs_extremal_exact(ef, R, k + 1))


def check_theorem2(plan: SamplePlan) -> VerificationReport:
    """Refined functional with the quadratic sum from ``k``, at ``S_k``."""
    k = plan.k
    res = _solve(RadiusKind.REFINED_SK, k)
    r = res.lo
    lhs = [refined_lhs(cs, r, k, require_certified=True).upper
           for cs in _series(draw_samples(plan), k, r)]
    S = res.root
    return _report(Theorem.TH2, r, lhs, witness_radius=S,
                   witness_lhs=refined_lhs_extremal_exact(ExtremalFunction(k, 1.0), S, k))


def check_theorem3(k: int, a: float, plan: SamplePlan) -> VerificationReport:
    """Refined functional from ``k`` at ``rho_k(a)`` over functions with ``|a_k| = a``.

    ``plan.k`` is ignored in favour of ``k``.
    """
    res = _solve(RadiusKind.REFINED_RHO, k, a)
    r = res.lo
    order = order_for_tail(k, r, TAIL_TOLERANCE)
    lhs = [refined_lhs(schur_coefficients(s, order), r, k, require_certified=True).upper
           for s in draw_schur_samples(replace(plan, k=k), a)]
    rho = res.root
    return _report(Theorem.TH3, r, lhs, witness_radius=rho,
                   witness_lhs=refined_lhs_extremal_exact(ExtremalFunction(k, a), rho, k))


def check_theoremB(plan: SamplePlan) -> VerificationReport:
    """Plain Bohr sum at ``r_k``, and the Cauchy-Schwarz majorant at the same radius.

    A sample counts as a violation if either its tail-inflated sum exceeds one
    or exceeds ``r^k / sqrt(1 - r^2)``.
    """
    k = plan.k
    res = _solve(RadiusKind.PAULSEN_RK, k)
    r = res.lo
    cs_bound = cauchy_schwarz_bound(k, r)
    lhs = [bohr_sum(cs, r).upper for cs in _series(draw_samples(plan), k, r)]
    rep = _report(Theorem.THB, r, lhs, witness_radius=res.root,
                  witness_lhs=cauchy_schwarz_bound(k, res.root))
    extra = int(np.sum(np.asarray(lhs) > cs_bound))
    return replace(rep, violations=rep.violations + extra)


def check_classical(plan: SamplePlan, r: float = 1.0 / 3.0) -> VerificationReport:
    """``sum_{n>=1} |a_n| r^n <= 1 - |a_0|`` over B, reported as the full
    majorant sum against one.  ``plan.k`` is ignored."""
    samples = draw_samples(replace(plan, k=0))
    lhs = []
    for cs in _series(samples, 0, r):
        rest = bohr_sum(cs, r, start=1)
        lhs.append(cs.leading + rest.upper)
    return _report(Theorem.CLASSICAL, r, lhs)


def check_corollary1(plan: SamplePlan) -> VerificationReport:
    """Strict inequality ``sum |a_n| r^n < 1`` at ``R_k / 2`` and ``R_k``.

    Also requires ``|a_k| R_k^k < 1`` for the leading term alone.
    """
    k = plan.k
    r = _solve(RadiusKind.REFINED_RK, k).lo
    lhs = []
    for cs in _series(draw_samples(plan), k, r):
        worst = max(bohr_sum(cs, r / 2).upper, bohr_sum(cs, r).upper,
                    cs.leading * r**k)
        lhs.append(worst)
    return _report(Theorem.COR1, r, lhs, strict=True)


def theorem_radius(theorem: Theorem, k: int, a: Optional[float] = None) -> float:
    theorem = Theorem(theorem)
    if theorem is Theorem.TH1:
        return _solve(RadiusKind.REFINED_RK, k).root
    if theorem is Theorem.TH2:
        return _solve(RadiusKind.REFINED_SK, k).root
    if theorem is Theorem.TH3:
        return _solve(RadiusKind.REFINED_RHO, k, a).root
    if theorem is Theorem.CLASSICAL:
        if a is None or not 0.0 <= a < 1.0:
            # a = 1 is the constant function, whose majorant sum is 1 at every r
            raise ValueError("CLASSICAL sweep needs a in [0, 1)")
        return classical_sharpness_threshold(a)
    raise ValueError(f"{theorem.name} has no sharp radius to sweep")


def sharpness_sweep(theorem: Theorem, k: int, a: Optional[float] = None,
                    epsilons: Sequence[float] = DEFAULT_EPSILONS) -> list[tuple[float, float]]:
    """Exact extremal left-hand sides just beyond the sharp radius.

    Returns ``(r, lhs)`` pairs at ``r = radius + eps``; sharpness means every
    ``lhs > 1``.  For TH1 the extremal parameter is re-optimised as
    ``a = (1 - r) / (2r)`` clamped to ``[0, 1]``.  CLASSICAL sweeps the full
    majorant sum of ``(a - z)/(1 - a z)`` past ``1/(1 + 2a)``.
    """
    theorem = Theorem(theorem)
    base = theorem_radius(theorem, k, a)
    out = []
    for eps in epsilons:
        if eps <= 0:
            raise ValueError("epsilons must be positive")
        r = base + eps
        if r >= 1:
            raise ValueError(f"radius {base:.6f} + {eps} leaves the unit disk")
        if theorem is Theorem.TH1:
            ef = ExtremalFunction(k, min(max((1 - r) / (2 * r), 0.0), 1.0))
            lhs = refined_lhs_extremal_exact(ef, r, k + 1)
        elif theorem is Theorem.TH2:
            lhs = refined_lhs_extremal_exact(ExtremalFunction(k, 1.0), r, k)
        elif theorem is Theorem.TH3:
            lhs = refined_lhs_extremal_exact(ExtremalFunction(k, a), r, k)
        else:
            lhs = extremal_bohr_sum_exact(ExtremalFunction(0, a), r)
        out.append((r, lhs))
    return out


CHECKS = {
    Theorem.TH1: check_theorem1,
    Theorem.TH2: check_theorem2,
    Theorem.THB: check_theoremB,
    Theorem.CLASSICAL: check_classical,
    Theorem.COR1: check_corollary1,
}


def run_check(theorem: Theorem, plan: SamplePlan, a: Optional[float] = None) -> VerificationReport:
    theorem = Theorem(theorem)
    if theorem is Theorem.TH3:
        if a is None:
            raise ValueError("TH3 needs a value for a")
        return check_theorem3(plan.k, a, plan)
    return CHECKS[theorem](plan)
