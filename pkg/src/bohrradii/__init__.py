"""Bohr-type radii for bounded analytic functions with a multiple zero at the origin."""
from .radii import (
    RadiusKind,
    RadiusProblem,
    RadiusResult,
    SolverError,
    big_M,
    classical_sharpness_threshold,
    eval_s,
    eval_t,
    eval_u,
    fournier_ruscheweyh_radius,
    radius_r,
    radius_R,
    radius_rho,
    radius_S,
    small_m,
    solve,
)
from .series import (
    BlaschkeSample,
    CoefficientSeries,
    ExtremalFunction,
    FunctionalValue,
    SchurSample,
    blaschke_coefficients,
    bohr_sum,
    cauchy_schwarz_bound,
    extremal_bohr_sum_exact,
    extremal_coefficients,
    quadratic_sum,
    refined_lhs,
    refined_lhs_extremal_exact,
)
from .verify import SamplePlan, Theorem, VerificationReport, sharpness_sweep

__version__ = "0.1.0"
