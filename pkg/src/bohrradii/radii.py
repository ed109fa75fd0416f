"""Radius equations and their certified bisection.

Four radii are defined as roots in ``(0, 1)``:

* ``r_k``       least positive root of ``r^k m(r) = 1``
* ``R_k``       root of ``s_k(r) = 4(1-r) - r^(k-1) (1 - 2r + 5r^2)``
* ``S_k``       root of ``t_k(r) = 2(1-r) - r^k (3 - r)``
* ``rho_k(a)``  root of ``u_{k,a}(r) = (1+a)(1-r) - r^k [2a^2 + a + r(1 - 2a^2)]``

Every equation is oriented so it is positive left of the root and negative
right of it.  :func:`solve` bisects down to a bracket of width ``1e-13`` and
reports whether the derivative sign argument that makes the root unique
holds on a sampling grid.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

BRACKET_WIDTH = 1e-13
CERT_GRID_POINTS = 1000
SCAN_GRID_POINTS = 10_000
INV_SQRT2 = 1.0 / math.sqrt(2.0)


class SolverError(RuntimeError):
    """Bisection could not produce a certified bracket."""


class RadiusKind(enum.Enum):
    PAULSEN_RK = "paulsen-rk"
    REFINED_RK = "refined-rk"
    REFINED_SK = "refined-sk"
    REFINED_RHO = "refined-rho"


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def _check_open_unit(r):
    r = np.asarray(r, dtype=float)
    if np.any((r < 0) | (r >= 1)) or not np.all(np.isfinite(r)):
        raise ValueError("r must lie in [0, 1)")
    return r


def _check_closed_unit(r):
    r = np.asarray(r, dtype=float)
    if np.any((r < 0) | (r > 1)) or not np.all(np.isfinite(r)):
        raise ValueError("r must lie in [0, 1]")
    return r


def _check_k(k):
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return int(k)


def _check_a(a):
    if not 0.0 < a <= 1.0:
        raise ValueError(f"a must lie in (0, 1], got {a!r}")
    return float(a)


def big_M(r):
    """``1`` on ``[0, 1/3]`` and ``(1 - 2r + 5r^2) / (4r(1-r))`` on ``(1/3, 1)``."""
    r = _check_open_unit(r)
    with np.errstate(divide="ignore", invalid="ignore"):
        upper = (1 - 2 * r + 5 * r * r) / (4 * r * (1 - r))
    return _scalar_or_array(np.where(r <= 1.0 / 3.0, 1.0, upper))


def small_m(r):
    """``min(M(r), 1 / sqrt(1 - r^2))``."""
    r = _check_open_unit(r)
    return _scalar_or_array(np.minimum(big_M(r), 1.0 / np.sqrt(1 - r * r)))


def eval_paulsen(k: int, r):
    """``1 - r^k m(r)``; its least positive zero is ``r_k``."""
    k = _check_k(k)
    r = _check_open_unit(r)
    return _scalar_or_array(1.0 - r**k * small_m(r))


def eval_s(k: int, r):
    k = _check_k(k)
    r = _check_closed_unit(r)
    return _scalar_or_array(4 * (1 - r) - r ** (k - 1) * (1 - 2 * r + 5 * r * r))


def eval_t(k: int, r):
    k = _check_k(k)
    r = _check_closed_unit(r)
    return _scalar_or_array(2 * (1 - r) - r**k * (3 - r))


def eval_u(k: int, a: float, r):
    k = _check_k(k)
    a = _check_a(a)
    r = _check_closed_unit(r)
    return _scalar_or_array(
        (1 + a) * (1 - r) - r**k * (2 * a * a + a + r * (1 - 2 * a * a))
    )


# -- derivative expressions used by the uniqueness arguments ----------------


def s_prime(k: int, r):
    r = np.asarray(r, dtype=float)
    if k == 1:
        return -2 - 10 * r
    return -4 - (k - 1) * r ** (k - 2) + 2 * k * r ** (k - 1) - 5 * (k + 1) * r**k


def s_second_bracket(k: int, r):
    """Quadratic ``(k-1)(k-2) - 2k(k-1) r + 5(k+1)k r^2`` with
    ``s_k'' = -r^(k-3)`` times it."""
    r = np.asarray(r, dtype=float)
    return (k - 1) * (k - 2) - 2 * k * (k - 1) * r + 5 * (k + 1) * k * r * r


def s_second_discriminant(k: int) -> int:
    """Discriminant of :func:`s_second_bracket`, exact in integers."""
    return (2 * k * (k - 1)) ** 2 - 4 * 5 * (k + 1) * k * (k - 1) * (k - 2)


def t_prime(k: int, r):
    r = np.asarray(r, dtype=float)
    return -2 - 3 * k * r ** (k - 1) + (k + 1) * r**k


def u_prime(k: int, a: float, r):
    r = np.asarray(r, dtype=float)
    return -(1 + a) - k * r ** (k - 1) * (2 * a * a + a) - (k + 1) * r**k * (1 - 2 * a * a)


def u_second_factor(k: int, a: float, r):
    """``A(r) = (k-1)(2a^2 + a) - r(k+1)(2a^2 - 1)``; ``u'' = -k r^(k-2) A(r)``."""
    r = np.asarray(r, dtype=float)
    return (k - 1) * (2 * a * a + a) - r * (k + 1) * (2 * a * a - 1)


# -- problems and results -----------------------------------------------------


@dataclass(frozen=True)
class RadiusProblem:
    kind: RadiusKind
    k: int
    a: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", RadiusKind(self.kind))
        object.__setattr__(self, "k", _check_k(self.k))
        if self.kind is RadiusKind.REFINED_RHO:
            if self.a is None:
                raise ValueError("REFINED_RHO needs a value for a")
            object.__setattr__(self, "a", _check_a(self.a))
        elif self.a is not None:
            raise ValueError(f"{self.kind.name} takes no parameter a")

    @property
    def warning(self) -> Optional[str]:
        if self.k == 1:
            return "k = 1 lies outside the range k >= 2 covered by the theorems"
        return None

    def equation(self) -> Callable:
        k, a = self.k, self.a
        if self.kind is RadiusKind.PAULSEN_RK:
            return lambda r: eval_paulsen(k, r)
        if self.kind is RadiusKind.REFINED_RK:
            return lambda r: eval_s(k, r)
        if self.kind is RadiusKind.REFINED_SK:
            return lambda r: eval_t(k, r)
        return lambda r: eval_u(k, a, r)


@dataclass(frozen=True)
class RadiusResult:
    """Outcome of :func:`solve`.

    The root lies in ``[lo, hi]``: the equation is positive at ``lo`` and
    nonpositive at ``hi``.  ``lo`` is therefore a certified lower bound for the
    radius whenever ``monotonicity_certified`` holds.
    """

    problem: RadiusProblem
    root: float
    lo: float
    hi: float
    residual: float
    monotonicity_certified: bool
    iterations: int
    extra_sign_changes: int = 0

    @property
    def bracket_width(self) -> float:
        return self.hi - self.lo

    @property
    def warning(self) -> Optional[str]:
        return self.problem.warning


def bisect(f: Callable[[float], float], lo: float, hi: float, width: float = BRACKET_WIDTH,
           max_iter: int = 200):
    """Shrink ``[lo, hi]`` with ``f(lo) > 0 >= f(hi)`` to width ``<= width``.

    Returns ``(lo, hi, iterations)``.
    """
    flo, fhi = f(lo), f(hi)
    if not (flo > 0 >= fhi):
        raise SolverError(f"no sign change on [{lo}, {hi}]: f = {flo}, {fhi}")
    for it in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            raise SolverError(f"bracket stopped shrinking at width {hi - lo:.3e}")
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= width:
            return lo, hi, it
    raise SolverError(f"no convergence after {max_iter} iterations")


def _certify(p: RadiusProblem) -> bool:
    k, a = p.k, p.a
    if p.kind is RadiusKind.PAULSEN_RK:
        grid = np.linspace(0.0, 1.0, CERT_GRID_POINTS, endpoint=False)
        g = grid**k * small_m(grid)
        return bool(np.all(np.diff(g) >= 0))
    grid = np.linspace(0.0, 1.0, CERT_GRID_POINTS)
    if p.kind is RadiusKind.REFINED_RK:
        if k <= 2:
            return bool(np.all(s_prime(k, grid) < 0))
        return bool(
            s_second_discriminant(k) < 0
            and np.all(s_second_bracket(k, grid) > 0)
            and s_prime(k, 0.0) < 0
        )
    if p.kind is RadiusKind.REFINED_SK:
        return bool(np.all(t_prime(k, grid) < 0))
    if a <= INV_SQRT2 or k == 1:
        return bool(np.all(u_prime(k, a, grid) < 0))
    A1 = -4 * a * a + (k - 1) * a + (k + 1)
    return bool(
        np.all(u_second_factor(k, a, grid) >= 0)
        and A1 >= (1 - a) * (4 * a + 3) >= 0
        and u_prime(k, a, 0.0) < 0
    )


def _paulsen_bracket(k: int):
    """First sign change of ``1 - r^k m(r)`` on the scan grid, plus the count
    of further sign changes."""
    grid = np.arange(SCAN_GRID_POINTS) / SCAN_GRID_POINTS
    vals = eval_paulsen(k, grid)
    changes = np.flatnonzero((vals[:-1] > 0) & (vals[1:] <= 0))
    rises = np.flatnonzero((vals[:-1] <= 0) & (vals[1:] > 0))
    if len(changes):
        i = changes[0]
        return float(grid[i]), float(grid[i + 1]), len(changes) - 1 + len(rises)
    top = math.nextafter(1.0, 0.0)
    if vals[-1] > 0 and eval_paulsen(k, top) <= 0:
        return float(grid[-1]), top, 0
    raise SolverError(f"1 - r^{k} m(r) has no sign change on (0, 1)")


@lru_cache(maxsize=4096)
def solve(p: RadiusProblem) -> RadiusResult:
    """Certified bisection for the radius described by ``p``."""
    if p.warning:
        warnings.warn(p.warning, stacklevel=2)
    f = p.equation()
    extra = 0
    if p.kind is RadiusKind.PAULSEN_RK:
        lo, hi, extra = _paulsen_bracket(p.k)
    else:
        lo, hi = 0.0, 1.0
    lo, hi, iterations = bisect(f, lo, hi)
    root = 0.5 * (lo + hi)
    return RadiusResult(p, root, lo, hi, f(root), _certify(p), iterations, extra)


def radius_r(k: int) -> float:
    return solve(RadiusProblem(RadiusKind.PAULSEN_RK, k)).root


def radius_R(k: int) -> float:
    return solve(RadiusProblem(RadiusKind.REFINED_RK, k)).root


def radius_S(k: int) -> float:
    return solve(RadiusProblem(RadiusKind.REFINED_SK, k)).root


def radius_rho(k: int, a: float) -> float:
    return solve(RadiusProblem(RadiusKind.REFINED_RHO, k, a)).root


def fournier_ruscheweyh_radius(gamma: float) -> float:
    """Bohr constant ``(1 + gamma) / (3 + gamma)`` of the disk ``D_gamma``."""
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"gamma must lie in [0, 1), got {gamma!r}")
    return (1.0 + gamma) / (3.0 + gamma)


def classical_sharpness_threshold(a: float) -> float:
    """``1 / (1 + 2a)``: beyond it the majorant sum of ``(a - z)/(1 - a z)``
    exceeds one."""
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"a must lie in [0, 1], got {a!r}")
    return 1.0 / (1.0 + 2.0 * a)
