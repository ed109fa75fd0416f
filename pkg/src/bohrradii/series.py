"""Coefficient-modulus series for members of the Schwarz classes B and B_k.

A function ``f(z) = sum_{n>=k} a_n z^n`` bounded by one on the unit disk is
represented by the moduli ``|a_k|, ..., |a_N|`` of a finite prefix.  Every
functional evaluated here returns a :class:`FunctionalValue` whose
``tail_bound`` covers the discarded coefficients, so ``value`` and
``value + tail_bound`` bracket the exact functional from below and above.

The tails rely on ``|a_n| <= 1``, which holds for every member of B.  Series
known to be polynomials (``terminates=True``) carry a zero tail.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.signal import lfilter

DEFAULT_EXTRA_TERMS = 200


def _check_radius(r: float, *, open_left: bool = False) -> float:
    r = float(r)
    if not math.isfinite(r) or r >= 1.0 or r < 0.0 or (open_left and r == 0.0):
        interval = "(0, 1)" if open_left else "[0, 1)"
        raise ValueError(f"radius must lie in {interval}, got {r!r}")
    return r


def _check_order(k: int, order: int) -> int:
    if order < k:
        raise ValueError(f"truncation order {order} is below the zero order {k}")
    return int(order)


@dataclass(frozen=True)
class CoefficientSeries:
    """Moduli ``|a_k|, ..., |a_N|`` of a power series with a zero of order ``k``.

    ``unit_bound_certified`` asserts ``|a_n| <= 1`` for *all* n, including the
    untracked ones beyond ``truncation_order``.  ``terminates`` asserts that
    every untracked coefficient is zero.
    """

    k: int
    moduli: np.ndarray
    truncation_order: int
    unit_bound_certified: bool = True
    terminates: bool = False

    def __post_init__(self):
        moduli = np.array(self.moduli, dtype=float)
        if moduli.ndim != 1:
            raise ValueError("moduli must be one-dimensional")
        if self.k < 0:
            raise ValueError("zero order k must be nonnegative")
        if len(moduli) != self.truncation_order - self.k + 1:
            raise ValueError(
                f"expected {self.truncation_order - self.k + 1} moduli, got {len(moduli)}"
            )
        if np.any(moduli < 0):
            raise ValueError("moduli must be nonnegative")
        if self.unit_bound_certified and np.any(moduli > 1.0 + 1e-12):
            raise ValueError("certified series has a modulus above 1")
        moduli.setflags(write=False)
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def from_moduli(cls, k: int, moduli: Sequence[float], **flags) -> "CoefficientSeries":
        moduli = np.asarray(moduli, dtype=float)
        return cls(k, moduli, k + len(moduli) - 1, **flags)

    @property
    def leading(self) -> float:
        """``|a_k|``, the first possibly nonzero modulus."""
        return float(self.moduli[0])

    def truncated(self, order: int) -> "CoefficientSeries":
        """Prefix up to ``order``; the result no longer terminates unless the
        dropped part is all zero."""
        _check_order(self.k, order)
        if order > self.truncation_order:
            raise ValueError("cannot extend a series by truncation")
        dropped = self.moduli[order - self.k + 1:]
        return CoefficientSeries(
            self.k,
            self.moduli[: order - self.k + 1],
            order,
            self.unit_bound_certified,
            self.terminates and not np.any(dropped),
        )


@dataclass(frozen=True)
class FunctionalValue:
    """Truncated value of a nonnegative series functional plus its tail bound.

    The exact functional lies in ``[value, value + tail_bound]`` whenever
    ``certified`` is true.  Uncertified values carry an infinite tail.
    """

    value: float
    tail_bound: float
    certified: bool = True

    @property
    def upper(self) -> float:
        return self.value + self.tail_bound


@dataclass(frozen=True)
class ExtremalFunction:
    """The family ``z^k (a - z) / (1 - a z)`` with real ``a`` in ``[0, 1]``."""

    k: int
    a: float

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("zero order k must be nonnegative")
        if not 0.0 <= self.a <= 1.0:
            raise ValueError(f"parameter a must lie in [0, 1], got {self.a!r}")

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if self.a == 1.0:
            return z**self.k
        return z**self.k * (self.a - z) / (1 - self.a * z)


@dataclass(frozen=True)
class BlaschkeSample:
    """``z^k e^{i rotation} prod_j (alpha_j - z) / (1 - conj(alpha_j) z)``."""

    k: int
    zeros: tuple = ()
    rotation: float = 0.0

    def __post_init__(self):
        zeros = tuple(complex(w) for w in self.zeros)
        if self.k < 0:
            raise ValueError("zero order k must be nonnegative")
        if any(abs(w) >= 1.0 for w in zeros):
            raise ValueError("Blaschke zeros must lie in the open unit disk")
        object.__setattr__(self, "zeros", zeros)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = z**self.k * np.exp(1j * self.rotation)
        for w in self.zeros:
            out = out * (w - z) / (1 - np.conj(w) * z)
        return out

    def inner(self) -> "BlaschkeSample":
        """The factor ``g`` in ``f = z^k g``."""
        return BlaschkeSample(0, self.zeros, self.rotation)


@dataclass(frozen=True)
class SchurSample:
    """``z^k (c - z h(z)) / (1 - conj(c) z h(z))`` with ``h`` a finite Blaschke
    product given by ``zeros`` and ``rotation``.

    The inner factor takes the value ``c`` at the origin, so ``|a_k| = |c|``
    exactly.  With no zeros this is ``z^k`` times a rotated disk automorphism.
    """

    k: int
    lead: complex
    zeros: tuple = ()
    rotation: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "lead", complex(self.lead))
        if abs(self.lead) > 1.0:
            raise ValueError("leading coefficient must have modulus at most 1")
        BlaschkeSample(0, self.zeros, self.rotation)  # validates the zeros
        object.__setattr__(self, "zeros", tuple(complex(w) for w in self.zeros))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        zh = z * BlaschkeSample(0, self.zeros, self.rotation)(z)
        c = self.lead
        if abs(c) == 1.0:
            return z**self.k * c * np.ones_like(z)
        return z**self.k * (c - zh) / (1 - np.conj(c) * zh)


# -- coefficient arithmetic -------------------------------------------------


def reciprocal_series(den: Sequence[complex], order: int) -> np.ndarray:
    """First ``order + 1`` Taylor coefficients of ``1 / den(z)``.

    ``den`` lists polynomial coefficients in ascending powers with
    ``den[0] != 0``.  Uses the convolution recurrence
    ``c_n = -(den_1 c_{n-1} + ... + den_d c_{n-d}) / den_0``.
    """
    den = np.asarray(den, dtype=complex)
    if den[0] == 0:
        raise ZeroDivisionError("constant term of the denominator vanishes")
    impulse = np.zeros(order + 1, dtype=complex)
    impulse[0] = 1.0
    return lfilter([1.0], den, impulse)


def rational_series(num: Sequence[complex], den: Sequence[complex], order: int) -> np.ndarray:
    """Taylor coefficients of ``num / den`` up to ``z^order``."""
    recip = reciprocal_series(den, order)
    return np.convolve(np.asarray(num, dtype=complex), recip)[: order + 1]


def _blaschke_polys(zeros, rotation):
    num = np.array([np.exp(1j * rotation)])
    den = np.array([1.0 + 0j])
    for w in zeros:
        num = np.convolve(num, [w, -1.0])
        den = np.convolve(den, [1.0, -np.conj(w)])
    return num, den


def _from_complex(k, coeffs, order, terminates=False):
    moduli = np.minimum(np.abs(coeffs[k: order + 1]), 1.0)
    return CoefficientSeries(k, moduli, order, True, terminates)


def blaschke_complex_coefficients(s: BlaschkeSample, order: int) -> np.ndarray:
    """Complex coefficients ``a_0, ..., a_order`` of a :class:`BlaschkeSample`."""
    _check_order(s.k, order)
    num, den = _blaschke_polys(s.zeros, s.rotation)
    inner = rational_series(num, den, order - s.k)
    out = np.zeros(order + 1, dtype=complex)
    out[s.k:] = inner
    return out


def blaschke_coefficients(s: BlaschkeSample, order: int | None = None) -> CoefficientSeries:
    """Coefficient moduli of ``s`` up to ``order`` (default ``k + 200``).

    Rounding can push a modulus a few ulps above one; those are clipped to
    one, which is a valid bound since ``|a_n| <= 1`` holds exactly.
    """
    if order is None:
        order = s.k + DEFAULT_EXTRA_TERMS
    coeffs = blaschke_complex_coefficients(s, order)
    return _from_complex(s.k, coeffs, order, terminates=s.degree == 0)


def schur_coefficients(s: SchurSample, order: int | None = None) -> CoefficientSeries:
    """Coefficient moduli of a :class:`SchurSample`; ``moduli[0] == |lead|``."""
    if order is None:
        order = s.k + DEFAULT_EXTRA_TERMS
    _check_order(s.k, order)
    out = np.zeros(order + 1, dtype=complex)
    c = s.lead
    if abs(c) == 1.0:
        out[s.k] = c
        return _from_complex(s.k, out, order, terminates=True)
    num_h, den_h = _blaschke_polys(s.zeros, s.rotation)
    z_num_h = np.concatenate([[0.0], num_h])
    width = max(len(den_h), len(z_num_h))
    den_h = np.pad(den_h, (0, width - len(den_h)))
    z_num_h = np.pad(z_num_h, (0, width - len(z_num_h)))
    num = c * den_h - z_num_h
    den = den_h - np.conj(c) * z_num_h
    out[s.k:] = rational_series(num, den, order - s.k)
    out[s.k] = c
    return _from_complex(s.k, out, order)


def extremal_coefficients(ef: ExtremalFunction, order: int | None = None) -> CoefficientSeries:
    """Moduli ``a, (1-a^2), (1-a^2) a, (1-a^2) a^2, ...`` of the extremal function."""
    k, a = ef.k, ef.a
    if order is None:
        order = k + DEFAULT_EXTRA_TERMS
    _check_order(k, order)
    moduli = np.zeros(order - k + 1)
    moduli[0] = a
    if order > k:
        # a**0 == 1 covers the a = 0 limit (single term at k + 1)
        moduli[1:] = (1.0 - a * a) * a ** np.arange(order - k)
    return CoefficientSeries(k, moduli, order, True, terminates=a in (0.0, 1.0))


def order_for_tail(k: int, r: float, tol: float = 1e-15, minimum: int | None = None) -> int:
    """Smallest truncation order ``N`` with ``r^(N+1) / (1 - r) <= tol``."""
    r = _check_radius(r)
    floor = k + DEFAULT_EXTRA_TERMS if minimum is None else minimum
    if r == 0.0:
        return max(k, floor)
    n = math.ceil(math.log(tol * (1.0 - r)) / math.log(r)) - 1
    return max(k, floor, n)


# -- functionals -------------------------------------------------------------


def _powers(r, start, stop, step=1):
    # r**0 for r == 0 is 1, which is what the n = 0 term needs
    return r ** (step * np.arange(start, stop + 1, dtype=float))


def bohr_sum(cs: CoefficientSeries, r: float, start: int | None = None) -> FunctionalValue:
    """Majorant sum ``sum_{n>=start} |a_n| r^n`` (``start`` defaults to ``k``)."""
    r = _check_radius(r)
    start = cs.k if start is None else start
    if start < cs.k:
        raise ValueError("start lies below the zero order")
    N = cs.truncation_order
    terms = cs.moduli[start - cs.k:] * _powers(r, start, N)
    value = math.fsum(terms)
    if cs.terminates:
        return FunctionalValue(value, 0.0)
    if not cs.unit_bound_certified:
        return FunctionalValue(value, math.inf, certified=False)
    return FunctionalValue(value, r ** (N + 1) / (1.0 - r))


def quadratic_sum(cs: CoefficientSeries, r: float, start: int) -> FunctionalValue:
    """``sum_{n>=start} |a_n|^2 r^(2n)`` for ``start`` in ``{k, k+1}``."""
    r = _check_radius(r)
    if start not in (cs.k, cs.k + 1):
        raise ValueError(f"start must be k={cs.k} or k+1, got {start}")
    N = cs.truncation_order
    m = cs.moduli[start - cs.k:]
    value = math.fsum(m * m * _powers(r, start, N, step=2))
    if cs.terminates:
        return FunctionalValue(value, 0.0)
    if not cs.unit_bound_certified:
        return FunctionalValue(value, math.inf, certified=False)
    return FunctionalValue(value, r ** (2 * (N + 1)) / (1.0 - r * r))


def refined_weight(k: int, leading: float, r: float) -> float:
    """``r^-k / (1 + |a_k|) + r^(1-k) / (1 - r)``."""
    return r**-k / (1.0 + leading) + r ** (1 - k) / (1.0 - r)


def refined_lhs(
    cs: CoefficientSeries,
    r: float,
    start: int | None = None,
    require_certified: bool = False,
) -> FunctionalValue:
    """Bohr sum plus the weighted quadratic sum.

    ``start = k + 1`` gives the functional bounded on ``[0, R_k]``;
    ``start = k`` (the default) the one bounded on ``[0, S_k]`` and
    ``[0, rho_k(a)]``.  With ``k = 0, start = 1`` the weight reduces to
    ``1/(1+|a_0|) + r/(1-r)``, the base refined inequality on B.
    """
    r = _check_radius(r, open_left=True)
    start = cs.k if start is None else start
    lin = bohr_sum(cs, r)
    quad = quadratic_sum(cs, r, start)
    certified = lin.certified and quad.certified
    if require_certified and not certified:
        raise ValueError("series has no certified unit bound; refusing to bound the tail")
    w = refined_weight(cs.k, cs.leading, r)
    return FunctionalValue(
        lin.value + w * quad.value, lin.tail_bound + w * quad.tail_bound, certified
    )


def refined_majorant(k: int, leading: float, r: float, start: int) -> float:
    """Upper bound for :func:`refined_lhs` that depends only on ``|a_k|``.

    ``start = k + 1``: ``r^k (a + r (1 - a^2) / (1 - r))``;
    ``start = k``:     ``r^k (a + r / (1 - r) + a^2 / (1 + a))``.
    """
    a = leading
    if start == k + 1:
        return r**k * (a + r * (1.0 - a * a) / (1.0 - r))
    if start == k:
        return r**k * (a + r / (1.0 - r) + a * a / (1.0 + a))
    raise ValueError("start must be k or k+1")


def pvw_majorant(a0: float, r: float) -> float:
    """Right side ``|a_0| + r (1 - |a_0|^2) / (1 - r)`` of the refined inequality
    on the full class B."""
    r = _check_radius(r)
    return a0 + r / (1.0 - r) * (1.0 - a0 * a0)


def extremal_bohr_sum_exact(ef: ExtremalFunction, r: float) -> float:
    """Closed form ``a r^k + (1 - a^2) r^(k+1) / (1 - a r)``."""
    r = _check_radius(r)
    k, a = ef.k, ef.a
    return a * r**k + (1.0 - a * a) * r ** (k + 1) / (1.0 - a * r)


def extremal_quadratic_sum_exact(ef: ExtremalFunction, r: float, start: int) -> float:
    r = _check_radius(r)
    k, a = ef.k, ef.a
    tail = (1.0 - a * a) ** 2 * r ** (2 * k + 2) / (1.0 - a * a * r * r)
    if start == k + 1:
        return tail
    if start == k:
        return a * a * r ** (2 * k) + tail
    raise ValueError("start must be k or k+1")


def refined_lhs_extremal_exact(ef: ExtremalFunction, r: float, start: int | None = None) -> float:
    """Closed form of :func:`refined_lhs` on the extremal family.

    ``start = k``:     ``r^k [2a^2 + a + r (1 - 2a^2)] / ((1 + a)(1 - r))``
    ``start = k + 1``: ``a r^k + r^(k+1) (1 - a^2) / (1 - r)``
    """
    r = _check_radius(r, open_left=True)
    k, a = ef.k, ef.a
    start = k if start is None else start
    if start == k:
        return r**k * (2 * a * a + a + r * (1 - 2 * a * a)) / ((1 + a) * (1 - r))
    if start == k + 1:
        return a * r**k + r ** (k + 1) * (1 - a * a) / (1 - r)
    raise ValueError("start must be k or k+1")


def cauchy_schwarz_bound(k: int, r: float) -> float:
    """``r^k / sqrt(1 - r^2)``, which dominates the Bohr sum of any member of B_k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    r = _check_radius(r)
    return r**k / math.sqrt(1.0 - r * r)
