"""Spectral densities of the cavity ground state and of free space.

The frequency-domain counterparts of the image sums involve two oscillatory
kernels,

    Q(u) = sin(u)/u + cos(u)/u^2 - sin(u)/u^3
    W(u) = sin(u)/u + 3 cos(u)/u^2 - 3 sin(u)/u^3,

whose three terms individually blow up like 1/u^2 as u -> 0 while the sums
stay finite (Q -> 2/3, W -> 0).  Below a splice point the kernels are
evaluated from exact Taylor coefficients to avoid the catastrophic
cancellation; above it the direct formulas are accurate.

The cavity density at frequency omega for a pair of points at equal plate
distance x and transverse offset y is

    sigma_yy = (omega^3 / 4 pi^2) * sum_n { [Q(omega A_n) - Q(omega B_n)]
               + y^2 [W(omega B_n)/B_n^2 - W(omega A_n)/A_n^2] }

with the translated/reflected image distances A_n, B_n.  Restricting the sum
to the n = 0 translated term reproduces the free-space (vacuum) density; the
remainder encodes the plates.  The sums are accumulated pairwise over +-n in
ascending |n| with the n = 0 term last, which keeps several boundary
identities exact in floating point.  All quantities are in internal units
(c = 1), so results scale as omega^3 while every other argument appears as a
frequency-distance product.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np
from numpy.polynomial import polynomial as npoly

from .imagesum import SMOOTHING_WINDOW, TruncationPolicy
from .units import CavityGeometry, FieldPoint, validate_point

#: Kernel arguments below this use the Taylor series; above, the direct form.
SERIES_THRESHOLD = 0.5
_SERIES_TERMS = 10

_FOUR_PI_SQ = 4.0 * math.pi**2
_TWO_PI_SQ = 2.0 * math.pi**2
_TWO_THIRDS = 2.0 / 3.0


def _series_coefficients(cos_weight: int) -> np.ndarray:
    """Taylor coefficients in u^2 of sin(u)/u + w cos(u)/u^2 - w sin(u)/u^3.

    Computed as exact rationals so each coefficient is correctly rounded;
    with ten terms the truncation error at the splice point is ~1e-26.
    """
    coeffs = []
    for m in range(_SERIES_TERMS):
        c = Fraction(1, factorial(2 * m + 1)) - Fraction(cos_weight * (2 * m + 2), factorial(2 * m + 3))
        coeffs.append(float(c if m % 2 == 0 else -c))
    return np.asarray(coeffs)


def _vacuum_coefficients() -> np.ndarray:
    """Taylor coefficients in u^2 of sin(u)/u^3 - cos(u)/u^2 (limit 1/3)."""
    coeffs = []
    for m in range(_SERIES_TERMS):
        c = Fraction(2 * m + 2, factorial(2 * m + 3))
        coeffs.append(float(c if m % 2 == 0 else -c))
    return np.asarray(coeffs)


_Q_COEFFS = _series_coefficients(1)
_W_COEFFS = _series_coefficients(3)
_VAC_COEFFS = _vacuum_coefficients()


def _spliced(u, coeffs, direct):
    arr = np.asarray(u, dtype=float)
    scalar = arr.ndim == 0
    flat = np.atleast_1d(arr)
    if np.any(flat < 0.0) or not np.all(np.isfinite(flat)):
        raise ValueError("kernel argument must be finite and nonnegative")
    out = np.empty_like(flat)
    small = flat < SERIES_THRESHOLD
    if np.any(small):
        us = flat[small]
        out[small] = npoly.polyval(us * us, coeffs)
    big = ~small
    if np.any(big):
        out[big] = direct(flat[big])
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


def _q_direct(u):
    s, c = np.sin(u), np.cos(u)
    u2 = u * u
    return s / u + c / u2 - s / (u2 * u)


def _w_direct(u):
    s, c = np.sin(u), np.cos(u)
    u2 = u * u
    return s / u + 3.0 * c / u2 - 3.0 * s / (u2 * u)


def _vac_direct(u):
    u2 = u * u
    return np.sin(u) / (u2 * u) - np.cos(u) / u2


def q_kernel(u):
    """Oscillatory kernel Q; accepts scalars or arrays, u >= 0.

    Q(0) = 2/3; Q(n pi) = (-1)^n / (n pi)^2.
    """
    return _spliced(u, _Q_COEFFS, _q_direct)


def w_kernel(u):
    """Oscillatory kernel W; accepts scalars or arrays, u >= 0.

    W(0) = 0 with leading term -u^2/15; W(n pi) = 3 (-1)^n / (n pi)^2.
    """
    return _spliced(u, _W_COEFFS, _w_direct)


@dataclass(frozen=True)
class SpectralSample:
    """One spectral-density evaluation: value, truncation-error estimate, cutoff."""

    omega: float
    value: float
    err: float
    terms: int

    def __post_init__(self):
        if self.err < 0.0 or self.terms < 0:
            raise ValueError("error estimate and term count must be nonnegative")


@dataclass(frozen=True)
class SuppressionValue:
    """Density ratio against vacuum; ``db`` is defined only for positive ratios."""

    ratio: float
    db: float | None

    def __post_init__(self):
        if (self.db is not None) != (self.ratio > 0.0):
            raise ValueError("db must be present exactly when the ratio is positive")


def _check_omegas(omegas: np.ndarray) -> None:
    if np.any(omegas <= 0.0) or not np.all(np.isfinite(omegas)):
        raise ValueError("frequencies must be positive and finite")


def _accumulate(pairs: np.ndarray, term0: np.ndarray, accelerate: bool):
    """Row-wise pairwise accumulation: pairs in ascending |n|, n = 0 last.

    Acceleration replaces the plain total with the mean of the trailing
    SMOOTHING_WINDOW symmetric partial sums.  Returns (totals, |last pair|).
    """
    if pairs.shape[-1] == 0:
        return term0.copy(), np.zeros_like(term0)
    partial = np.cumsum(pairs, axis=-1)
    if accelerate:
        k = min(SMOOTHING_WINDOW, pairs.shape[-1])
        totals = term0 + partial[..., -k:].mean(axis=-1)
    else:
        totals = partial[..., -1] + term0
    return totals, np.abs(pairs[..., -1])


def _sigma_diag_values(omegas: np.ndarray, x: float, geometry: CavityGeometry, policy: TruncationPolicy):
    """Vectorized coincident-point density: (values, errs) over an omega array."""
    _check_omegas(omegas)
    L = geometry.L
    N = policy.n_terms
    w = omegas[:, None]
    if N > 0:
        n = np.arange(1, N + 1, dtype=float)[None, :]
        qa = q_kernel(w * (n * L))
        q_bp = q_kernel(w * np.abs(2.0 * x - n * L))
        q_bn = q_kernel(w * np.abs(2.0 * x + n * L))
        pairs = (qa - q_bp) + (qa - q_bn)
    else:
        pairs = np.empty((omegas.size, 0))
    term0 = _TWO_THIRDS - q_kernel(omegas * (2.0 * x))
    totals, last = _accumulate(pairs, term0, policy.accelerate)
    pref = (omegas * omegas * omegas) / _FOUR_PI_SQ
    return pref * totals, pref * last


def _sigma_yy_values(omegas: np.ndarray, point: FieldPoint, geometry: CavityGeometry, policy: TruncationPolicy):
    """Vectorized two-point density: (values, errs) over an omega array."""
    y2 = point.y * point.y
    if y2 == 0.0:
        # includes subnormal y whose square underflows: the y^2 terms are then
        # identically zero and the coincident-point form is the analytic limit
        return _sigma_diag_values(omegas, point.x, geometry, policy)
    _check_omegas(omegas)
    L = geometry.L
    N = policy.n_terms
    w = omegas[:, None]

    def branch(dist2):
        # dist2 >= y^2 > 0 for every image, so the W/dist^2 terms are regular
        u = w * np.sqrt(dist2)[None, :]
        return q_kernel(u), w_kernel(u) / dist2[None, :]

    if N > 0:
        n = np.arange(1, N + 1, dtype=float)
        qa, wa = branch((n * L) ** 2 + y2)
        q_bp, w_bp = branch((2.0 * point.x - n * L) ** 2 + y2)
        q_bn, w_bn = branch((2.0 * point.x + n * L) ** 2 + y2)
        pairs = ((qa - q_bp) + (qa - q_bn)) + y2 * ((w_bp - wa) + (w_bn - wa))
    else:
        pairs = np.empty((omegas.size, 0))
    a2_0 = y2
    b2_0 = (2.0 * point.x) ** 2 + y2
    u_a0 = omegas * math.sqrt(a2_0)
    u_b0 = omegas * math.sqrt(b2_0)
    term0 = (q_kernel(u_a0) - q_kernel(u_b0)) + y2 * (
        w_kernel(u_b0) / b2_0 - w_kernel(u_a0) / a2_0
    )
    totals, last = _accumulate(pairs, term0, policy.accelerate)
    pref = (omegas * omegas * omegas) / _FOUR_PI_SQ
    return pref * totals, pref * last


def sigma_yy(
    omega: float,
    point: FieldPoint,
    geometry: CavityGeometry,
    policy: TruncationPolicy,
) -> SpectralSample:
    """Cavity spectral density between (x, 0) and (x, y) at frequency omega.

    The y^2 W/A^2 combination is evaluated as a single expression; its only
    singular configuration (translated distance 0) occurs at n = 0, y = 0,
    where the whole combination has the analytic limit 0 and the computation
    falls back to the coincident-point form.  ``err`` is the magnitude of the
    last symmetric pair's contribution -- a practical truncation indicator,
    not a rigorous bound.
    """
    validate_point(point, geometry)
    values, errs = _sigma_yy_values(np.asarray([omega], dtype=float), point, geometry, policy)
    return SpectralSample(omega=omega, value=float(values[0]), err=float(errs[0]), terms=policy.n_terms)


def sigma_yy_diag(
    omega: float,
    x: float,
    geometry: CavityGeometry,
    policy: TruncationPolicy,
) -> SpectralSample:
    """Coincident-point cavity density: (omega^3/4 pi^2) sum_n [Q(omega n L) - Q(omega |2x - n L|)].

    The n = 0 term is 2/3 - Q(2 omega x).  Vanishes identically at x = 0
    (every translated term cancels its reflected partner exactly).
    """
    validate_point(FieldPoint(x=x, y=0.0), geometry)
    values, errs = _sigma_diag_values(np.asarray([omega], dtype=float), x, geometry, policy)
    return SpectralSample(omega=omega, value=float(values[0]), err=float(errs[0]), terms=policy.n_terms)


def sigma_vacuum(omega, y: float = 0.0):
    """Free-space spectral density at transverse offset y.

    (omega^3 / 2 pi^2) [sin(omega y)/(omega y)^3 - cos(omega y)/(omega y)^2],
    evaluated through a series splice so the y -> 0 limit omega^3/6 pi^2 comes
    out without cancellation.  Accepts scalar or array omega.
    """
    arr = np.asarray(omega, dtype=float)
    _check_omegas(np.atleast_1d(arr))
    u = arr * abs(y)
    bracket = _spliced(u, _VAC_COEFFS, _vac_direct)
    value = (arr * arr * arr) / _TWO_PI_SQ * bracket
    return float(value) if arr.ndim == 0 else value


def sigma_vacuum_from_kernels(omega: float, y: float) -> float:
    """Vacuum density via the n = 0 translated term of the cavity sum.

    That term is Q(omega A0) - (y^2/A0^2) W(omega A0) with A0 = |y| (so the
    ratio is exactly 1 for y != 0 and the combination limits to Q(0) = 2/3 at
    y = 0), times omega^3/4 pi^2.  Agreement with :func:`sigma_vacuum` is the
    embedding check between the cavity sum and the free-space closed form.
    """
    _check_omegas(np.asarray([omega], dtype=float))
    pref = (omega * omega * omega) / _FOUR_PI_SQ
    if y == 0.0:
        return pref * q_kernel(0.0)
    u = omega * abs(y)
    return pref * (q_kernel(u) - w_kernel(u))


def normalized_difference(
    omega: float,
    x: float,
    geometry: CavityGeometry,
    policy: TruncationPolicy,
) -> float:
    """(sigma(omega, x, x) - sigma_vacuum) / sigma_vacuum at coincident points.

    Equals -1 exactly on a plate and, up to the truncation residual, -1
    everywhere below the cavity cutoff omega = pi/a.
    """
    vac = sigma_vacuum(omega, 0.0)
    return (sigma_yy_diag(omega, x, geometry, policy).value - vac) / vac


def suppression_db(
    omega: float,
    x: float,
    geometry: CavityGeometry,
    policy: TruncationPolicy,
) -> SuppressionValue:
    """Vacuum-fluctuation suppression 10 log10(sigma/sigma_vacuum) at (omega, x).

    Below the cavity cutoff the truncated ratio hovers around zero and may be
    slightly negative; the decibel value is then undefined and only the ratio
    is reported.
    """
    ratio = sigma_yy_diag(omega, x, geometry, policy).value / sigma_vacuum(omega, 0.0)
    db = 10.0 * math.log10(ratio) if ratio > 0.0 else None
    return SuppressionValue(ratio=ratio, db=db)
