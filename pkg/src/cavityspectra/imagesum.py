"""Image sums for the equal-time-slice two-point function between the plates.

The ground-state correlation of the transverse (y) electric-field component
between two perfectly conducting plates at x = 0 and x = a is built from sums
over mirror images spaced by the period L = 2a.  Two routes are provided:

* a closed form for the equal-x two-point function, with image distances
  A_n = sqrt((nL)^2 + y^2) (translated copies) and
  B_n = sqrt((2x - nL)^2 + y^2) (reflected copies);
* the scalar image sums themselves plus a finite-difference Laplacian
  (d^2/dx^2 + d^2/dz^2), which serves as an independent cross-check of the
  closed form.

Everything operates in internal units (c = 1).  Evaluations near a pole of
the correlation function (time separation on an image light cone) raise
:class:`~cavityspectra.errors.LightConeProximity` instead of returning a
meaningless huge number.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LightConeProximity
from .units import CavityGeometry, FieldPoint, validate_point

#: Refuse to evaluate when a squared pole separation is closer than this.
GUARD_BAND = 1e-6

_FOUR_PI_SQ = 4.0 * math.pi**2
_PI_SQ = math.pi**2

#: Number of trailing symmetric partial sums averaged when a policy asks for
#: acceleration (used by the spectral module; defined with the policy type).
SMOOTHING_WINDOW = 8


@dataclass(frozen=True)
class SpacetimePoint:
    """Event (t, x, y, z) in internal units."""

    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"coordinate {name} must be finite")


@dataclass(frozen=True)
class ImageDistances:
    """Distances to the n-th translated (A) and reflected (B) image."""

    n: int
    A: float
    B: float


@dataclass(frozen=True)
class TruncationPolicy:
    """Symmetric truncation of the image sums.

    ``n_terms`` is the cutoff N: image indices n in [-N, N] are included.
    With ``pair_symmetric`` the +n and -n terms are accumulated together in
    ascending |n| and the n = 0 term is added last; this symmetric order is
    also what makes several boundary cancellations exact in floating point.
    ``accelerate`` averages the trailing symmetric partial sums (Cesaro
    style) to damp the oscillatory tail of the spectral sums.
    """

    n_terms: int = 1000
    accelerate: bool = False
    pair_symmetric: bool = True

    def __post_init__(self):
        if self.n_terms < 0:
            raise ValueError("cutoff must be nonnegative")


def image_distances(n: int, point: FieldPoint, geometry: CavityGeometry) -> ImageDistances:
    """Distances from the source to its n-th translated and reflected image."""
    L = geometry.L
    a_dist = math.hypot(n * L, point.y)
    b_dist = math.hypot(2.0 * point.x - n * L, point.y)
    return ImageDistances(n=n, A=a_dist, B=b_dist)


def _raise_near_cone(gaps: np.ndarray, indices: np.ndarray, branch: str) -> None:
    bad = np.abs(gaps) < GUARD_BAND
    if np.any(bad):
        pos = int(np.argmin(np.abs(np.where(bad, gaps, np.inf))))
        raise LightConeProximity(int(indices[pos]), branch, float(abs(gaps[pos])), GUARD_BAND)


_CANONICAL = CavityGeometry(1.0)


def image_sum(
    sign: int,
    p: SpacetimePoint,
    q: SpacetimePoint,
    policy: TruncationPolicy,
    geometry: CavityGeometry = _CANONICAL,
) -> float:
    """Truncated scalar image sum.

    ``sign=-1`` sums the translated images (relative x coordinate enters) and
    ``sign=+1`` the reflected ones (the x coordinates add):

        -(1/4 pi^2) * sum_n 1 / ((p.x + sign*q.x - n L)^2 + dy^2 + dz^2 - dt^2)

    Coordinates are in internal units; the default geometry is the canonical
    a = 1 (image period L = 2).  With ``pair_symmetric`` the +-n terms are
    accumulated together in ascending |n| and the n = 0 term added last,
    otherwise strictly in order n = -N .. N.  Raises LightConeProximity when
    any denominator lies inside the guard band.
    """
    if sign not in (-1, 1):
        raise ValueError(f"sign must be -1 or +1, got {sign!r}")
    L = geometry.L
    base = p.x + sign * q.x
    offset = (p.y - q.y) ** 2 + (p.z - q.z) ** 2 - (p.t - q.t) ** 2
    N = policy.n_terms
    branch = "translated" if sign == -1 else "reflected"

    d0 = base * base + offset
    if abs(d0) < GUARD_BAND:
        raise LightConeProximity(0, branch, abs(d0), GUARD_BAND)
    if N == 0:
        return -(1.0 / d0) / _FOUR_PI_SQ

    n = np.arange(1, N + 1, dtype=float)
    d_plus = (base - n * L) ** 2 + offset
    d_minus = (base + n * L) ** 2 + offset
    _raise_near_cone(d_plus, np.arange(1, N + 1), branch)
    _raise_near_cone(d_minus, -np.arange(1, N + 1), branch)

    if policy.pair_symmetric:
        terms = 1.0 / d_plus + 1.0 / d_minus
        total = float(np.cumsum(terms)[-1]) + 1.0 / d0
    else:
        terms = np.concatenate((1.0 / d_minus[::-1], [1.0 / d0], 1.0 / d_plus))
        total = float(np.cumsum(terms)[-1])
    return -total / _FOUR_PI_SQ


def _squared_image_distances(point: FieldPoint, N: int, L: float):
    """(A^2, B^2 at -n, B^2 at +n) for n = 1..N plus the n = 0 values."""
    y2 = point.y * point.y
    n = np.arange(1, N + 1, dtype=float)
    a2 = (n * L) ** 2 + y2
    b2_pos = (2.0 * point.x - n * L) ** 2 + y2
    b2_neg = (2.0 * point.x + n * L) ** 2 + y2
    a2_0 = y2
    b2_0 = (2.0 * point.x) ** 2 + y2
    return a2, b2_pos, b2_neg, a2_0, b2_0


def two_point_yy_closed(
    s: float,
    point: FieldPoint,
    geometry: CavityGeometry,
    policy: TruncationPolicy,
) -> float:
    """Equal-x two-point function of E_y at time separation ``s``, closed form.

    The correlated pair sits at (x, 0) and (x, y); per image index the value is

        (1/pi^2) [ (A^2+s^2)/(s^2-A^2)^3 - (B^2+s^2)/(s^2-B^2)^3 ]
      + (2 y^2/pi^2) [ 1/(s^2-B^2)^3 - 1/(s^2-A^2)^3 ]

    summed pairwise over +-n with the n = 0 term last.  The n = 0, y = 0
    term needs no special handling: A = 0 there and the expression reduces to
    its analytic limit s^2/s^6 = 1/s^4 with the y^2 part vanishing.
    """
    validate_point(point, geometry)
    if not math.isfinite(s):
        raise ValueError("time separation must be finite")
    N = policy.n_terms
    a2, b2_pos, b2_neg, a2_0, b2_0 = _squared_image_distances(point, N, geometry.L)
    s2 = s * s
    y2 = point.y * point.y

    dA0 = s2 - a2_0
    dB0 = s2 - b2_0
    if abs(dA0) < GUARD_BAND:
        raise LightConeProximity(0, "translated", abs(dA0), GUARD_BAND)
    if abs(dB0) < GUARD_BAND:
        raise LightConeProximity(0, "reflected", abs(dB0), GUARD_BAND)
    dA = s2 - a2
    dBp = s2 - b2_pos
    dBn = s2 - b2_neg
    idx = np.arange(1, N + 1)
    _raise_near_cone(dA, idx, "translated")
    _raise_near_cone(dBp, idx, "reflected")
    _raise_near_cone(dBn, -idx, "reflected")

    def per_image(a2v, da, b2v, db):
        main = (a2v + s2) / da**3 - (b2v + s2) / db**3
        trans = 1.0 / db**3 - 1.0 / da**3
        return main + 2.0 * y2 * trans

    term0 = per_image(a2_0, dA0, b2_0, dB0)
    if N == 0:
        return term0 / _PI_SQ
    pairs = per_image(a2, dA, b2_pos, dBp) + per_image(a2, dA, b2_neg, dBn)
    total = float(np.cumsum(pairs)[-1]) + term0
    return total / _PI_SQ


def two_point_yy_vacuum(s: float, y: float) -> float:
    """Free-space two-point function of E_y: the single n = 0 translated term.

    Restricting the image sum to that term collapses it to 1/(pi^2 (s^2-y^2)^2).
    """
    gap = s * s - y * y
    if abs(gap) < GUARD_BAND:
        raise LightConeProximity(0, "translated", abs(gap), GUARD_BAND)
    return 1.0 / (_PI_SQ * gap * gap)


def two_point_yy_fd(
    s: float,
    point: FieldPoint,
    geometry: CavityGeometry,
    policy: TruncationPolicy,
    h: float = 1e-3,
) -> float:
    """Two-point function via finite differences of the scalar image sums.

    Applies the five-point Laplacian stencil (d^2/dx^2 + d^2/dz^2, step ``h``,
    second-order accurate) to the difference of direct and reflected image
    sums, differentiating with respect to the first event only.  Within 2h of
    a plate the x part switches to a one-sided interior stencil so that all
    sample points stay inside the physical strip.  Each stencil evaluation
    enforces the light-cone guard band (effectively widening it by the
    stencil extent).
    """
    validate_point(point, geometry)
    if h <= 0.0:
        raise ValueError("stencil step must be positive")
    q = SpacetimePoint(t=0.0, x=point.x, y=point.y, z=0.0)

    def diff(px: float, pz: float) -> float:
        pp = SpacetimePoint(t=s, x=px, y=0.0, z=pz)
        return image_sum(-1, pp, q, policy, geometry) - image_sum(+1, pp, q, policy, geometry)

    x = point.x
    f0 = diff(x, 0.0)
    dzz = (diff(x, h) - 2.0 * f0 + diff(x, -h)) / (h * h)
    if x < 2.0 * h:
        dxx = (2.0 * f0 - 5.0 * diff(x + h, 0.0) + 4.0 * diff(x + 2.0 * h, 0.0) - diff(x + 3.0 * h, 0.0)) / (h * h)
    elif x > geometry.a - 2.0 * h:
        dxx = (2.0 * f0 - 5.0 * diff(x - h, 0.0) + 4.0 * diff(x - 2.0 * h, 0.0) - diff(x - 3.0 * h, 0.0)) / (h * h)
    else:
        dxx = (diff(x + h, 0.0) - 2.0 * f0 + diff(x - h, 0.0)) / (h * h)
    return dxx + dzz
