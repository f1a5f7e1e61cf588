"""Analytic boundary of the admissible (D, E) domain.

Every boundary or inner curve is traced by a one-parameter family of H
spectra. ``E(n, f)`` is the entropy of the spectrum {1 - n f, f (n times),
0, ...}; fixing the depolarization index D selects ``f`` through the branch
formula ``branch_f``.

    C12  E(3, f+)   {lam, mu, mu, mu}   p1 -> p2   lower
    C23  E(2, f+)   {lam, mu, mu, 0}    p2 -> p3   lower
    C34  E(1, f+-)  {lam, mu, 0, 0}     p3 -> p4   lower
    C14  E(3, f-)   {lam, mu, mu, mu}   p1 -> p4   upper
    C13  E13(mu)    {lam, lam, mu, mu}  p1 -> p3   inner
    C24  E(2, f-)   {lam, mu, mu, 0}    p2 -> p4   inner
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from .mueller import depolarization_index_from_spectrum, polarization_entropy
from .polarization import xlogy_base

SQRT3 = math.sqrt(3.0)
D_P2 = 1.0 / 3.0
D_P3 = 1.0 / SQRT3
LOG4_3 = math.log(3.0) / math.log(4.0)
_DISC_TOL = 1e-12


class CurveId(enum.Enum):
    C12 = ("C12", 3, +1, 0.0, D_P2)
    C23 = ("C23", 2, +1, D_P2, D_P3)
    C34 = ("C34", 1, -1, D_P3, 1.0)
    C14 = ("C14", 3, -1, 0.0, 1.0)
    C13 = ("C13", None, None, 0.0, D_P3)
    C24 = ("C24", 2, -1, D_P2, 1.0)

    def __init__(self, label, n, sign, d_min, d_max):
        self.label = label
        self.n = n
        self.sign = sign
        self.d_min = d_min
        self.d_max = d_max

    @property
    def d_range(self):
        return self.d_min, self.d_max


@dataclass(frozen=True)
class CuspPoint:
    id: str
    d: float
    e: float
    spectrum: tuple


CUSPS = (
    CuspPoint("p1", 0.0, 1.0, (0.25, 0.25, 0.25, 0.25)),
    CuspPoint("p2", D_P2, LOG4_3, (1 / 3, 1 / 3, 1 / 3, 0.0)),
    CuspPoint("p3", D_P3, 0.5, (0.5, 0.5, 0.0, 0.0)),
    CuspPoint("p4", 1.0, 0.0, (1.0, 0.0, 0.0, 0.0)),
)


def branch_f(n, d, sign):
    """Equal-eigenvalue value f at depolarization index d, for one branch.

    ``sign`` is +1 or -1. Raises ValueError when d lies outside the range
    where the branch exists (negative discriminant).
    """
    if n not in (1, 2, 3):
        raise ValueError(f"n must be 1, 2 or 3, got {n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    disc = 1.0 - 0.75 * (n + 1) / n * (1.0 - d * d)
    if disc < -_DISC_TOL:
        raise ValueError(f"no real branch for n={n} at d={d}")
    return (1.0 + sign * math.sqrt(max(disc, 0.0))) / (n + 1)


def curve_entropy(n, f):
    """Entropy of the spectrum {1 - n f, f, ..., f} (n copies of f)."""
    big = 1.0 - n * f
    if f < -_DISC_TOL or big < -_DISC_TOL or big > 1 + _DISC_TOL:
        raise ValueError(f"f={f} gives negative eigenvalues for n={n}")
    f = max(f, 0.0)
    big = min(max(big, 0.0), 1.0)
    return float(xlogy_base(big, 4) + n * xlogy_base(f, 4))


def e13(mu):
    """Point (d, e) of the inner curve C13 with spectrum {(1-mu)/2 x2, mu/2 x2}."""
    if not (-_DISC_TOL <= mu <= 0.5 + _DISC_TOL):
        raise ValueError(f"mu must lie in [0, 1/2], got {mu}")
    mu = min(max(mu, 0.0), 0.5)
    e = 2 * xlogy_base((1 - mu) / 2, 4) + 2 * xlogy_base(mu / 2, 4)
    return (1 - 2 * mu) / SQRT3, float(e)


def _check_range(curve, d):
    lo, hi = curve.d_range
    if not (lo - _DISC_TOL <= d <= hi + _DISC_TOL):
        raise ValueError(f"d={d} outside the range [{lo}, {hi}] of {curve.label}")


def spectrum_for_curve(curve, d):
    """Table spectrum of ``curve`` whose depolarization index equals d."""
    curve = CurveId[curve] if isinstance(curve, str) else curve
    _check_range(curve, d)
    if curve is CurveId.C13:
        mu = (1 - SQRT3 * d) / 2
        mu = min(max(mu, 0.0), 0.5)
        lam = [(1 - mu) / 2, (1 - mu) / 2, mu / 2, mu / 2]
    else:
        f = branch_f(curve.n, d, curve.sign)
        lam = [max(1 - curve.n * f, 0.0)] + [f] * curve.n + [0.0] * (3 - curve.n)
    lam = np.sort(np.array(lam))[::-1]
    return lam / lam.sum()


def curve_point(curve, d):
    """Entropy on ``curve`` at depolarization index d."""
    curve = CurveId[curve] if isinstance(curve, str) else curve
    _check_range(curve, d)
    if curve is CurveId.C13:
        return e13((1 - SQRT3 * min(max(d, 0.0), D_P3)) / 2)[1]
    return curve_entropy(curve.n, branch_f(curve.n, d, curve.sign))


def _unit(d):
    if not (-_DISC_TOL <= d <= 1 + _DISC_TOL):
        raise ValueError(f"d must lie in [0, 1], got {d}")
    return min(max(float(d), 0.0), 1.0)


def boundary_upper(d):
    """Maximal entropy reachable at depolarization index d (curve C14)."""
    return curve_point(CurveId.C14, _unit(d))


def boundary_lower(d):
    """Minimal entropy at depolarization index d (C12, then C23, then C34)."""
    d = _unit(d)
    if d <= D_P2:
        return curve_point(CurveId.C12, d)
    if d <= D_P3:
        return curve_point(CurveId.C23, d)
    return curve_point(CurveId.C34, d)


def contains(d, e, tol=1e-9):
    """Is the point (d, e) inside the physical domain, up to tol?"""
    if not (0.0 <= d <= 1.0):
        return False
    return boundary_lower(d) - tol <= e <= boundary_upper(d) + tol


def boundary_upper_array(d):
    """Vectorized boundary_upper for arrays of d in [0, 1]."""
    d = np.clip(np.asarray(d, dtype=float), 0.0, 1.0)
    f = (1 - np.sqrt(np.clip(d * d, 0.0, None))) / 4
    return xlogy_base(1 - 3 * f, 4) + 3 * xlogy_base(f, 4)


def boundary_lower_array(d):
    """Vectorized boundary_lower for arrays of d in [0, 1]."""
    d = np.clip(np.asarray(d, dtype=float), 0.0, 1.0)
    out = np.empty_like(d)
    for n, lo, hi in ((3, 0.0, D_P2), (2, D_P2, D_P3), (1, D_P3, 1.0)):
        sel = (d >= lo) & (d <= hi)
        disc = np.clip(1 - 0.75 * (n + 1) / n * (1 - d[sel] ** 2), 0.0, None)
        # f+ on C12/C23; C34 takes f- (both C34 branches give the same entropy)
        sign = 1 if n > 1 else -1
        f = (1 + sign * np.sqrt(disc)) / (n + 1)
        big = np.clip(1 - n * f, 0.0, 1.0)
        out[sel] = xlogy_base(big, 4) + n * xlogy_base(f, 4)
    return out


def contains_array(d, e, tol=1e-9):
    d = np.asarray(d, dtype=float)
    e = np.asarray(e, dtype=float)
    inside = (d >= 0) & (d <= 1)
    return (
        inside
        & (e >= boundary_lower_array(d) - tol)
        & (e <= boundary_upper_array(d) + tol)
    )


def sample_curve(curve, samples):
    """``samples`` evenly spaced (d, e) points along a curve's D-range."""
    curve = CurveId[curve] if isinstance(curve, str) else curve
    if samples < 2:
        raise ValueError("need at least 2 samples per curve")
    ds = np.linspace(curve.d_min, curve.d_max, samples)
    return [(float(d), curve_point(curve, d)) for d in ds]


def fit_gamma(grid_size=1000, d_min=0.01, d_max=0.99):
    """Exponent of the power law E_upper(d) ~ (1 - d^2)^gamma.

    Unweighted least squares of log E_upper against log(1 - d^2) on a uniform
    grid in d, with the line forced through the origin since E_upper(0) = 1.
    Returns ``(gamma, max_relative_error)``.
    """
    if grid_size < 100:
        raise ValueError("grid_size must be at least 100")
    if not (0 < d_min < d_max < 1):
        raise ValueError("need 0 < d_min < d_max < 1")
    d = np.linspace(d_min, d_max, grid_size)
    x = np.log1p(-d * d)
    y = np.log(boundary_upper_array(d))
    gamma = float(x @ y / (x @ x))
    rel = np.max(np.abs(np.exp(gamma * x - y) - 1))
    return gamma, float(rel)


def cusp_from_spectrum(spectrum):
    """(d, e) of a spectrum, via the eigenvalue formulas."""
    lam = np.asarray(spectrum, dtype=float)
    return depolarization_index_from_spectrum(lam), polarization_entropy(lam)


def region(d, e, tol=1e-9):
    """State-diagram label: side of the inner curves C13 and C24.

    Each part reads ``above-C13``, ``below-C13`` or ``on-C13`` (same for C24)
    and is only present where the curve is defined; parts are joined by '+'.
    """
    parts = []
    for curve in (CurveId.C13, CurveId.C24):
        if curve.d_min - tol <= d <= curve.d_max + tol:
            ref = curve_point(curve, min(max(d, curve.d_min), curve.d_max))
            if abs(e - ref) <= tol:
                side = "on"
            else:
                side = "above" if e > ref else "below"
            parts.append(f"{side}-{curve.label}")
    return "+".join(parts)
