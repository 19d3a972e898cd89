"""Power series with polar n-complex coefficients.

Covers sector decomposition of the coefficients, convergence radii (spherical
and cylindrical), sector-wise evaluation, Taylor recentering, a central
difference derivative and the check of the generalized Riemann relations.
"""
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _tables
from .core import PolarNComplex, _check_dims, inverse, modulus
from .errors import DimensionMismatch, InsufficientCoefficients, OutsideConvergenceRegion

RATIO_CAP = 1e12
DEFAULT_TAIL = 16
# log-log slope of the ratio sequence above which the radius is taken as infinite
GROWTH_SLOPE = 0.25


@dataclass(frozen=True)
class PowerSeries:
    """a_0 + a_1 u + a_2 u^2 + ...

    ``exact`` marks a finite coefficient list that is the whole series (a
    polynomial); such series converge everywhere.
    """

    coeffs: tuple
    exact: bool = False

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a power series needs at least one coefficient")
        n = coeffs[0].n
        for a in coeffs:
            if a.n != n:
                raise DimensionMismatch(f"coefficient with n={a.n} in series with n={n}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self):
        return self.coeffs[0].n

    def __len__(self):
        return len(self.coeffs)

    @classmethod
    def from_function(cls, n, coeff_fn, length, exact=False):
        """Series whose l-th coefficient is ``coeff_fn(l)`` (a real or an n-complex)."""
        coeffs = []
        for l in range(length):
            c = coeff_fn(l)
            coeffs.append(c if isinstance(c, PolarNComplex) else PolarNComplex.scalar(n, c))
        return cls(tuple(coeffs), exact=exact)


@dataclass(frozen=True)
class ConvergenceRadii:
    c: float
    c_plus: float
    c_minus: Optional[float]
    c_k: tuple


@dataclass(frozen=True)
class SectorCoefficients:
    A_plus: np.ndarray
    A_minus: Optional[np.ndarray]
    pairs: np.ndarray  # shape (L, K): A_lk + i At_lk

    def real_sectors(self):
        if self.A_minus is None:
            return self.A_plus[:, None]
        return np.stack([self.A_plus, self.A_minus], axis=1)

    def recombine(self, n):
        return tuple(
            PolarNComplex(x) for x in _tables.from_sectors(self.real_sectors(), self.pairs, n)
        )


@dataclass(frozen=True)
class CRReport:
    point: PolarNComplex
    max_residual: float
    residuals: tuple  # one per relation chain k = 0..n-1
    second_order_max: float
    scale: float = field(default=1.0)


def sector_coefficients(s):
    X = np.array([a.x for a in s.coeffs])
    real, cplx = _tables.to_sectors(X)
    return SectorCoefficients(
        A_plus=real[:, 0],
        A_minus=real[:, 1] if s.n % 2 == 0 else None,
        pairs=cplx,
    )


def _growth_slope(index, values):
    good = values > 0
    if good.sum() < 2:
        return 0.0
    return float(np.polyfit(np.log(index[good]), np.log(values[good]), 1)[0])


def _limit_radius(mags, tail):
    """Radius of convergence of a scalar series from coefficient magnitudes.

    Median of the last ``tail`` ratios |A_l|/|A_{l+1}|; where the tail has
    zero coefficients the root test |A_l|^(-1/l) is used instead. Ratios
    growing like a power of l (entire functions) map to +inf.
    """
    L = len(mags)
    idx = np.arange(L - tail - 1, L)
    window = mags[idx]
    if not np.any(window > 0):
        return math.inf
    if np.all(window > 0):
        est = window[:-1] / window[1:]
        where = idx[1:].astype(float)
    else:
        keep = (window > 0) & (idx > 0)
        if not np.any(keep):
            return math.inf
        est = window[keep] ** (-1.0 / idx[keep])
        where = idx[keep].astype(float)
    med = float(np.median(est))
    if med > RATIO_CAP or _growth_slope(where, est) > GROWTH_SLOPE:
        return math.inf
    return med


def radii(s, tail=DEFAULT_TAIL):
    """Cylindrical sector radii and the spherical radius c = min(...)/sqrt(n)."""
    if tail < 2:
        raise ValueError("tail must be >= 2")
    if len(s) < tail + 2:
        raise InsufficientCoefficients(f"need {tail + 2} coefficients, got {len(s)}")
    sc = sector_coefficients(s)
    c_plus = _limit_radius(np.abs(sc.A_plus), tail)
    c_minus = None if sc.A_minus is None else _limit_radius(np.abs(sc.A_minus), tail)
    c_k = tuple(_limit_radius(np.abs(sc.pairs[:, k]), tail) for k in range(sc.pairs.shape[1]))
    sectors = [c_plus] + ([] if c_minus is None else [c_minus]) + list(c_k)
    return ConvergenceRadii(min(sectors) / math.sqrt(s.n), c_plus, c_minus, c_k)


def spherical_radius_direct(s, tail=DEFAULT_TAIL):
    """Median of |a_l| / (sqrt(n) |a_{l+1}|) over the last ``tail`` ratios."""
    mags = np.array([modulus(a) for a in s.coeffs])
    return _limit_radius(mags, tail) / math.sqrt(s.n)


def in_cylinder(u, r):
    real, cplx = _tables.to_sectors(u.x)
    bounds = [r.c_plus] + ([] if r.c_minus is None else [r.c_minus]) + list(r.c_k)
    mags = np.concatenate([np.abs(real), np.abs(cplx)])
    return bool(np.all(mags < np.array(bounds)))


def evaluate(s, u, tol=1e-15):
    """Sum the series at u, sector by sector.

    Unless the series is ``exact``, u must lie strictly inside the cylinder
    of convergence and the last retained term must be below ``tol`` relative
    to the partial sum in every sector.
    """
    _check_dims(s.coeffs[0], u)
    sc = sector_coefficients(s)
    real_c, cplx_c = sc.real_sectors(), sc.pairs
    real_u, cplx_u = _tables.to_sectors(u.x)
    if not s.exact:
        tail = min(DEFAULT_TAIL, len(s) - 2)
        if tail >= 2 and not in_cylinder(u, radii(s, tail)):
            raise OutsideConvergenceRegion("point outside the cylinder of convergence")
    L = len(s)
    acc_r = np.zeros_like(real_u)
    acc_c = np.zeros_like(cplx_u)
    for l in range(L - 1, -1, -1):
        acc_r = acc_r * real_u + real_c[l]
        acc_c = acc_c * cplx_u + cplx_c[l]
    if not s.exact and L > 1:
        last_r = np.abs(real_c[-1] * real_u ** (L - 1))
        last_c = np.abs(cplx_c[-1] * cplx_u ** (L - 1))
        bound_r = tol * np.maximum(np.abs(acc_r), 1.0)
        bound_c = tol * np.maximum(np.abs(acc_c), 1.0)
        if np.any(last_r > bound_r) or np.any(last_c > bound_c):
            raise OutsideConvergenceRegion("truncated series has not converged to tol")
    return PolarNComplex(_tables.from_sectors(acc_r, acc_c, u.n))


def recenter(s, u0, degree=None):
    """Coefficients of the expansion around u0, c_k = sum_l C(k+l, k) a_{k+l} u0^l."""
    _check_dims(s.coeffs[0], u0)
    L = len(s)
    degree = L - 1 if degree is None else degree
    if degree > L - 1:
        raise ValueError("degree exceeds the series length")
    powers = [PolarNComplex.one(u0.n)]
    for _ in range(1, L):
        powers.append(powers[-1] * u0)
    out = []
    for k in range(degree + 1):
        acc = np.zeros(u0.n)
        for l in range(L - k):
            acc += math.comb(k + l, k) * (s.coeffs[k + l] * powers[l]).x
        out.append(PolarNComplex(acc))
    return PowerSeries(tuple(out), exact=s.exact and degree == L - 1)


def series_derivative(s, u0, order):
    """f^(order)(u0) from the recentered coefficients."""
    if s.exact and order >= len(s):
        return PolarNComplex.zero(u0.n)
    return recenter(s, u0, order).coeffs[order] * math.factorial(order)


def derivative_fd(f, u0, direction=None, h=None):
    """Central difference [f(u0 + h d) - f(u0 - h d)] / (2 h d)."""
    direction = PolarNComplex.one(u0.n) if direction is None else direction
    if h is None:
        h = 1e-6 * max(1.0, modulus(u0))
    step = direction * h
    inv = inverse(step * 2.0)
    return (f(u0 + step) - f(u0 - step)) * inv


def jacobian_fd(f, u0, h):
    """J[k, l] = dP_k/dx_l by central differences."""
    n = u0.n
    J = np.empty((n, n))
    for l in range(n):
        e = np.zeros(n)
        e[l] = h
        J[:, l] = (f(PolarNComplex(u0.x + e)).x - f(PolarNComplex(u0.x - e)).x) / (2 * h)
    return J


def hessians_fd(f, u0, h):
    """H[k, a, b] = d^2 P_k / dx_a dx_b by central differences."""
    n = u0.n
    H = np.empty((n, n, n))
    base = f(u0).x
    for a in range(n):
        ea = np.zeros(n)
        ea[a] = h
        for b in range(a, n):
            if a == b:
                val = (f(PolarNComplex(u0.x + ea)).x - 2 * base + f(PolarNComplex(u0.x - ea)).x) / h**2
            else:
                eb = np.zeros(n)
                eb[b] = h
                val = (
                    f(PolarNComplex(u0.x + ea + eb)).x
                    - f(PolarNComplex(u0.x + ea - eb)).x
                    - f(PolarNComplex(u0.x - ea + eb)).x
                    + f(PolarNComplex(u0.x - ea - eb)).x
                ) / (4 * h**2)
            H[:, a, b] = val
            H[:, b, a] = val
    return H


def cr_check(f, u0, h=1e-5, h2=1e-4):
    """Residuals of the generalized Riemann relations at u0.

    First order: for each k the partials dP_{(k+j) mod n}/dx_j agree for all
    j. Second order: d^2 P_k/dx_a dx_b depends only on (a + b) mod n. Each
    residual is the spread (max - min) within a chain. ``h2`` is the step of
    the second differences.
    """
    n = u0.n
    J = jacobian_fd(f, u0, h)
    j = np.arange(n)
    residuals = []
    for k in range(n):
        chain = J[(k + j) % n, j]
        residuals.append(float(chain.max() - chain.min()))
    H = hessians_fd(f, u0, h2)
    a = j[:, None]
    b = j[None, :]
    second = 0.0
    for s in range(n):
        mask = (a + b) % n == s
        vals = H[:, mask]
        second = max(second, float((vals.max(axis=1) - vals.min(axis=1)).max()))
    return CRReport(
        point=u0,
        max_residual=max(residuals),
        residuals=tuple(residuals),
        second_order_max=second,
        scale=float(np.abs(J).max()),
    )
