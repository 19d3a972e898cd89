"""Elementary functions of a polar n-complex argument.

Everything is evaluated sector by sector in canonical coordinates: a real
function on v+ (and v-), the matching ordinary complex function on each
``v_k + i vt_k``, then mapped back through the idempotent basis.
"""
import math

import numpy as np

from . import _tables
from .core import PolarNComplex, check_invertible, nodal_threshold, sector_names
from .errors import OutsideDomain, Overflow

EXP_LIMIT = 700.0
TWO_PI = 2.0 * math.pi


def _apply(u, real_fn, cplx_fn):
    real, cplx = _tables.to_sectors(u.x)
    return PolarNComplex(_tables.from_sectors(real_fn(real), cplx_fn(cplx), u.n))


def _check_exponents(values):
    if np.any(values > EXP_LIMIT):
        raise Overflow(f"sector exponent above {EXP_LIMIT:g}")


def _growth_rates(u):
    """Exponential growth rate of each sector: v+, v-, and Re(v_k + i vt_k)."""
    real, cplx = _tables.to_sectors(u.x)
    return np.concatenate([real, cplx.real])


def exp(u):
    _check_exponents(_growth_rates(u))
    return _apply(u, np.exp, np.exp)


def principal_log_pairs(cplx):
    """Complex log with the angle taken in [0, 2*pi)."""
    phi = np.mod(np.angle(cplx), TWO_PI)
    return np.log(np.abs(cplx)) + 1j * phi


def check_log_domain(u):
    """Raise OutsideDomain unless v+ > 0, v- > 0 and every rho_k > 0."""
    real, cplx = _tables.to_sectors(u.x)
    tol = nodal_threshold(u)
    real_names, pair_names = sector_names(u.n)
    for name, value in zip(real_names, real):
        if not value > tol:
            raise OutsideDomain(f"{name} <= 0")
    for name, value in zip(pair_names, cplx):
        if abs(value) <= tol:
            raise OutsideDomain(f"{name} = 0")
    return real, cplx


def log(u):
    """Principal logarithm; azimuthal angles phi_k in [0, 2*pi)."""
    real, cplx = check_log_domain(u)
    return PolarNComplex(_tables.from_sectors(np.log(real), principal_log_pairs(cplx), u.n))


def _binary_power(u, k):
    # repeated squaring in the algebra; exact on integer coordinates
    out = PolarNComplex.one(u.n)
    base = u
    while k:
        if k & 1:
            out = out * base
        k >>= 1
        if k:
            base = base * base
    return out


def pow(u, m):
    """``u ** m`` on the principal branch.

    Integer ``m`` is valid for any u (negative ``m`` needs an invertible u);
    other real ``m`` needs the logarithm domain.
    """
    m = float(m)
    if m.is_integer() and m >= 0:
        return _binary_power(u, int(m))
    if m.is_integer():
        real, cplx = check_invertible(u)
        k = int(m)
        return PolarNComplex(_tables.from_sectors(real**k, cplx**k, u.n))
    real, cplx = check_log_domain(u)
    rho = np.abs(cplx)
    phi = np.mod(np.angle(cplx), TWO_PI)
    pairs = rho**m * (np.cos(m * phi) + 1j * np.sin(m * phi))
    return PolarNComplex(_tables.from_sectors(real**m, pairs, u.n))


def _guard_trig(u):
    _, cplx = _tables.to_sectors(u.x)
    _check_exponents(np.abs(cplx.imag))


def _guard_hyp(u):
    _check_exponents(np.abs(_growth_rates(u)))


def cos(u):
    _guard_trig(u)
    return _apply(u, np.cos, np.cos)


def sin(u):
    _guard_trig(u)
    return _apply(u, np.sin, np.sin)


def cosh(u):
    _guard_hyp(u)
    return _apply(u, np.cosh, np.cosh)


def sinh(u):
    _guard_hyp(u)
    return _apply(u, np.sinh, np.sinh)
