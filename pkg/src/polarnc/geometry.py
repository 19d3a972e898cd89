"""Polar description of a point and the exponential / trigonometric forms."""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _tables
from .canonical import basis, to_canonical
from .core import PolarNComplex, modulus, nodal_threshold, nu
from .elementary import exp
from .errors import DegenerateDirection, OutsideDomain

SQRT2 = math.sqrt(2.0)
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PolarForm:
    n: int
    d: float
    rho: Optional[float]
    theta_plus: float
    theta_minus: Optional[float]
    psi: tuple
    phi: tuple
    rho_k: tuple


def polar_decompose(u):
    """Modulus, amplitude and the polar, planar and azimuthal angles.

    theta+ = atan2(sqrt(2) rho_1, v+) lies in (0, pi) and equals pi/2 when
    v+ = 0. The azimuthal angles lie in [0, 2 pi); the planar angles
    psi_{k-1} = atan2(rho_1, rho_k) exist for k = 2..K.
    """
    n = u.n
    if _tables.npairs(n) == 0:
        raise DegenerateDirection("n=2 has no rotating sector")
    c = to_canonical(u)
    rho_k = c.rho
    tol = nodal_threshold(u)
    for k, r in enumerate(rho_k, start=1):
        if r <= tol:
            raise DegenerateDirection(f"rho_{k}")
    r1 = rho_k[0]
    v = nu(u)
    return PolarForm(
        n=n,
        d=modulus(u),
        rho=v ** (1.0 / n) if v > 0 else None,
        theta_plus=math.atan2(SQRT2 * r1, c.v_plus),
        theta_minus=None if c.v_minus is None else math.atan2(SQRT2 * r1, c.v_minus),
        psi=tuple(math.atan2(r1, r) for r in rho_k[1:]),
        phi=tuple(math.atan2(b, a) % TWO_PI for a, b in c.pairs),
        rho_k=rho_k,
    )


def _inv_tan_sq_sum(form):
    s = 1.0 / math.tan(form.theta_plus) ** 2 + 1.0
    if form.theta_minus is not None:
        s += 1.0 / math.tan(form.theta_minus) ** 2
    s += sum(1.0 / math.tan(p) ** 2 for p in form.psi)
    return s


def rho1_from_angles(form):
    """rho_1 rebuilt from d and the polar / planar angles."""
    return math.sqrt(form.n * form.d**2 / 2.0 / _inv_tan_sq_sum(form))


def modulus_from_amplitude(form):
    """d rebuilt from the amplitude and the angles (needs nu > 0)."""
    n = form.n
    if form.rho is None:
        raise OutsideDomain("amplitude undefined (nu <= 0)")
    tans = math.tan(form.theta_plus) * math.prod(math.tan(p) ** 2 for p in form.psi)
    if form.theta_minus is not None:
        tans *= math.tan(form.theta_minus)
        power = (n - 2) / (2 * n)
    else:
        power = (n - 1) / (2 * n)
    return form.rho * 2.0**power / math.sqrt(n) * tans ** (1.0 / n) * math.sqrt(_inv_tan_sq_sum(form))


def angular_factor(form):
    """The factor e+ sqrt2/tan(theta+) [+ e- sqrt2/tan(theta-)] + e_1 + sum e_k/tan(psi_{k-1})."""
    b = basis(form.n)
    out = b.e_plus * (SQRT2 / math.tan(form.theta_plus))
    if b.e_minus is not None:
        out = out + b.e_minus * (SQRT2 / math.tan(form.theta_minus))
    out = out + b.pairs[0][0]
    for (e_k, _), p in zip(b.pairs[1:], form.psi):
        out = out + e_k * (1.0 / math.tan(p))
    return out


def angular_factor_modulus(form):
    """Closed form of the modulus of :func:`angular_factor`."""
    return math.sqrt(2.0 / form.n) * math.sqrt(_inv_tan_sq_sum(form))


def azimuthal_exponent(form):
    """sum_k et_k phi_k as an n-complex number."""
    b = basis(form.n)
    out = PolarNComplex.zero(form.n)
    for (_, et), phi in zip(b.pairs, form.phi):
        out = out + et * phi
    return out


def _domain_form(u):
    c = to_canonical(u)
    if not c.v_plus > 0:
        raise OutsideDomain("v_plus <= 0")
    if c.v_minus is not None and not c.v_minus > 0:
        raise OutsideDomain("v_minus <= 0")
    if _tables.npairs(u.n) == 0:
        raise OutsideDomain("n=2 has no polar angles")
    try:
        return polar_decompose(u)
    except DegenerateDirection as exc:
        raise OutsideDomain(f"{exc.which} = 0") from exc


def exponential_exponent(form):
    """The n-complex exponent w with u = rho * exp(w).

    The h_0 coordinate of w is zero; the amplitude carries it.
    """
    n = form.n
    w = np.zeros(n)
    p = np.arange(1, n)
    w[1:] = math.log(SQRT2 / math.tan(form.theta_plus)) / n
    if form.theta_minus is not None:
        w[1:] += np.where(p % 2 == 0, 1.0, -1.0) * math.log(SQRT2 / math.tan(form.theta_minus)) / n
    cos, _ = _tables.trig_table(n)
    for k, psi in enumerate(form.psi, start=2):
        w[1:] -= 2.0 / n * cos[k - 1, 1:] * math.log(math.tan(psi))
    return PolarNComplex(w) + azimuthal_exponent(form)


def exponential_form(u):
    """Rebuild u as rho * exp(exponent); equals u on the domain."""
    form = _domain_form(u)
    return exp(exponential_exponent(form)) * form.rho


def trigonometric_form(u):
    """Rebuild u as d * scale * angular factor * exp(sum et_k phi_k)."""
    form = _domain_form(u)
    if not form.d > 0:
        raise OutsideDomain("d = 0")
    scale = form.d * math.sqrt(form.n / 2.0) / math.sqrt(_inv_tan_sq_sum(form))
    return angular_factor(form) * exp(azimuthal_exponent(form)) * scale
