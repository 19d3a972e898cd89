"""Factorization of monic polar n-complex polynomials.

Each canonical sector carries an ordinary polynomial (real for v+ and v-,
complex for the pairs) with a unique root multiset. A root set of the n-complex
polynomial takes one root from every sector for each position p; different
pairings across sectors give different factorizations.
"""
import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _tables
from .core import PolarNComplex
from .errors import DimensionMismatch, NoConvergence, NonRealAssembly
from .series import PowerSeries, SectorCoefficients, sector_coefficients

DK_MAX_ITER = 500
DK_TOL = 1e-13
REAL_TOL = 1e-9
DEFAULT_CAP = 1024


@dataclass(frozen=True)
class NPolynomial:
    """u^m + a_1 u^(m-1) + ... + a_m with the leading 1 implicit."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("degree must be >= 1")
        n = coeffs[0].n
        if any(a.n != n for a in coeffs):
            raise DimensionMismatch("coefficients of different dimension")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self):
        return self.coeffs[0].n

    @property
    def degree(self):
        return len(self.coeffs)

    def __call__(self, u):
        acc = PolarNComplex.one(self.n)
        for a in self.coeffs:
            acc = acc * u + a
        return acc

    @classmethod
    def from_roots(cls, roots):
        """Monic polynomial prod_p (u - u_p)."""
        return cls(tuple(expand_roots(roots)[1:]))


@dataclass(frozen=True)
class SectorRoots:
    plus_roots: tuple
    minus_roots: Optional[tuple]
    pair_roots: tuple  # per k: m complex values v_kp + i vt_kp

    def sectors(self):
        """Root lists in sector order: v+, [v-,] then the pairs."""
        out = [self.plus_roots]
        if self.minus_roots is not None:
            out.append(self.minus_roots)
        return out + list(self.pair_roots)


@dataclass(frozen=True)
class RootSet:
    roots: tuple


@dataclass(frozen=True)
class Enumeration:
    rootsets: tuple
    total: Optional[int]
    truncated: bool


def expand_roots(roots):
    """Coefficients [1, c_1, ..., c_m] of prod (u - u_p)."""
    n = roots[0].n
    coeffs = [PolarNComplex.one(n)]
    for r in roots:
        new = coeffs + [PolarNComplex.zero(n)]
        for j in range(len(coeffs), 0, -1):
            new[j] = new[j] - r * coeffs[j - 1]
        coeffs = new
    return coeffs


def sector_polynomials(P):
    """Sector coefficients of [1, a_1, ..., a_m]; index l is the coefficient of v^(m-l)."""
    lead = PolarNComplex.one(P.n)
    return sector_coefficients(PowerSeries((lead,) + P.coeffs, exact=True))


def durand_kerner(coeffs, max_iter=DK_MAX_ITER, tol=DK_TOL):
    """All roots of the monic polynomial with coefficients ``[1, c_1, ..., c_m]``.

    Simultaneous iteration from points on a circle of radius 1 + max|c|,
    rotated off the real axis so real polynomials do not start symmetric.
    Returns ``(roots, converged)``.
    """
    c = np.asarray(coeffs, dtype=complex)
    m = len(c) - 1
    if m == 1:
        return np.array([-c[1]]), True
    radius = 1.0 + np.max(np.abs(c[1:]))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(m) / m + 0.4))
    for _ in range(max_iter):
        pz = np.polyval(c, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        delta = pz / diff.prod(axis=1)
        z = z - delta
        if np.max(np.abs(delta)) <= tol * max(1.0, np.max(np.abs(z))):
            return z, True
    return z, False


def _polish(coeffs, z, steps=3):
    c = np.asarray(coeffs, dtype=complex)
    dc = np.polyder(c)
    for _ in range(steps):
        d = np.polyval(dc, z)
        ok = np.abs(d) > 0
        z = np.where(ok, z - np.polyval(c, z) / np.where(ok, d, 1.0), z)
    return z


def _conjugate_close(z, scale):
    """Snap near-real roots to the axis and pair the rest exactly."""
    z = np.array(z, dtype=complex)
    tol = REAL_TOL * max(1.0, scale)
    real = np.abs(z.imag) <= tol
    z[real] = z[real].real
    upper = [i for i in range(len(z)) if not real[i] and z[i].imag > 0]
    lower = [i for i in range(len(z)) if not real[i] and z[i].imag < 0]
    for i in upper:
        j = min(lower, key=lambda j: abs(z[j] - np.conj(z[i])))
        lower.remove(j)
        mid = 0.5 * (z[i] + np.conj(z[j]))
        z[i], z[j] = mid, np.conj(mid)
    return z


def _sort_roots(z):
    return np.array(sorted(z, key=lambda w: (round(w.real, 12), round(w.imag, 12))))


def sector_roots(P):
    """Roots of every sector polynomial, each list sorted (real part, then imaginary)."""
    sc = sector_polynomials(P)
    names = ["v_plus"] + (["v_minus"] if sc.A_minus is not None else [])
    out = []
    for name, A in zip(names, sc.real_sectors().T):
        z, ok = durand_kerner(A)
        if not ok:
            raise NoConvergence(name)
        z = _polish(A, z)
        out.append(tuple(_sort_roots(_conjugate_close(z, np.max(np.abs(A))))))
    pairs = []
    for k in range(sc.pairs.shape[1]):
        A = sc.pairs[:, k]
        z, ok = durand_kerner(A)
        if not ok:
            raise NoConvergence(f"rho_{k + 1}")
        pairs.append(tuple(_sort_roots(_polish(A, z))))
    return SectorRoots(
        plus_roots=out[0],
        minus_roots=out[1] if len(out) > 1 else None,
        pair_roots=tuple(pairs),
    )


def _assemble(sroots, selection, n):
    sectors = sroots.sectors()
    m = len(sectors[0])
    nreal = 2 if n % 2 == 0 else 1
    roots = []
    for p in range(m):
        vals = [sectors[s][selection[s][p]] for s in range(len(sectors))]
        real = np.array(vals[:nreal], dtype=complex)
        x_real = real @ _tables.basis_matrix(n)[:nreal]
        if np.max(np.abs(x_real.imag)) > REAL_TOL:
            raise NonRealAssembly(f"position {p + 1} has non-real coordinates")
        cplx = np.array(vals[nreal:], dtype=complex)
        x = _tables.from_sectors(real.real, cplx, n)
        roots.append(PolarNComplex(x))
    return RootSet(tuple(roots))


def assemble(P, selection, sroots=None):
    """Root set from a per-sector assignment of roots to positions 1..m.

    ``selection[s][p]`` is the index (into sector ``s``'s root list) of the
    root placed at position ``p``; sectors are ordered v+, [v-,] pairs.
    """
    sroots = sector_roots(P) if sroots is None else sroots
    return _assemble(sroots, selection, P.n)


def _rootset_key(rs, digits=9):
    return tuple(sorted(tuple(np.round(r.x, digits) + 0.0) for r in rs.roots))


def enumerate_rootsets(P, cap=DEFAULT_CAP):
    """Distinct valid root sets in lexicographic selection order, at most ``cap``.

    The v+ assignment is fixed to the identity, which divides out the global
    permutation of positions; the other sectors run over all permutations.
    The total is counted while at most ``cap * 1000`` selections need visiting.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    sroots = sector_roots(P)
    nsectors = len(sroots.sectors())
    m = P.degree
    perms = list(itertools.permutations(range(m)))
    identity = tuple(range(m))
    budget = cap * 1000
    total_selections = len(perms) ** (nsectors - 1)
    seen = set()
    found = []
    for visited, rest in enumerate(itertools.product(perms, repeat=nsectors - 1)):
        if visited >= budget:
            break
        try:
            rs = _assemble(sroots, (identity,) + rest, P.n)
        except NonRealAssembly:
            continue
        key = _rootset_key(rs)
        if key in seen:
            continue
        seen.add(key)
        if len(found) < cap:
            found.append(rs)
    complete = total_selections <= budget
    return Enumeration(
        rootsets=tuple(found),
        total=len(seen) if complete else None,
        truncated=not complete or len(seen) > cap,
    )


def verify_factorization(P, rs):
    """Largest coordinate deviation between prod (u - u_p) and P's coefficients."""
    expanded = expand_roots(list(rs.roots))[1:]
    if len(expanded) != P.degree:
        return math.inf
    return float(max(np.max(np.abs(a.x - b.x)) for a, b in zip(expanded, P.coeffs)))
