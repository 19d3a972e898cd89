"""Canonical sector coordinates, the idempotent basis and the rotated axes.

In canonical coordinates multiplication is diagonal: the real sectors
``v_plus`` (and ``v_minus`` for even n) multiply as reals and each pair
``(v_k, vt_k)`` multiplies as the ordinary complex number ``v_k + i vt_k``.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _tables
from .core import PolarNComplex

npairs = _tables.npairs


@dataclass(frozen=True)
class CanonicalCoords:
    n: int
    v_plus: float
    v_minus: Optional[float]
    pairs: tuple  # ((v_k, vt_k), ...) for k = 1..K

    def __post_init__(self):
        if len(self.pairs) != npairs(self.n):
            raise ValueError(f"expected {npairs(self.n)} pairs for n={self.n}")
        if (self.v_minus is not None) != (self.n % 2 == 0):
            raise ValueError("v_minus must be present exactly when n is even")

    @classmethod
    def from_sectors(cls, n, real, cplx):
        return cls(
            n=n,
            v_plus=float(real[0]),
            v_minus=float(real[1]) if n % 2 == 0 else None,
            pairs=tuple((float(z.real), float(z.imag)) for z in cplx),
        )

    def sectors(self):
        """``(real, cplx)`` arrays as used by the sector-wise evaluators."""
        real = [self.v_plus] if self.v_minus is None else [self.v_plus, self.v_minus]
        cplx = np.array([complex(a, b) for a, b in self.pairs], dtype=complex)
        return np.array(real, dtype=float), cplx

    @property
    def rho(self):
        """Radii rho_k of the pair sectors."""
        return tuple(float(np.hypot(a, b)) for a, b in self.pairs)

    def __add__(self, other):
        if not isinstance(other, CanonicalCoords) or other.n != self.n:
            return NotImplemented
        return CanonicalCoords(
            n=self.n,
            v_plus=self.v_plus + other.v_plus,
            v_minus=None if self.v_minus is None else self.v_minus + other.v_minus,
            pairs=tuple((a + c, b + d) for (a, b), (c, d) in zip(self.pairs, other.pairs)),
        )


@dataclass(frozen=True)
class CanonicalBasis:
    e_plus: PolarNComplex
    e_minus: Optional[PolarNComplex]
    pairs: tuple  # ((e_k, et_k), ...)


@dataclass(frozen=True)
class RotatedCoords:
    xi_plus: float
    xi_minus: Optional[float]
    pairs: tuple  # ((xi_k, eta_k), ...)

    def as_array(self):
        out = [self.xi_plus]
        if self.xi_minus is not None:
            out.append(self.xi_minus)
        for a, b in self.pairs:
            out.extend((a, b))
        return np.array(out)


def to_canonical(u):
    real, cplx = _tables.to_sectors(u.x)
    return CanonicalCoords.from_sectors(u.n, real, cplx)


def from_canonical(c):
    real, cplx = c.sectors()
    return PolarNComplex(_tables.from_sectors(real, cplx, c.n))


def basis(n):
    if n < 2:
        raise ValueError("n must be at least 2")
    rows = [PolarNComplex(r) for r in _tables.basis_matrix(n)]
    e_plus = rows[0]
    e_minus = rows[1] if n % 2 == 0 else None
    rest = rows[2:] if n % 2 == 0 else rows[1:]
    return CanonicalBasis(e_plus, e_minus, tuple(zip(rest[0::2], rest[1::2])))


def e_tilde(n, k):
    """The imaginary partner et_k of the idempotent e_k (1 <= k <= K)."""
    if not 1 <= k <= npairs(n):
        raise IndexError(f"pair index {k} out of range 1..{npairs(n)}")
    return basis(n).pairs[k - 1][1]


def transform_matrix(n):
    """The orthogonal matrix T taking x to the rotated axes."""
    return _tables.rotation_matrix(n)


def rotated(u):
    xi = transform_matrix(u.n) @ u.x
    even = u.n % 2 == 0
    start = 2 if even else 1
    rest = xi[start:]
    return RotatedCoords(
        xi_plus=float(xi[0]),
        xi_minus=float(xi[1]) if even else None,
        pairs=tuple((float(a), float(b)) for a, b in zip(rest[0::2], rest[1::2])),
    )


def block_diagonalize(u):
    """diag(v+, [v-,] V_1, ..., V_K) with V_k = [[v_k, vt_k], [-vt_k, v_k]]."""
    c = to_canonical(u)
    out = np.zeros((u.n, u.n))
    out[0, 0] = c.v_plus
    i = 1
    if c.v_minus is not None:
        out[1, 1] = c.v_minus
        i = 2
    for a, b in c.pairs:
        out[i:i + 2, i:i + 2] = [[a, b], [-b, a]]
        i += 2
    return out
