"""The polar n-complex value type and its ring operations.

A polar n-complex number is ``x_0 + h_1 x_1 + ... + h_{n-1} x_{n-1}`` with
``h_j h_k = h_{(j + k) mod n}``; the algebra is the real group algebra of the
cyclic group of order n.
"""
import math
from dataclasses import dataclass
from numbers import Real

import numpy as np

from . import _tables
from .errors import DimensionMismatch, NonPositiveNu, NotInvertible

# A sector counts as vanishing below this fraction of the modulus.
NODAL_RTOL = 1e-12
NODAL_ATOL = 1e-300


@dataclass(frozen=True, eq=False)
class PolarNComplex:
    """Immutable polar n-complex number with real coordinates ``x``."""

    x: np.ndarray

    def __post_init__(self):
        arr = np.array(self.x, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise ValueError(f"need a 1-d coordinate vector with n >= 2, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coordinates must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "x", arr)

    @property
    def n(self):
        return self.x.size

    @classmethod
    def one(cls, n):
        x = np.zeros(n)
        x[0] = 1.0
        return cls(x)

    @classmethod
    def zero(cls, n):
        return cls(np.zeros(n))

    @classmethod
    def unit(cls, n, k):
        """The basis element h_k."""
        x = np.zeros(n)
        x[k % n] = 1.0
        return cls(x)

    @classmethod
    def scalar(cls, n, value):
        return cls.one(n) * float(value)

    def __getitem__(self, i):
        return float(self.x[i])

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.x.tolist())

    def __repr__(self):
        return f"PolarNComplex({self.x.tolist()})"

    def __eq__(self, other):
        if not isinstance(other, PolarNComplex):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.x, other.x))

    __hash__ = None

    def _coerce(self, other):
        if isinstance(other, PolarNComplex):
            _check_dims(self, other)
            return other
        if isinstance(other, Real):
            return PolarNComplex.scalar(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PolarNComplex(self.x - other.x)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PolarNComplex(other.x - self.x)

    def __neg__(self):
        return PolarNComplex(-self.x)

    def __mul__(self, other):
        if isinstance(other, Real):
            return PolarNComplex(self.x * float(other))
        if isinstance(other, PolarNComplex):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Real):
            return PolarNComplex(self.x / float(other))
        if isinstance(other, PolarNComplex):
            return mul(self, inverse(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Real):
            return inverse(self) * float(other)
        return NotImplemented

    def __pow__(self, m):
        from .elementary import pow as _pow

        return _pow(self, m)


def _check_dims(u, u2):
    if u.n != u2.n:
        raise DimensionMismatch(f"n={u.n} vs n={u2.n}")


def add(u, u2):
    _check_dims(u, u2)
    return PolarNComplex(u.x + u2.x)


def mul(u, u2):
    """Cyclic convolution: component k is sum_l x_l * x'_{(k - l) mod n}."""
    _check_dims(u, u2)
    idx = _tables.conv_index(u.n)
    # Each summand is symmetric in (u, u2), so the result is bitwise commutative.
    terms = u.x * u2.x[idx] + u2.x * u.x[idx]
    return PolarNComplex(0.5 * terms.sum(axis=1))


def mul_fft(u, u2):
    """FFT route to the same product; agrees with :func:`mul` to rounding."""
    _check_dims(u, u2)
    return PolarNComplex(np.fft.irfft(np.fft.rfft(u.x) * np.fft.rfft(u2.x), n=u.n))


def to_matrix(u):
    """Circulant representation: row 0 is x, each later row rotated right.

    Products map to matrix products, ``to_matrix(u u') = to_matrix(u) @
    to_matrix(u')``. The product ``u u'`` as a matrix-vector product is
    ``to_matrix(u).T @ x'`` (the transpose is the system matrix of the
    inverse equations).
    """
    n = u.n
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    m = u.x[idx]
    m.flags.writeable = False
    return m


def nu(u):
    """Determinant of the circulant, from the canonical product formula."""
    real, cplx = _tables.to_sectors(u.x)
    return float(np.prod(real) * np.prod(cplx.real**2 + cplx.imag**2))


def amplitude(u):
    """``nu ** (1/n)``; only defined for positive ``nu``."""
    v = nu(u)
    if not v > 0:
        raise NonPositiveNu(f"nu={v!r}")
    return v ** (1.0 / u.n)


def modulus(u):
    return math.hypot(*u.x)


def nodal_threshold(u):
    return max(NODAL_RTOL * modulus(u), NODAL_ATOL)


def sector_names(n):
    names = ["v_plus"]
    if n % 2 == 0:
        names.append("v_minus")
    return names, [f"rho_{k}" for k in range(1, _tables.npairs(n) + 1)]


def check_invertible(u):
    """Raise :class:`NotInvertible` naming the first vanishing sector."""
    real, cplx = _tables.to_sectors(u.x)
    tol = nodal_threshold(u)
    real_names, pair_names = sector_names(u.n)
    for name, value in zip(real_names, real):
        if abs(value) <= tol:
            raise NotInvertible(name)
    for name, value in zip(pair_names, cplx):
        if abs(value) <= tol:
            raise NotInvertible(name)
    return real, cplx


def inverse(u):
    """Invert each canonical sector and map back."""
    real, cplx = check_invertible(u)
    return PolarNComplex(_tables.from_sectors(1.0 / real, 1.0 / cplx, u.n))
