"""Per-dimension trigonometric tables and the raw sector transform.

The tables are built once per ``n`` and frozen, so concurrent readers are
safe.
"""
from functools import lru_cache

import numpy as np


def npairs(n):
    """Number of rotating (complex) sectors, ``floor((n - 1) / 2)``."""
    return (n - 1) // 2


def _frozen(a):
    a.flags.writeable = False
    return a


def cos_sin_frac(j, n):
    """Exact-at-quarter-turns ``cos`` and ``sin`` of ``2*pi*j/n``.

    The angle is reduced to the nearest quarter turn plus a residual of at
    most an eighth of a turn, so multiples of pi/2 give exact 0 and +-1.
    """
    j = np.asarray(j) % n
    q = np.rint(4 * j / n).astype(int)
    delta = 2.0 * np.pi * (4 * j - q * n) / (4.0 * n)
    c, s = np.cos(delta), np.sin(delta)
    q = q % 4
    cos = np.choose(q, [c, -s, -c, s])
    sin = np.choose(q, [s, c, -s, -c])
    return cos + 0.0, sin + 0.0


@lru_cache(maxsize=None)
def trig_table(n):
    """Return ``(cos, sin)`` of ``2*pi*k*p/n`` for k = 1..K, p = 0..n-1."""
    k = np.arange(1, npairs(n) + 1)[:, None]
    p = np.arange(n)[None, :]
    cos, sin = cos_sin_frac(k * p, n)
    return _frozen(np.array(cos, dtype=float)), _frozen(np.array(sin, dtype=float))


@lru_cache(maxsize=None)
def alternating(n):
    return _frozen(np.where(np.arange(n) % 2 == 0, 1.0, -1.0))


@lru_cache(maxsize=None)
def conv_index(n):
    """Index table ``(k - l) mod n`` used by the cyclic product."""
    k = np.arange(n)[:, None]
    l = np.arange(n)[None, :]
    return _frozen((k - l) % n)


@lru_cache(maxsize=None)
def basis_matrix(n):
    """Rows are the coordinates of e+, [e-,] e_1, et_1, ..., e_K, et_K."""
    cos, sin = trig_table(n)
    rows = [np.full(n, 1.0 / n)]
    if n % 2 == 0:
        rows.append(alternating(n) / n)
    for c, s in zip(cos, sin):
        rows.append(2.0 * c / n)
        rows.append(2.0 * s / n)
    return _frozen(np.array(rows))


@lru_cache(maxsize=None)
def rotation_matrix(n):
    """Orthogonal matrix T mapping x to the rotated axes (xi, eta)."""
    cos, sin = trig_table(n)
    rows = [np.full(n, 1.0 / np.sqrt(n))]
    if n % 2 == 0:
        rows.append(alternating(n) / np.sqrt(n))
    scale = np.sqrt(2.0 / n)
    for c, s in zip(cos, sin):
        rows.append(scale * c)
        rows.append(scale * s)
    return _frozen(np.array(rows))


def to_sectors(x):
    """Split coordinates into real sectors and complex pair sectors.

    Returns ``(real, cplx)`` where ``real`` holds v+ (and v- for even n) and
    ``cplx[k-1] = v_k + i*vt_k``. Works on a trailing axis of length n.
    """
    x = np.asarray(x, dtype=float)
    n = x.shape[-1]
    cos, sin = trig_table(n)
    real = [x.sum(axis=-1)]
    if n % 2 == 0:
        real.append(x @ alternating(n))
    real = np.stack(real, axis=-1)
    cplx = x @ cos.T + 1j * (x @ sin.T)
    return real, cplx


def from_sectors(real, cplx, n):
    """Inverse of :func:`to_sectors` by expansion on the idempotent basis."""
    real = np.asarray(real)
    cplx = np.asarray(cplx, dtype=complex)
    B = basis_matrix(n)
    nreal = 2 if n % 2 == 0 else 1
    x = real @ B[:nreal]
    if cplx.shape[-1]:
        x = x + cplx.real @ B[nreal::2] + cplx.imag @ B[nreal + 1::2]
    return x
