"""Polar n-dimensional cosexponential functions.

``g_nk(y) = sum_p y^(k+pn) / (k+pn)!`` splits the exponential series by the
residue of the power modulo n. The closed form

    g_nk(y) = (1/n) sum_l exp(y cos(2 pi l/n)) cos(y sin(2 pi l/n) - 2 pi k l/n)

is the production path; the series is kept as an independent check.
"""
import math
from dataclasses import dataclass

import numpy as np

from .core import PolarNComplex

SERIES_RTOL = 1e-17
SERIES_MAX_TERMS = 200


@dataclass(frozen=True)
class CosexpValue:
    n: int
    values: tuple  # g_n0(y), ..., g_{n,n-1}(y)


def _check_index(n, k, lo=0):
    if n < 2:
        raise ValueError("n must be at least 2")
    if not lo <= k < n:
        raise IndexError(f"k={k} outside {lo}..{n - 1}")


def _angles(n):
    return 2.0 * np.pi * np.arange(n) / n


def _phase(n, k):
    l = np.arange(n)
    return 2.0 * np.pi * ((k * l) % n) / n


def g_closed(n, k, y):
    _check_index(n, k)
    a = _angles(n)
    y = float(y)
    if y == 0.0:
        # exact value; the root-of-unity sums would leave ~1e-17 residue
        return 1.0 if k == 0 else 0.0
    terms = np.exp(y * np.cos(a)) * np.cos(y * np.sin(a) - _phase(n, k))
    return float(terms.sum() / n)


def g_series(n, k, y, terms=None):
    """Truncated series; ``terms=None`` stops once the next term is negligible."""
    _check_index(n, k)
    y = float(y)
    if terms is not None and terms < 1:
        raise ValueError("terms must be >= 1")
    limit = SERIES_MAX_TERMS if terms is None else terms
    term = y**k / math.factorial(k)
    total = 0.0
    j = k
    for _ in range(limit):
        total += term
        nxt = term
        for i in range(1, n + 1):
            nxt *= y / (j + i)
        j += n
        if terms is None and abs(nxt) < SERIES_RTOL * abs(total):
            break
        term = nxt
    return total


def cosexp(n, y):
    return CosexpValue(n, tuple(g_closed(n, k, y) for k in range(n)))


def _scatter(n, k, values):
    x = np.zeros(n)
    for p, g in enumerate(values):
        x[(k * p) % n] += g
    return PolarNComplex(x)


def exp_hk(n, k, y):
    """exp(h_k y) assembled from the cosexponential functions."""
    _check_index(n, k, lo=1)
    return _scatter(n, k, cosexp(n, y).values)


def trig_components(n, y):
    """The companions g^(c)_{p+}(y), g^(c)_{p-}(y), p = 0..n-1, in real arithmetic."""
    a = _angles(n)
    y = float(y)
    c, s = y * np.cos(a), y * np.sin(a)
    plus, minus = [], []
    for p in range(n):
        cp, sp = np.cos(_phase(n, p)), np.sin(_phase(n, p))
        plus.append(float(np.sum(np.cos(c) * np.cosh(s) * cp - np.sin(c) * np.sinh(s) * sp) / n))
        minus.append(float(np.sum(np.sin(c) * np.cosh(s) * cp + np.cos(c) * np.sinh(s) * sp) / n))
    return plus, minus


def hyp_components(n, y):
    """Even and odd parts g_{p+}(y), g_{p-}(y), p = 0..n-1."""
    a = _angles(n)
    y = float(y)
    c, s = y * np.cos(a), y * np.sin(a)
    plus, minus = [], []
    for p in range(n):
        cp, sp = np.cos(_phase(n, p)), np.sin(_phase(n, p))
        plus.append(float(np.sum(np.cosh(c) * np.cos(s) * cp + np.sinh(c) * np.sin(s) * sp) / n))
        minus.append(float(np.sum(np.sinh(c) * np.cos(s) * cp + np.cosh(c) * np.sin(s) * sp) / n))
    return plus, minus


def trig_hk(n, k, y):
    """(cos(h_k y), sin(h_k y))."""
    _check_index(n, k, lo=1)
    plus, minus = trig_components(n, y)
    return _scatter(n, k, plus), _scatter(n, k, minus)


def hyp_hk(n, k, y):
    """(cosh(h_k y), sinh(h_k y))."""
    _check_index(n, k, lo=1)
    plus, minus = hyp_components(n, y)
    return _scatter(n, k, plus), _scatter(n, k, minus)


# Quantities used by the identity suite.

def fourier_sums(n, y):
    """a_k = sum_p g_np cos(2 pi k p/n) and b_k = sum_p g_np sin(2 pi k p/n), k = 0..n-1."""
    g = np.array(cosexp(n, y).values)
    k = np.arange(n)[:, None]
    p = np.arange(n)[None, :]
    ang = 2.0 * np.pi * ((k * p) % n) / n
    return np.cos(ang) @ g, np.sin(ang) @ g


def fourier_closed(n, y):
    """Closed forms exp(y cos(2 pi k/n)) * (cos, sin)(y sin(2 pi k/n))."""
    a = _angles(n)
    r = np.exp(y * np.cos(a))
    return r * np.cos(y * np.sin(a)), r * np.sin(y * np.sin(a))


def square_sum_closed(n, y):
    """(1/n) sum_l exp(2 y cos(2 pi l/n)): the non-oscillatory sum of g_nk^2."""
    return float(np.exp(2.0 * y * np.cos(_angles(n))).sum() / n)


def alternating_square_sum_closed(n, y):
    """(2/n){1 + cos 2y + 2 sum_{l=1}^{n/4-1} cos(2y cos(2 pi l/n))} for n divisible by 4.

    Equivalent to (1/n) sum_l cos(2y sin(2 pi l/n)); each inner term stands
    for the two angles l and n/2 - l, hence the factor 2.
    """
    if n % 4:
        raise ValueError("n must be a multiple of 4")
    l = np.arange(1, n // 4)
    return float(2.0 / n * (1.0 + math.cos(2 * y) + 2.0 * np.cos(2 * y * np.cos(2 * np.pi * l / n)).sum()))


def product_identity(n, y):
    """G+ [G-] prod_k G_k^2 over k = 1..K; equals 1."""
    a, b = fourier_sums(n, y)
    K = (n - 1) // 2
    out = a[0]
    if n % 2 == 0:
        out *= a[n // 2]
    for k in range(1, K + 1):
        out *= a[k] ** 2 + b[k] ** 2
    return float(out)
