import sys
import numpy as np
import pytest
from hypothesis import strategies as st

from polarnc import PolarNComplex
from polarnc.canonical import basis


def rel_err(a, b, scale=None):
    """Max-norm error of ``a`` against ``b`` relative to ``scale`` (default |b|, floored at 1e-300)."""
    a = np.asarray(getattr(a, "x", a), dtype=float)
    b = np.asarray(getattr(b, "x", b), dtype=float)
    if scale is None:
        scale = np.max(np.abs(b))
    return float(np.max(np.abs(a - b)) / max(scale, 1e-300))


def random_number(rng, n, scale=1.0):
    return PolarNComplex(rng.normal(size=n) * scale)


def from_sectors(n, v_plus, v_minus=None, pairs=()):
    """Build a number from canonical sector values via the idempotent basis."""
    b = basis(n)
    u = b.e_plus * v_plus
    if b.e_minus is not None:
        u = u + b.e_minus * (v_minus if v_minus is not None else 1.0)
    for (e, et), (a, c) in zip(b.pairs, pairs):
        u = u + e * a + et * c
    return u


def in_log_domain(rng, n, max_sector=3.0):
    """Random number with v+, v- in (0.2, max_sector) and pair radii in (0.2, max_sector)."""
    K = (n - 1) // 2
    vp = rng.uniform(0.2, max_sector)
    vm = rng.uniform(0.2, max_sector) if n % 2 == 0 else None
    r = rng.uniform(0.2, max_sector, size=K)
    phi = rng.uniform(0, 2 * np.pi, size=K)
    return from_sectors(n, vp, vm, list(zip(r * np.cos(phi), r * np.sin(phi))))


def bounded_sectors(rng, n, bound=3.0):
    """Random number with every sector magnitude at most ``bound``."""
    K = (n - 1) // 2
    vp = rng.uniform(-bound, bound)
    vm = rng.uniform(-bound, bound) if n % 2 == 0 else None
    r = rng.uniform(0, bound, size=K)
    phi = rng.uniform(0, 2 * np.pi, size=K)
    return from_sectors(n, vp, vm, list(zip(r * np.cos(phi), r * np.sin(phi))))


@pytest.fixture
def rng():
    return np.random.default_rng(20001)


dims = st.integers(min_value=2, max_value=12)


@st.composite
def numbers(draw, n=None, bound=3.0):
    n = draw(dims) if n is None else n
    xs = draw(st.lists(st.floats(-bound, bound, allow_nan=False), min_size=n, max_size=n))
    return PolarNComplex(xs)


@st.composite
def same_dim_pair(draw, bound=3.0):
    n = draw(dims)
    return draw(numbers(n, bound)), draw(numbers(n, bound))


@st.composite
def same_dim_triple(draw, bound=3.0):
    n = draw(dims)
    return draw(numbers(n, bound)), draw(numbers(n, bound)), draw(numbers(n, bound))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
