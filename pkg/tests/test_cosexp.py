import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from polarnc import PolarNComplex
from polarnc import elementary
from polarnc.cosexp import (
    alternating_square_sum_closed,
    cosexp,
    exp_hk,
    fourier_closed,
    fourier_sums,
    g_closed,
    g_series,
    hyp_hk,
    product_identity,
    square_sum_closed,
    trig_hk,
)

from conftest import rel_err

Y_GRID = np.arange(-5.0, 5.0 + 1e-9, 0.25)


def series_oracle(n, k, y, terms=None):
    """Truncated series summed with fsum; terms built by running products."""
    count = k + n * (terms if terms is not None else 60 // n + 4)
    term, out = 1.0, []
    for j in range(count):
        if j >= k and (j - k) % n == 0:
            out.append(term)
        term *= y / (j + 1)
    return math.fsum(out)


class TestClosedForm:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_at_zero(self, n):
        assert g_closed(n, 0, 0.0) == pytest.approx(1.0, abs=1e-15)
        for k in range(1, n):
            assert g_closed(n, k, 0.0) == pytest.approx(0.0, abs=1e-15)

    def test_cosh(self):
        assert g_closed(2, 0, 1.0) == pytest.approx(1.5430806348152437, rel=1e-14)

    def test_n3_frozen_series_value(self):
        # 30-term series oracle; frozen
        assert series_oracle(3, 0, 1.0, 30) == pytest.approx(1.1680583133759186, rel=1e-15)
        assert g_closed(3, 0, 1.0) == pytest.approx(1.1680583133759186, rel=1e-14)

    def test_index_errors(self):
        with pytest.raises(IndexError):
            g_closed(3, 3, 0.0)
        with pytest.raises(IndexError):
            g_closed(3, -1, 0.0)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_matches_fsum_series(self, n):
        for y in Y_GRID:
            for k in range(n):
                assert abs(g_closed(n, k, y) - series_oracle(n, k, y)) <= 1e-10


class TestSeries:
    def test_zero(self):
        assert g_series(4, 1, 0.0, 10) == 0.0

    def test_sinh(self):
        assert g_series(2, 1, 1.0, 30) == pytest.approx(math.sinh(1.0), rel=1e-15)

    def test_rejects_zero_terms(self):
        with pytest.raises(ValueError):
            g_series(3, 0, 1.0, 0)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_adaptive_matches_closed(self, n):
        for y in Y_GRID:
            for k in range(n):
                assert abs(g_series(n, k, y) - g_closed(n, k, y)) <= 1e-10
                assert abs(g_series(n, k, y, 30) - g_closed(n, k, y)) <= 1e-10


class TestSums:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_row_sum_and_alternating(self, n):
        for y in Y_GRID:
            g = cosexp(n, y).values
            assert math.fsum(g) == pytest.approx(math.exp(y), rel=1e-12)
            if n % 2 == 0:
                alt = math.fsum((-1) ** k * v for k, v in enumerate(g))
                assert alt == pytest.approx(math.exp(-y), rel=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_parity(self, n):
        for y in Y_GRID:
            for k in range(n):
                sign = 1 if k % 2 == 0 else -1
                assert g_closed(n, k, -y) == pytest.approx(sign * g_closed(n, k, y), abs=1e-13)


def scaled_close(got, want, scale, tol=1e-10):
    return abs(got - want) <= tol * scale


class TestIdentities:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_square_sum(self, n):
        for y in Y_GRID:
            g = cosexp(n, y).values
            assert square_sum_closed(n, y) == pytest.approx(math.fsum(v * v for v in g), rel=1e-10)

    @pytest.mark.parametrize("n", [4, 8])
    def test_alternating_square_sum(self, n):
        for y in Y_GRID:
            terms = [(-1) ** k * v * v for k, v in enumerate(cosexp(n, y).values)]
            assert scaled_close(alternating_square_sum_closed(n, y), math.fsum(terms), math.exp(2 * abs(y)))

    def test_alternating_square_sum_at_zero(self):
        for n in (4, 8, 12, 16):
            assert alternating_square_sum_closed(n, 0.0) == pytest.approx(1.0, rel=1e-15)

    def test_alternating_square_sum_rejects(self):
        with pytest.raises(ValueError):
            alternating_square_sum_closed(6, 1.0)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_addition_theorem(self, n):
        for y in Y_GRID[::3]:
            for z in Y_GRID[::5]:
                gy, gz = cosexp(n, y).values, cosexp(n, z).values
                for k in range(n):
                    terms = [gy[j] * gz[(k - j) % n] for j in range(n)]
                    assert scaled_close(math.fsum(terms), g_closed(n, k, y + z), math.exp(abs(y) + abs(z)))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_opposite_arguments(self, n):
        for y in Y_GRID:
            gy, gm = cosexp(n, y).values, cosexp(n, -y).values
            for k in range(n):
                terms = [gy[j] * gm[(k - j) % n] for j in range(n)]
                assert scaled_close(math.fsum(terms), 1.0 if k == 0 else 0.0, math.exp(2 * abs(y)))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_power_identity(self, n):
        for k in range(1, n):
            for y in Y_GRID[::4]:
                base = exp_hk(n, k, y)
                p = PolarNComplex.one(n)
                for l in range(1, 6):
                    p = p * base
                    want = exp_hk(n, k, l * y)
                    scale = math.exp(abs(l * y))
                    assert rel_err(p, want, scale) <= 1e-10

    @pytest.mark.parametrize("n", range(2, 9))
    def test_fourier_sums(self, n):
        for y in Y_GRID:
            a, b = fourier_sums(n, y)
            ca, cb = fourier_closed(n, y)
            scale = math.exp(abs(y))
            assert np.max(np.abs(a - ca)) <= 1e-10 * scale
            assert np.max(np.abs(b[1:] - cb[1:])) <= 1e-10 * scale
            G2 = a[1:] ** 2 + b[1:] ** 2
            want = np.exp(2 * y * np.cos(2 * np.pi * np.arange(1, n) / n))
            assert np.max(np.abs(G2 - want) / want) <= 1e-10
            assert a[0] == pytest.approx(math.exp(y), rel=1e-10)
            if n % 2 == 0:
                assert a[n // 2] == pytest.approx(math.exp(-y), rel=1e-10)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_product_identity(self, n):
        for y in Y_GRID:
            assert product_identity(n, y) == pytest.approx(1.0, rel=1e-10)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_derivative_chain(self, n):
        h = 1e-5
        for y in Y_GRID:
            for k in range(n):
                fd = (g_closed(n, k, y + h) - g_closed(n, k, y - h)) / (2 * h)
                assert abs(fd - g_closed(n, (k - 1) % n, y)) <= 1e-6 * max(1.0, math.exp(abs(y)) / 10)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_ode(self, n):
        # n-th central difference of g_nk approximates g_nk
        h = 1e-2
        for y in [-1.0, 0.0, 0.5, 1.5]:
            for k in range(n):
                fd = sum(
                    (-1) ** j * math.comb(n, j) * g_closed(n, k, y + (n / 2 - j) * h) for j in range(n + 1)
                ) / h**n
                assert abs(fd - g_closed(n, k, y)) <= 1e-4 * max(1.0, math.exp(abs(y)))


class TestHkFunctions:
    def test_n2_hyperbolic(self):
        for y in Y_GRID:
            v = exp_hk(2, 1, y)
            assert rel_err(v, [math.cosh(y), math.sinh(y)]) <= 1e-14

    @pytest.mark.parametrize("n", range(2, 9))
    def test_at_zero(self, n):
        one, zero = PolarNComplex.one(n), np.zeros(n)
        for k in range(1, n):
            assert rel_err(exp_hk(n, k, 0.0), one) <= 1e-15
            c, s = trig_hk(n, k, 0.0)
            assert rel_err(c, one) <= 1e-15 and rel_err(s, zero, 1.0) <= 1e-15
            ch, sh = hyp_hk(n, k, 0.0)
            assert rel_err(ch, one) <= 1e-15 and rel_err(sh, zero, 1.0) <= 1e-15

    @pytest.mark.parametrize("n", range(2, 9))
    def test_against_sector_functions(self, n):
        for k in range(1, n):
            for y in Y_GRID[::2]:
                arg = PolarNComplex.unit(n, k) * y
                scale = math.exp(abs(y))
                assert rel_err(exp_hk(n, k, y), elementary.exp(arg), scale) <= 1e-11
                c, s = trig_hk(n, k, y)
                assert rel_err(c, elementary.cos(arg), scale) <= 1e-10
                assert rel_err(s, elementary.sin(arg), scale) <= 1e-10
                assert rel_err(c * c + s * s, PolarNComplex.one(n), scale**2) <= 1e-10
                ch, sh = hyp_hk(n, k, y)
                assert rel_err(ch, elementary.cosh(arg), scale) <= 1e-10
                assert rel_err(sh, elementary.sinh(arg), scale) <= 1e-10
                assert rel_err(ch * ch - sh * sh, PolarNComplex.one(n), scale**2) <= 1e-10
                assert rel_err(ch + sh, exp_hk(n, k, y), scale) <= 1e-12

    def test_index_errors(self):
        with pytest.raises(IndexError):
            exp_hk(3, 0, 1.0)
        with pytest.raises(IndexError):
            trig_hk(3, 3, 1.0)


@given(st.integers(2, 8), st.floats(-5, 5))
def test_cosexp_row_sums(n, y):
    assert math.fsum(cosexp(n, y).values) == pytest.approx(math.exp(y), rel=1e-12)
