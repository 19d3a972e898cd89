import math

import numpy as np
import pytest

from polarnc import (
    InsufficientCoefficients,
    NotInvertible,
    OutsideConvergenceRegion,
    PolarNComplex,
)
from polarnc import elementary as el
from polarnc.canonical import basis
from polarnc.core import inverse, modulus
from polarnc.series import (
    PowerSeries,
    cr_check,
    derivative_fd,
    evaluate,
    in_cylinder,
    radii,
    recenter,
    sector_coefficients,
    series_derivative,
    spherical_radius_direct,
)

from conftest import bounded_sectors, from_sectors, rel_err

DIMS = range(2, 9)


def geometric(n, length=60):
    return PowerSeries.from_function(n, lambda l: 1.0, length)


def exp_series(n, length=40):
    return PowerSeries.from_function(n, lambda l: 1.0 / math.factorial(l), length)


def split_family(n, length=18):
    """a_l = 2^l e+ + (1 - e+): v+ sector grows as 2^l, every other sector is 1."""
    ep = basis(n).e_plus
    rest = PolarNComplex.one(n) - ep
    return PowerSeries.from_function(n, lambda l: ep * 2.0**l + rest, length)


def direct_sum(s, u):
    """Horner in the algebra itself, no sector split."""
    acc = PolarNComplex.zero(u.n)
    for a in reversed(s.coeffs):
        acc = acc * u + a
    return acc


class TestRadii:
    @pytest.mark.parametrize("n", DIMS)
    def test_geometric(self, n):
        r = radii(geometric(n))
        assert r.c_plus == pytest.approx(1.0, rel=1e-12)
        if n % 2 == 0:
            assert r.c_minus == pytest.approx(1.0, rel=1e-12)
        for c in r.c_k:
            assert c == pytest.approx(1.0, rel=1e-12)
        assert r.c == pytest.approx(1 / math.sqrt(n), rel=1e-12)

    @pytest.mark.parametrize("n", DIMS)
    def test_entire(self, n):
        r = radii(exp_series(n))
        assert r.c_plus == math.inf and r.c == math.inf
        assert all(c == math.inf for c in r.c_k)

    @pytest.mark.parametrize("n", DIMS)
    def test_split_family(self, n):
        r = radii(split_family(n))
        assert r.c_plus == pytest.approx(0.5, rel=1e-9)
        if n % 2 == 0:
            assert r.c_minus == pytest.approx(1.0, rel=1e-9)
        for c in r.c_k:
            assert c == pytest.approx(1.0, rel=1e-9)
        assert r.c == pytest.approx(0.5 / math.sqrt(n), rel=1e-9)

    def test_sparse_coefficients_use_root_test(self):
        # 1/(1 - u^2): odd coefficients vanish, radius still 1
        s = PowerSeries.from_function(3, lambda l: 1.0 if l % 2 == 0 else 0.0, 60)
        assert radii(s).c_plus == pytest.approx(1.0, rel=0.05)

    def test_polynomial_is_entire(self):
        s = PowerSeries.from_function(3, lambda l: 1.0 if l < 3 else 0.0, 20)
        assert radii(s).c == math.inf

    def test_insufficient(self):
        with pytest.raises(InsufficientCoefficients):
            radii(geometric(3, 10))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_direct_spherical_estimate(self, n):
        assert spherical_radius_direct(geometric(n)) == pytest.approx(1 / math.sqrt(n), rel=1e-12)

    @pytest.mark.parametrize("n", DIMS)
    def test_sphere_inside_cylinder(self, n, rng):
        r = radii(split_family(n))
        for _ in range(200):
            x = rng.normal(size=n)
            u = PolarNComplex(x / np.linalg.norm(x) * r.c * rng.uniform(0, 0.999))
            assert in_cylinder(u, r)


class TestSectorCoefficients:
    def test_recombine(self, rng):
        n = 6
        s = PowerSeries(tuple(PolarNComplex(rng.normal(size=n)) for _ in range(5)))
        back = sector_coefficients(s).recombine(n)
        for a, b in zip(back, s.coeffs):
            assert rel_err(a, b) <= 1e-12


class TestEvaluate:
    @pytest.mark.parametrize("n", DIMS)
    def test_exp(self, n, rng):
        s = exp_series(n)
        for _ in range(10):
            x = rng.normal(size=n)
            u = PolarNComplex(x / np.linalg.norm(x) * rng.uniform(0, 2))
            assert rel_err(evaluate(s, u), el.exp(u)) <= 1e-9

    def test_constant(self):
        s = PowerSeries((PolarNComplex.one(4),), exact=True)
        assert evaluate(s, PolarNComplex([3, -1, 2, 7])) == PolarNComplex.one(4)

    @pytest.mark.parametrize("n", DIMS)
    def test_geometric_closed_form(self, n, rng):
        K = (n - 1) // 2
        for _ in range(5):
            phis = rng.uniform(0, 2 * math.pi, size=K)
            u = from_sectors(n, 0.5 * rng.choice([-1, 1]), 0.5 * rng.choice([-1, 1]),
                             [(0.5 * math.cos(p), 0.5 * math.sin(p)) for p in phis])
            want = inverse(PolarNComplex.one(n) - u)
            assert rel_err(evaluate(geometric(n), u), want) <= 1e-9

    def test_outside(self):
        with pytest.raises(OutsideConvergenceRegion):
            evaluate(geometric(3), PolarNComplex([1.5, 0, 0]))

    def test_not_converged_inside(self):
        with pytest.raises(OutsideConvergenceRegion):
            evaluate(geometric(3, 20), PolarNComplex([0.9, 0, 0]))

    def test_matches_direct_horner(self, rng):
        s = PowerSeries(tuple(PolarNComplex(rng.normal(size=5)) for _ in range(6)), exact=True)
        u = PolarNComplex(rng.normal(size=5))
        assert rel_err(evaluate(s, u), direct_sum(s, u)) <= 1e-12

    @pytest.mark.parametrize("n", DIMS)
    def test_comparison_bound(self, n, rng):
        s = PowerSeries(tuple(PolarNComplex(rng.normal(size=n)) for _ in range(8)), exact=True)
        for _ in range(20):
            u = PolarNComplex(rng.normal(size=n) * 0.5)
            lhs = modulus(direct_sum(s, u))
            rhs = sum(n ** (l / 2) * modulus(a) * modulus(u) ** l for l, a in enumerate(s.coeffs))
            assert lhs <= rhs * (1 + 1e-12)


class TestRecenter:
    def test_at_zero(self, rng):
        s = PowerSeries(tuple(PolarNComplex(rng.normal(size=4)) for _ in range(5)), exact=True)
        r = recenter(s, PolarNComplex.zero(4))
        for a, b in zip(r.coeffs, s.coeffs):
            assert a == b

    def test_square(self, rng):
        u0 = PolarNComplex(rng.normal(size=3))
        square = PowerSeries((PolarNComplex.zero(3), PolarNComplex.zero(3), PolarNComplex.one(3)), exact=True)
        c = recenter(square, u0).coeffs
        assert rel_err(c[0], u0 * u0) <= 1e-14
        assert rel_err(c[1], u0 * 2) <= 1e-14
        assert rel_err(c[2], PolarNComplex.one(3)) <= 1e-14

    @pytest.mark.parametrize("n", DIMS)
    def test_evaluation_invariant(self, n, rng):
        s = PowerSeries(tuple(PolarNComplex(rng.normal(size=n)) for _ in range(6)), exact=True)
        u0, u = PolarNComplex(rng.normal(size=n)), PolarNComplex(rng.normal(size=n))
        lhs = evaluate(recenter(s, u0), u - u0)
        assert rel_err(lhs, evaluate(s, u)) <= 1e-10 * max(1.0, modulus(u0) ** 5)

    @pytest.mark.parametrize("n", DIMS)
    def test_composition(self, n, rng):
        s = PowerSeries(tuple(PolarNComplex(rng.normal(size=n)) for _ in range(6)), exact=True)
        u0 = PolarNComplex(rng.normal(size=n) * 0.5)
        back = recenter(recenter(s, u0), -u0)
        for a, b in zip(back.coeffs, s.coeffs):
            assert rel_err(a, b, max(modulus(c) for c in s.coeffs)) <= 1e-9

    def test_series_derivative(self, rng):
        u0 = PolarNComplex(rng.normal(size=4) * 0.3)
        d2 = series_derivative(exp_series(4), u0, 2)
        assert rel_err(d2, el.exp(u0)) <= 1e-12

    def test_degree_too_large(self):
        with pytest.raises(ValueError):
            recenter(geometric(3, 5), PolarNComplex.zero(3), 9)


class TestDerivative:
    @pytest.mark.parametrize("n", DIMS)
    def test_square(self, n, rng):
        u0 = PolarNComplex(rng.normal(size=n))
        d = derivative_fd(lambda u: u * u, u0, PolarNComplex.one(n), 1e-5)
        assert rel_err(d, u0 * 2, 1.0) <= 1e-6

    @pytest.mark.parametrize("n", DIMS)
    def test_direction_independence(self, n, rng):
        u0 = bounded_sectors(rng, n, 1.0)
        d1 = derivative_fd(el.exp, u0, PolarNComplex.one(n), 1e-5)
        d2 = derivative_fd(el.exp, u0, bounded_sectors(rng, n, 1.0) + 3.0, 1e-5)
        assert rel_err(d1, d2, modulus(el.exp(u0))) <= 1e-5

    def test_exp_at_zero(self):
        d = derivative_fd(el.exp, PolarNComplex.zero(5))
        assert rel_err(d, PolarNComplex.one(5)) <= 1e-6

    def test_nodal_direction(self):
        with pytest.raises(NotInvertible):
            derivative_fd(el.exp, PolarNComplex.zero(2), PolarNComplex([1, 1]), 1e-5)


class TestRiemannRelations:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_exp(self, n, rng):
        r = cr_check(el.exp, bounded_sectors(rng, n, 1.0))
        assert r.max_residual <= 1e-5
        assert r.second_order_max <= 1e-3

    def test_constant(self):
        r = cr_check(lambda u: PolarNComplex([1.0, 2.0, 3.0]), PolarNComplex([0.3, -0.2, 0.5]))
        assert r.max_residual == 0.0 and r.second_order_max == 0.0

    def test_non_analytic_control(self):
        r = cr_check(lambda u: PolarNComplex(np.abs(u.x)), PolarNComplex([0.7, -0.4, 0.2, -0.9]))
        assert r.max_residual > 1e-2
