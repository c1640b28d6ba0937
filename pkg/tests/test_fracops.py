import math

import numpy as np
import pytest
from scipy import special as sp

from abelfrac.expr import parse
from abelfrac.expr.ast import X, add, const, mul, power
from abelfrac.fracops import (
    FracOrder,
    GridAlignmentError,
    caputo_trap,
    frac_integral_trap,
    gl_derivative,
    gl_weights,
    make_grid,
    power_caputo,
    power_integral,
    trapezoid_weights,
)
from abelfrac.quad import integrate_singular
from abelfrac.special import gamma
from abelfrac.utils.tools import fit_order

SMOOTH_INTEGRANDS = ["sin(x) + x^2", "exp(x)", "cos(2*x)", "x^3 - x", "1/(1 + x)", "sqrt(x + 1)", "x*exp(-x)"]


def integrated_power(p: float, beta: float):
    """F = J^beta t^p as an expression, c t^(p + beta)"""
    c = gamma(p + 1.0) / gamma(p + 1.0 + beta)
    return mul(const(c), power(X, const(p + beta)))


class TestOrderAndGrid:
    @pytest.mark.parametrize("beta, n", [(0.5, 1), (1.0, 1), (1.5, 2), (2.0, 2), (2.3, 3)])
    def test_order(self, beta, n):
        order = FracOrder.create(beta)
        assert order.n == n
        assert order.gamma == pytest.approx(n - beta)

    @pytest.mark.parametrize("beta", [0.0, -0.5])
    def test_order_must_be_positive(self, beta):
        with pytest.raises(ValueError):
            FracOrder.create(beta)

    def test_grid(self):
        grid = make_grid(0.3, 7)
        assert grid.nodes[0] == 0.0
        assert grid.nodes[-1] == 0.3
        assert len(grid.nodes) == 8
        assert np.all(np.diff(grid.nodes) > 0)
        assert grid.h == pytest.approx(0.3 / 7)

    @pytest.mark.parametrize("upper, k", [(0.0, 4), (1.0, 0), (1.0, 2.5)])
    def test_grid_rejects(self, upper, k):
        with pytest.raises(ValueError):
            make_grid(upper, k)


class TestGrunwaldLetnikov:
    def test_weights(self):
        np.testing.assert_array_equal(gl_weights(1.0, 2), [1.0, -1.0, 0.0])
        np.testing.assert_array_equal(gl_weights(0.5, 2), [1.0, -0.5, -0.125])
        assert gl_weights(0.5, 4)[4] == -0.0390625

    def test_weights_are_signed_binomials(self):
        rng = np.random.default_rng(0)
        for alpha in rng.uniform(0.05, 2.5, size=10):
            r = np.arange(30)
            expected = (-1.0) ** r * sp.binom(alpha, r)
            np.testing.assert_allclose(gl_weights(alpha, 29), expected, rtol=1e-10, atol=1e-300)

    def test_first_order(self):
        # D^(1/2) x = 2 sqrt(x / pi)
        exact = 2.0 / math.sqrt(math.pi)
        err_h = abs(gl_derivative(X, 0.5, 1.0, 1.0 / 1024) - exact)
        err_h2 = abs(gl_derivative(X, 0.5, 1.0, 1.0 / 2048) - exact)
        assert err_h < 5e-3
        assert 1.7 < err_h / err_h2 < 2.3

    def test_integer_order_is_backward_difference(self):
        h = 1.0 / 64
        assert gl_derivative(parse("x^2"), 1.0, 1.0, h) == pytest.approx(2.0 - h, rel=1e-12)

    def test_zero_function(self):
        assert gl_derivative(parse("0"), 0.5, 1.0, 0.125) == 0.0

    @pytest.mark.parametrize("x, h", [(1.0, 0.3), (0.0, 0.1), (0.05, 0.1)])
    def test_misaligned(self, x, h):
        with pytest.raises(GridAlignmentError):
            gl_derivative(X, 0.5, x, h)

    def test_linear_in_f(self):
        rng = np.random.default_rng(3)
        f, g = parse("sin(x)"), parse("exp(x) - 1")
        h = 1.0 / 32
        for _ in range(20):
            s, t = rng.uniform(0.5, 2.0, size=2)
            # x is an exact multiple of h
            alpha, x = rng.uniform(0.1, 0.9), int(rng.integers(1, 33)) * h
            combined = add(mul(const(s), f), mul(const(t), g))
            parts = s * gl_derivative(f, alpha, x, h), t * gl_derivative(g, alpha, x, h)
            assert gl_derivative(combined, alpha, x, h) == pytest.approx(sum(parts), rel=1e-12)

    def test_approaches_caputo(self):
        # f(0) = f'(0) = 0 for x^2, so both derivatives coincide
        exact = power_caputo(2.0, 0.5, 1.0)
        errors = [abs(gl_derivative(parse("x^2"), 0.5, 1.0, 1.0 / k) - exact) for k in (512, 1024, 2048)]
        assert errors[-1] < 1e-2
        assert errors[0] > errors[1] > errors[2]


class TestTrapezoidWeights:
    def test_single_interval(self):
        np.testing.assert_allclose(trapezoid_weights(0.5, 1), [0.5, 1.0], rtol=1e-15)

    @pytest.mark.parametrize("k", [1, 2, 10, 137])
    @pytest.mark.parametrize("gamma_", [0.1, 0.5, 0.9])
    def test_sum(self, k, gamma_):
        # the rule is exact on constants
        w = trapezoid_weights(gamma_, k)
        assert w.sum() == pytest.approx((gamma_ + 1.0) * k**gamma_, rel=1e-12)
        assert w[-1] == 1.0
        assert np.all(w > 0)

    def test_rejects(self):
        with pytest.raises(ValueError):
            trapezoid_weights(0.5, 0)
        with pytest.raises(ValueError):
            trapezoid_weights(-0.5, 4)


class TestFracIntegral:
    @pytest.mark.parametrize("k", [1, 4, 33])
    def test_exact_on_linear(self, k):
        assert frac_integral_trap(parse("1"), 0.5, 1.0, k) == pytest.approx(1.0 / gamma(1.5), rel=1e-12)
        assert frac_integral_trap(X, 0.5, 1.0, k) == pytest.approx(gamma(2.0) / gamma(2.5), rel=1e-12)

    def test_known_value(self):
        assert frac_integral_trap(X, 0.5, 1.0, 4) == pytest.approx(0.7522527780636751, rel=1e-12)

    def test_second_order(self):
        exact = power_integral(2.0, 0.5, 1.0)
        errors = [abs(frac_integral_trap(parse("x^2"), 0.5, 1.0, k) - exact) for k in (100, 200)]
        assert 3.5 < errors[0] / errors[1] < 4.5

    def test_matches_singular_quadrature(self):
        # |f''| <= 6 on [0, 1], so the interpolation error stays below h^2 |f''| / 8 J^alpha 1
        rng = np.random.default_rng(2)
        for _ in range(10):
            f = parse(SMOOTH_INTEGRANDS[rng.integers(0, len(SMOOTH_INTEGRANDS))])
            alpha = float(rng.uniform(0.1, 0.9))
            quad = integrate_singular(f, alpha, 1.0, tol=1e-12).value / gamma(alpha)
            assert frac_integral_trap(f, alpha, 1.0, 400) == pytest.approx(quad, abs=1e-5)

    def test_linear_in_f(self):
        rng = np.random.default_rng(0)
        f, g = parse("sin(x)"), parse("exp(x) - 1")
        for _ in range(20):
            s, t = rng.uniform(0.5, 2.0, size=2)
            alpha, b, k = rng.uniform(0.1, 0.9), rng.uniform(0.1, 2.0), int(rng.integers(1, 200))
            combined = add(mul(const(s), f), mul(const(t), g))
            parts = s * frac_integral_trap(f, alpha, b, k), t * frac_integral_trap(g, alpha, b, k)
            assert frac_integral_trap(combined, alpha, b, k) == pytest.approx(sum(parts), rel=1e-12)

    @pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
    @pytest.mark.parametrize("beta", [0.5, 0.9])
    def test_semigroup(self, p, beta):
        # J^alpha J^beta t^p = J^(alpha + beta) t^p
        alpha = 0.5
        ks = np.array([20, 40, 80])
        exact = power_integral(p, alpha + beta, 1.0)
        errors = [abs(frac_integral_trap(integrated_power(p, beta), alpha, 1.0, k) - exact) for k in ks]
        assert errors[-1] < 1e-3
        assert fit_order(1.0 / ks, errors) >= 1.8


class TestCaputo:
    def test_linear(self):
        for k in (1, 10):
            assert caputo_trap(X, 0.5, 1.0, k) == pytest.approx(1.0 / gamma(1.5), rel=1e-12)

    def test_constants_vanish(self):
        assert caputo_trap(parse("3"), 0.5, 1.0, 10) == 0.0
        assert caputo_trap(parse("2*x + 1"), 1.5, 1.0, 10) == 0.0

    @pytest.mark.parametrize("k", [50, 100])
    def test_exact_on_squares(self, k):
        # f' is linear, so the interpolant is exact
        assert caputo_trap(parse("x^2"), 0.5, 1.0, k) == pytest.approx(power_caputo(2.0, 0.5, 1.0), rel=1e-12)

    def test_second_order(self):
        exact = power_caputo(3.0, 0.5, 1.0)
        errors = [abs(caputo_trap(parse("x^3"), 0.5, 1.0, k) - exact) for k in (50, 100)]
        assert 3.5 < errors[0] / errors[1] < 4.5

    def test_orders_above_one(self):
        # beta = 1.5 applies the rule of order 1/2 to f''
        assert caputo_trap(parse("x^3"), 1.5, 1.0, 10) == pytest.approx(power_caputo(3.0, 1.5, 1.0), rel=1e-12)

    def test_accepts_order_record(self):
        assert caputo_trap(X, FracOrder.create(0.5), 1.0, 10) == caputo_trap(X, 0.5, 1.0, 10)

    def test_linear_in_f(self):
        rng = np.random.default_rng(1)
        f, g = parse("sin(x)"), parse("exp(x) - 1")
        for _ in range(20):
            s, t = rng.uniform(0.5, 2.0, size=2)
            beta, b, k = rng.uniform(0.1, 0.9), rng.uniform(0.1, 2.0), int(rng.integers(1, 200))
            combined = add(mul(const(s), f), mul(const(t), g))
            parts = s * caputo_trap(f, beta, b, k), t * caputo_trap(g, beta, b, k)
            assert caputo_trap(combined, beta, b, k) == pytest.approx(sum(parts), rel=1e-12)

    @pytest.mark.parametrize("p", [2.0, 3.0])
    def test_inverts_integral(self, p):
        # D^beta J^beta t^p = t^p
        ks = np.array([20, 40, 80])
        errors = [abs(caputo_trap(integrated_power(p, 0.5), 0.5, 1.0, k) - 1.0) for k in ks]
        assert errors[-1] < 1e-3
        assert fit_order(1.0 / ks, errors) >= 1.8

    def test_inverts_integral_of_linear(self):
        ks = np.array([20, 40, 80])
        errors = [abs(caputo_trap(integrated_power(1.0, 0.9), 0.9, 1.0, k) - 1.0) for k in ks]
        assert fit_order(1.0 / ks, errors) >= 1.75
        # F' behaves like t^beta at 0, which caps the order at 1 + beta
        errors = [abs(caputo_trap(integrated_power(1.0, 0.5), 0.5, 1.0, k) - 1.0) for k in ks]
        assert errors[-1] < 1e-3
        assert 1.4 < fit_order(1.0 / ks, errors) < 1.6


class TestClosedForms:
    def test_power_integral(self):
        assert power_integral(0.0, 0.5, 1.0) == pytest.approx(1.0 / gamma(1.5), rel=1e-14)
        assert power_integral(1.0, 1.0, 2.0) == pytest.approx(2.0, rel=1e-14)
        with pytest.raises(ValueError):
            power_integral(-1.0, 0.5, 1.0)

    def test_power_caputo(self):
        assert power_caputo(0.0, 0.5, 2.0) == 0.0
        assert power_caputo(1.0, 1.5, 2.0) == 0.0
        assert power_caputo(1.0, 0.5, 1.0) == pytest.approx(1.0 / gamma(1.5), rel=1e-14)
        assert power_caputo(0.3, 0.5, 1.0) == pytest.approx(gamma(1.3) / gamma(0.8), rel=1e-14)
        with pytest.raises(ValueError):
            power_caputo(0.5, 1.5, 1.0)
