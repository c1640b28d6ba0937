import math

import numpy as np
import pytest
from scipy import special as sp

from abelfrac.special import GammaPoleError, beta, erf, gamma, lgamma
from abelfrac.special.functions import STIRLING_CUTOFF


class TestGamma:
    @pytest.mark.parametrize(
        "x, expected",
        [
            (1.0, 1.0),
            (2.0, 1.0),
            (5.0, 24.0),
            (0.5, math.sqrt(math.pi)),
            (1.5, 0.5 * math.sqrt(math.pi)),
            (-0.5, -2.0 * math.sqrt(math.pi)),
        ],
    )
    def test_known_values(self, x, expected):
        assert gamma(x) == pytest.approx(expected, rel=1e-13)

    def test_matches_scipy(self):
        xs = np.linspace(0.1, 170.0, 4001)
        np.testing.assert_allclose(gamma(xs), sp.gamma(xs), rtol=1e-13)

    def test_top_of_range(self):
        rng = np.random.default_rng(4)
        xs = np.concatenate([rng.uniform(150.0, 171.5, size=500), [169.872, 170.0, 171.5]])
        np.testing.assert_allclose(gamma(xs), sp.gamma(xs), rtol=1e-13)

    def test_continuous_across_cutoff(self):
        xs = np.nextafter(STIRLING_CUTOFF, [0.0, np.inf])
        np.testing.assert_allclose(gamma(xs), sp.gamma(xs), rtol=1e-14)
        assert lgamma(STIRLING_CUTOFF) == pytest.approx(math.log(362880.0), rel=1e-15)

    def test_recurrence(self):
        rng = np.random.default_rng(0)
        xs = rng.uniform(0.5, 50.0, size=1000)
        np.testing.assert_allclose(gamma(xs + 1.0), xs * gamma(xs), rtol=1e-12)

    def test_reflection(self):
        rng = np.random.default_rng(1)
        xs = rng.uniform(0.01, 0.99, size=500)
        np.testing.assert_allclose(gamma(xs) * gamma(1.0 - xs), np.pi / np.sin(np.pi * xs), rtol=1e-12)

    def test_kernel_identity(self):
        # sin(a pi) Gamma(a) Gamma(1 - a) = pi is what ties the exact solution to the Caputo form
        for a in np.linspace(0.05, 0.95, 19):
            assert math.sin(a * math.pi) * gamma(a) * gamma(1.0 - a) == pytest.approx(math.pi, rel=1e-12)

    def test_negative_non_integers(self):
        xs = np.array([-0.5, -1.5, -2.25, -7.3])
        np.testing.assert_allclose(gamma(xs), sp.gamma(xs), rtol=1e-12)

    @pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -10.0])
    def test_poles(self, x):
        with pytest.raises(GammaPoleError):
            gamma(x)
        with pytest.raises(GammaPoleError):
            lgamma(x)

    def test_overflow(self):
        assert math.isfinite(gamma(171.5))
        with pytest.raises(OverflowError):
            gamma(172.0)

    def test_scalar_and_array(self):
        assert isinstance(gamma(3.0), float)
        out = gamma(np.array([[1.0, 2.0], [3.0, 4.0]]))
        assert out.shape == (2, 2)
        np.testing.assert_allclose(out, [[1.0, 1.0], [2.0, 6.0]], rtol=1e-14)


class TestLgamma:
    def test_matches_scipy(self):
        xs = np.linspace(0.1, 1000.0, 5001)
        np.testing.assert_allclose(lgamma(xs), sp.gammaln(xs), rtol=1e-12, atol=1e-13)

    def test_far_beyond_gamma_overflow(self):
        assert lgamma(1e5) == pytest.approx(sp.gammaln(1e5), rel=1e-13)

    def test_negative(self):
        assert lgamma(-0.5) == pytest.approx(math.log(2.0 * math.sqrt(math.pi)), rel=1e-13)
        assert lgamma(-2.5) == pytest.approx(sp.gammaln(-2.5), rel=1e-12)


class TestBeta:
    def test_known_value(self):
        assert beta(2.0, 0.5) == pytest.approx(4.0 / 3.0, rel=1e-13)
        assert beta(1.0, 1.0) == pytest.approx(1.0, rel=1e-14)

    def test_symmetry(self):
        rng = np.random.default_rng(2)
        a, b = rng.uniform(0.1, 10.0, size=(2, 200))
        np.testing.assert_allclose(beta(a, b), beta(b, a), rtol=1e-14)

    def test_matches_scipy(self):
        rng = np.random.default_rng(3)
        a, b = rng.uniform(0.1, 10.0, size=(2, 500))
        np.testing.assert_allclose(beta(a, b), sp.beta(a, b), rtol=1e-12)

    def test_large_arguments_use_log_gamma(self):
        assert beta(200.0, 300.0) == pytest.approx(sp.beta(200.0, 300.0), rel=1e-10)

    def test_example_constant(self):
        assert beta(7.0 / 6.0, 1.0 / 3.0) == pytest.approx(2.804364210650911, rel=1e-13)


class TestErf:
    def test_known_values(self):
        assert erf(0.0) == 0.0
        assert erf(1.0) == pytest.approx(0.8427007929497149, abs=1e-13)
        assert erf(2.0) == pytest.approx(1.0 - 0.0046777349810472662, abs=1e-13)

    def test_odd(self):
        xs = np.linspace(0.0, 7.0, 701)
        np.testing.assert_array_equal(erf(-xs), -erf(xs))

    def test_matches_scipy(self):
        xs = np.linspace(-8.0, 8.0, 4001)
        np.testing.assert_allclose(erf(xs), sp.erf(xs), rtol=0, atol=1e-13)

    def test_branch_boundaries(self):
        # both sides of the series / continued fraction switch and the saturation point
        for x0 in (2.0, 6.0):
            xs = np.array([np.nextafter(x0, 0.0), x0, np.nextafter(x0, 10.0)])
            np.testing.assert_allclose(erf(xs), sp.erf(xs), rtol=0, atol=1e-13)

    def test_monotone_and_bounded(self):
        values = erf(np.linspace(-7.0, 7.0, 1001))
        assert np.all(np.diff(values) >= 0)
        assert np.all(np.abs(values) <= 1.0)
