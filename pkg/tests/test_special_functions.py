import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sobolev_mh.special_functions import bessel_j, bessel_j_zero, gamma_ratio, log_gamma

mp.mp.dps = 30


class TestLogGamma:
    def test_at_one(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)

    def test_at_half(self):
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)

    def test_against_stdlib_grid(self):
        # relative where ln Gamma is away from its zeros, absolute near them
        for x in np.concatenate([np.logspace(-8, 6, 300), np.linspace(0.6, 3.4, 200)]):
            ref = math.lgamma(x)
            assert abs(log_gamma(x) - ref) <= 1e-13 * max(1.0, abs(ref))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-2.5)

    @pytest.mark.parametrize("x", [0.31, 1.0, 3.1, 7.7, 40.0])
    def test_duplication_identity(self, x):
        # Gamma(2x) = Gamma(x) Gamma(x+1/2) / (2^(1-2x) sqrt(pi))
        lhs = log_gamma(2.0 * x)
        rhs = (log_gamma(x) + log_gamma(x + 0.5)
               - (1.0 - 2.0 * x) * math.log(2.0) - 0.5 * math.log(math.pi))
        assert abs(math.expm1(lhs - rhs)) <= 1e-12


class TestGammaRatio:
    def test_consecutive_integers(self):
        assert gamma_ratio(10, 1, 0) == pytest.approx(10.0, rel=1e-13)

    def test_identity(self):
        for n in (0.5, 3, 170, 1e5):
            assert gamma_ratio(n, 1.3, 1.3) == 1.0

    def test_stirling_trend(self):
        # Gamma(n+3)/Gamma(n+1) = (n+1)(n+2) exactly; n^(b-a) * ratio -> 1.
        # The log-space route carries ~|ln Gamma| * eps absolute error in the
        # exponent, hence the e-10 comparison.
        n = 1.0e4
        exact = (n + 1.0) * (n + 2.0)
        assert gamma_ratio(n, 3, 1) == pytest.approx(exact, rel=1e-10)
        assert abs(n ** (1 - 3) * gamma_ratio(n, 3, 1) - 1.0) <= 1e-3

    def test_pole_rejected(self):
        with pytest.raises(ValueError):
            gamma_ratio(0, -2, 1)

    @given(st.floats(1.0, 1e5), st.floats(-0.9, 8.0), st.floats(-0.9, 8.0))
    @settings(max_examples=50, deadline=None)
    def test_inverse_product(self, n, a, b):
        assert gamma_ratio(n, a, b) * gamma_ratio(n, b, a) == pytest.approx(
            1.0, rel=1e-13)


class TestBesselJ:
    def test_order_zero_origin(self):
        assert bessel_j(0.0, 0.0) == 1.0
        assert bessel_j(2.5, 0.0) == 0.0

    def test_half_order_closed_form(self):
        # J_{1/2}(x) = sqrt(2/(pi x)) sin x, across both evaluation branches
        assert abs(bessel_j(0.5, math.pi)) <= 1e-12
        for x in (0.3, 2.0, 9.0, 13.0, 16.0, 31.0, 74.0, 99.5):
            ref = math.sqrt(2.0 / (math.pi * x)) * math.sin(x)
            assert bessel_j(0.5, x) == pytest.approx(ref, abs=1e-13)
            ref32 = math.sqrt(2.0 / (math.pi * x)) * (math.sin(x) / x - math.cos(x))
            assert bessel_j(1.5, x) == pytest.approx(ref32, abs=1e-13)

    def test_order3_near_first_zero(self):
        assert abs(bessel_j(3.0, 6.38016)) <= 1e-4

    @pytest.mark.parametrize("nu", [-0.9, -0.5, 0.0, 0.5, 1.0, 3.0, 5.5, 9.0, 12.0])
    def test_against_mpmath(self, nu):
        xs = np.concatenate([np.linspace(0.01, 20.0, 23), np.linspace(21.0, 100.0, 17)])
        for x in xs:
            ref = float(mp.besselj(nu, float(x)))
            assert abs(bessel_j(nu, float(x)) - ref) <= 1e-12

    def test_domain(self):
        with pytest.raises(ValueError):
            bessel_j(-1.0, 1.0)
        with pytest.raises(ValueError):
            bessel_j(0.0, -0.1)

    @given(st.floats(-0.99, 10.0), st.floats(0.1, 50.0))
    @settings(max_examples=80, deadline=None)
    def test_three_term_relation(self, nu, x):
        resid = (bessel_j(nu, x) - (2.0 * (nu + 1.0) / x) * bessel_j(nu + 1.0, x)
                 + bessel_j(nu + 2.0, x))
        assert abs(resid) <= 1e-10


def _series_j0(x):
    # independent ascending series for J_0, plenty of terms for x <= 3
    total = 0.0
    term = 1.0
    for k in range(1, 25):
        total += term
        term *= -(x * x / 4.0) / (k * k)
    return total


def _bisect_first_j0_zero():
    lo, hi = 2.0, 3.0
    flo = _series_j0(lo)
    assert flo * _series_j0(hi) < 0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if (_series_j0(mid) > 0) == (flo > 0):
            lo, flo = mid, _series_j0(mid)
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestBesselZeros:
    def test_order3_first_and_fourth(self):
        assert bessel_j_zero(3.0, 1) == pytest.approx(6.38016, abs=1e-4)
        assert bessel_j_zero(3.0, 4) == pytest.approx(16.2235, abs=1e-4)

    def test_first_zero_of_j0_vs_series_bisection(self):
        assert bessel_j_zero(0.0, 1) == pytest.approx(_bisect_first_j0_zero(),
                                                      abs=1e-9)

    def test_residual_and_monotone(self):
        for nu in (-0.9, 0.0, 3.0, 7.5, 12.0):
            prev = 0.0
            for i in range(1, 13):
                z = bessel_j_zero(nu, i)
                assert z > prev
                assert abs(bessel_j(nu, z)) <= 1e-10
                prev = z

    @pytest.mark.parametrize("nu", [-0.9, -0.4, 0.0, 1.0, 2.5, 4.0, 7.0, 9.5, 11.0])
    def test_interlacing(self, nu):
        for i in range(1, 21):
            assert bessel_j_zero(nu, i) < bessel_j_zero(nu + 1.0, i)
            assert bessel_j_zero(nu + 1.0, i) < bessel_j_zero(nu, i + 1)

    def test_domain(self):
        with pytest.raises(ValueError):
            bessel_j_zero(-1.2, 1)
        with pytest.raises(ValueError):
            bessel_j_zero(0.0, 0)
