import numpy as np
import pytest

from reference_values import TRUE_TABLES

from sobolev_mh.asymptotics import limit_coeffs
from sobolev_mh.errors import NumericError
from sobolev_mh.jacobi import JacobiParams, clenshaw_eval
from sobolev_mh.presets import SETUPS
from sobolev_mh.sobolev import MassKind, MassSequence, SobolevSetup, sobolev_polynomial
from sobolev_mh.special_functions import bessel_j_zero
from sobolev_mh.zeros import (
    ZeroLocation,
    convergence_table,
    largest_zero_location,
    limit_zeros,
    regime_excluded_count,
    scaled_zeros,
    sobolev_zeros,
)

ZERO_MASS_LEGENDRE = SobolevSetup(JacobiParams(0.0, 0.0), 3,
                                  MassSequence(MassKind.PLAIN, 0.0, 2.0))


def test_legendre_zeros_match_companion_oracle():
    zs = sobolev_zeros(ZERO_MASS_LEGENDRE, 10)
    c = np.zeros(11)
    c[10] = 1.0
    ref = np.sort(np.polynomial.legendre.legroots(c))[::-1]
    assert np.max(np.abs(zs.zeros - ref)) <= 1e-12
    assert np.max(np.abs(zs.zeros + zs.zeros[::-1])) <= 1e-13  # symmetric


@pytest.mark.parametrize("name", sorted(TRUE_TABLES))
@pytest.mark.parametrize("n", [150, 250])
def test_frozen_rows_fast(name, n):
    ref = TRUE_TABLES[name]
    tb = convergence_table(SETUPS[name], [n], 4)
    assert tb.excluded == ref["excluded"]
    np.testing.assert_allclose(tb.rows[0].raw, ref["raw"][n], atol=2e-9, rtol=0)
    np.testing.assert_allclose(tb.rows[0].scaled, ref["scaled"][n], atol=1e-6, rtol=0)
    np.testing.assert_allclose(tb.limit, ref["limit"], atol=1e-8, rtol=0)


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(TRUE_TABLES))
def test_frozen_rows_degree_500(name):
    ref = TRUE_TABLES[name]
    tb = convergence_table(SETUPS[name], [500], 4)
    np.testing.assert_allclose(tb.rows[0].raw, ref["raw"][500], atol=2e-9, rtol=0)
    np.testing.assert_allclose(tb.rows[0].scaled, ref["scaled"][500], atol=1e-6,
                               rtol=0)


class TestZeroSetShape:
    @pytest.mark.parametrize("n", [25, 50, 150, 250])
    def test_count_simplicity_location(self, tabulated_setup, n):
        zs = sobolev_zeros(tabulated_setup, n)
        assert len(zs.zeros) == n
        assert zs.outside_count <= 1
        assert np.all(zs.zeros > -1.0)
        asc = zs.zeros[::-1]
        assert np.all(np.diff(asc) > 0)
        interior = asc[asc <= 1.0]
        u = n * np.sqrt(2.0 * (1.0 - interior))
        if len(u) > 1:
            assert np.min(np.abs(np.diff(u))) > 1e-12

    def test_residual_at_reported_zeros(self, critical_small):
        n = 150
        series = sobolev_polynomial(critical_small, n)
        zs = sobolev_zeros(critical_small, n)
        grid = np.cos(np.linspace(0.0, np.pi, 10 * (n + 1)))
        scale = np.max(np.abs(clenshaw_eval(series, grid)))
        resid = np.max(np.abs(clenshaw_eval(series, zs.zeros)))
        assert resid <= 1e-9 * scale

    def test_diagnostic_error_when_bracketing_starved(self, monkeypatch):
        import sobolev_mh.zeros as zmod

        monkeypatch.setattr(zmod, "_bracket_grid",
                            lambda setup, n: np.array([-1.0, 0.0, 1.0]))
        with pytest.raises(NumericError, match="of 40 zeros"):
            sobolev_zeros(SETUPS["supercritical"], 40)


class TestScaledZeros:
    def test_increasing_and_outside_reported(self, subcritical):
        sc = scaled_zeros(subcritical, 250, 3)
        assert np.all(np.diff(sc.values) > 0)
        assert sc.outside is not None and sc.outside > 1.0

    def test_reference_row(self, supercritical):
        sc = scaled_zeros(supercritical, 250, 4)
        np.testing.assert_allclose(
            sc.values, TRUE_TABLES["supercritical"]["scaled"][250], atol=1e-6)

    def test_count_validation(self, supercritical):
        with pytest.raises(ValueError):
            scaled_zeros(supercritical, 20, 0)
        with pytest.raises(ValueError):
            scaled_zeros(supercritical, 20, 21)


class TestLimitZeros:
    def test_supercritical_bessel_values(self, supercritical):
        zs = limit_zeros(limit_coeffs(supercritical), 4)
        np.testing.assert_allclose(zs, (6.38016, 9.76102, 13.0152, 16.2235),
                                   atol=1e-4)

    def test_subcritical_values(self, subcritical):
        zs = limit_zeros(limit_coeffs(subcritical), 3)
        np.testing.assert_allclose(zs, (7.64622, 11.4432, 14.9699), atol=1e-4)

    def test_critical_frozen_values(self, critical_small, critical_big):
        np.testing.assert_allclose(
            limit_zeros(limit_coeffs(critical_small), 4),
            TRUE_TABLES["critical-small-mass"]["limit"], atol=1e-8)
        np.testing.assert_allclose(
            limit_zeros(limit_coeffs(critical_big), 3),
            TRUE_TABLES["critical-big-mass"]["limit"], atol=1e-8)

    def test_zero_mass_limit_row_is_bessel(self):
        tb = convergence_table(
            SobolevSetup(JacobiParams(3.0, 1.0), 3,
                         MassSequence(MassKind.PLAIN, 0.0, 25.0)),
            [25], 4)
        ref = [bessel_j_zero(3.0, i) for i in (1, 2, 3, 4)]
        np.testing.assert_allclose(tb.limit, ref, atol=1e-9)


class TestLargestZeroLocation:
    def test_supercritical_inside(self, supercritical):
        assert largest_zero_location(supercritical, 250) is ZeroLocation.INSIDE

    def test_subcritical_outside(self, subcritical):
        assert largest_zero_location(subcritical, 250) is ZeroLocation.OUTSIDE

    def test_critical_small_mass_inside(self, critical_small):
        assert largest_zero_location(critical_small, 150) is ZeroLocation.INSIDE

    def test_critical_big_mass_outside(self, critical_big):
        assert largest_zero_location(critical_big, 150) is ZeroLocation.OUTSIDE

    def test_agrees_with_full_zero_set(self, tabulated_setup):
        n = 150
        zs = sobolev_zeros(tabulated_setup, n)
        loc = largest_zero_location(tabulated_setup, n)
        assert (loc is ZeroLocation.OUTSIDE) == (zs.zeros[0] > 1.0)

    def test_matches_mass_threshold_rule(self, critical_small, critical_big):
        # knife-edge regime: escape iff the mass limit exceeds the threshold
        from sobolev_mh.asymptotics import critical_mass_threshold

        V = critical_mass_threshold(-0.9, -0.9, 3)
        assert float(critical_small.mass.M) <= V
        assert float(critical_big.mass.M) > V
        assert regime_excluded_count(critical_small) == 0
        assert regime_excluded_count(critical_big) == 1


class TestHurwitzTrend:
    def test_scaled_rows_approach_limit_fast(self, tabulated_setup):
        ref = TRUE_TABLES
        name = next(k for k, s in SETUPS.items() if s is tabulated_setup)
        lim = np.asarray(ref[name]["limit"])
        r150 = np.asarray(ref[name]["scaled"][150])
        r250 = np.asarray(ref[name]["scaled"][250])
        assert np.all(np.abs(r250 - lim) < np.abs(r150 - lim))

    @pytest.mark.slow
    def test_scaled_rows_approach_limit_500(self, tabulated_setup):
        name = next(k for k, s in SETUPS.items() if s is tabulated_setup)
        lim = np.asarray(TRUE_TABLES[name]["limit"])
        tb150 = convergence_table(tabulated_setup, [150], 4)
        tb500 = convergence_table(tabulated_setup, [500], 4)
        assert np.all(np.abs(tb500.rows[0].scaled - lim)
                      < np.abs(tb150.rows[0].scaled - lim))


def test_convergence_table_validations(supercritical):
    with pytest.raises(ValueError):
        convergence_table(supercritical, [], 4)
    with pytest.raises(ValueError):
        convergence_table(supercritical, [3], 4)
