"""Tests for the Monte Carlo estimators and verdicts."""

import logging

import numpy as np
import pytest
from scipy import special, stats

from conftest import path_from_values
from empirics import (
    BetaLaw,
    DensityEstimate,
    EmpiricalNu,
    LocationTask,
    NuTask,
    beta_cdf,
    beta_from_moments,
    bound_compliance,
    estimate_location_density,
    estimate_nu,
    fit_beta_moments,
    frame_identity_check,
    frame_thresholds,
    ks_statistic,
    ks_test,
    levy_factorization_check,
    log_binned_slope,
    nu_counts,
    reversibility_check,
    threshold_grid,
    u_marginal_tail_exponent,
)
from locations import LocalMaxCloud, LocationSample, argmax_location, scan_local_maxima
from simulation import GridSpec, SimSpec, gen_path, map_replicates
from spectral import entropy_bound, reversible_bound
from utils.defaults import Defaults
from utils.errors import DomainError, InsufficientDataError


def _synthetic_cloud(l, r, rng):
    """Uncensored cloud with centres spread over [0, 1)."""
    s = rng.uniform(0.0, 1.0, l.size)
    flags = np.zeros(l.size, dtype=bool)
    return LocalMaxCloud(s, l, r, flags, flags, l, r, 0.0, (-np.inf, np.inf))


def _pareto(rng, exponent, floor, size):
    """Samples with survival (x / floor)^-exponent above floor."""
    return floor * rng.uniform(0.0, 1.0, size) ** (-1.0 / exponent)


class TestDensityEstimate:

    def test_all_mass_at_zero(self):
        samples = [LocationSample(0.0, 'supremum', at_zero=True)] * 10
        estimate = estimate_location_density(samples, bins=5)
        assert estimate.mass_at_0 == 1.0
        assert estimate.mass_at_1 == 0.0
        assert not estimate.heights.any()

    def test_mass_identity(self):
        rng = np.random.default_rng(0)
        values = np.concatenate([rng.uniform(size=900), np.zeros(60), np.ones(40)])
        estimate = estimate_location_density(values, bins=20)
        assert estimate.mass_at_0 == pytest.approx(0.06)
        assert estimate.mass_at_1 == pytest.approx(0.04)
        total = estimate.mass_at_0 + estimate.mass_at_1 + estimate.interior_mass
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_uniform_heights(self):
        rng = np.random.default_rng(1)
        estimate = estimate_location_density(rng.uniform(size=100000))
        assert estimate.bins == Defaults.BINS
        assert np.all(np.abs(estimate.heights - 1.0) <= 5.0 * estimate.standard_error)

    def test_curve_and_mirror(self):
        values = [0.05, 0.05, 0.3, 0.95]
        estimate = estimate_location_density(values, bins=4)
        curve = estimate.to_curve()
        assert curve.t_grid.tolist() == [0.125, 0.375, 0.625, 0.875]
        assert curve.se is not None
        np.testing.assert_array_equal(estimate.mirrored().heights, estimate.heights[::-1])

    def test_errors(self):
        with pytest.raises(InsufficientDataError):
            estimate_location_density([])
        with pytest.raises(DomainError):
            estimate_location_density([0.5], bins=1)
        with pytest.raises(DomainError):
            estimate_location_density([0.5, 1.5])


class TestNuCounts:

    @pytest.fixture
    def cloud(self):
        return scan_local_maxima(path_from_values([0.0, 2.0, 1.0, 3.0, 0.0]))

    def test_censored_points_count_by_edge_distance(self, cloud):
        counts, dropped = nu_counts(cloud, [(1.0, 1.0), (2.0, 1.0), (1.0, 3.0)], (0.0, 4.0))
        assert counts.tolist() == [2, 1, 0]
        assert dropped.tolist() == [0, 1, 1]

    def test_centre_range(self, cloud):
        counts, _ = nu_counts(cloud, [(1.0, 1.0)], (2.0, 4.0))
        assert counts.tolist() == [1]

    def test_threshold_validation(self, cloud):
        with pytest.raises(DomainError):
            nu_counts(cloud, [(0.0, 1.0)])
        with pytest.raises(DomainError):
            nu_counts(cloud, [1.0, 2.0, 3.0])

    def test_grids(self):
        pairs = threshold_grid([0.1, 0.2], [0.5, 0.6, 0.7])
        assert pairs.shape == (6, 2)
        assert pairs[:3, 0].tolist() == [0.1, 0.1, 0.1]
        np.testing.assert_allclose(frame_thresholds([0.2, 0.5]), [[0.2, 0.8], [0.5, 0.5]])


class TestEstimateNu:

    def test_monotone_in_both_thresholds(self, brownian_clouds):
        grid = np.geomspace(0.01, 1.0, 6)
        nu = estimate_nu(brownian_clouds, threshold_grid(grid, grid))
        values = nu.values.reshape(6, 6)
        assert np.all(np.diff(values, axis=0) <= 0.0)
        assert np.all(np.diff(values, axis=1) <= 0.0)

    def test_brownian_scale(self, brownian_clouds):
        nu = estimate_nu(brownian_clouds, [(0.1, 0.1)])
        exact = 1.0 / (np.pi * 0.1)
        assert nu.values[0] == pytest.approx(exact, abs=4.0 * nu.standard_error[0] + 0.1 * exact)

    def test_merge_matches_single_pass(self, brownian_clouds):
        pairs = threshold_grid([0.05, 0.2], [0.05, 0.2])
        whole = estimate_nu(brownian_clouds, pairs)
        merged = estimate_nu(brownian_clouds[:20], pairs).merge(estimate_nu(brownian_clouds[20:], pairs))
        np.testing.assert_array_equal(merged.counts, whole.counts)
        np.testing.assert_array_equal(merged.sum_sq, whole.sum_sq)
        assert merged.n_replicates == whole.n_replicates
        np.testing.assert_allclose(merged.standard_error, whole.standard_error, rtol=1e-12)

    def test_merge_needs_same_thresholds(self):
        with pytest.raises(DomainError):
            EmpiricalNu([(0.1, 0.1)]).merge(EmpiricalNu([(0.2, 0.2)]))

    def test_threshold_floor(self, brownian_clouds):
        with pytest.raises(DomainError):
            estimate_nu(brownian_clouds, [(1e-4, 0.5)])

    def test_censor_drops_are_logged_as_warning(self, caplog):
        cloud = scan_local_maxima(path_from_values([0.0, 2.0, 1.0, 3.0, 0.0]))
        with caplog.at_level(logging.WARNING, logger='empirics.nu'):
            nu = estimate_nu([cloud], [(2.0, 2.0)], s_range=(0.0, 4.0))
        assert nu.counts.tolist() == [0]
        assert nu.dropped.tolist() == [2]
        warnings = [r for r in caplog.records if r.levelno == logging.WARNING]
        assert any('dropped 2' in r.getMessage() for r in warnings)

    def test_no_replicates(self):
        with pytest.raises(InsufficientDataError):
            estimate_nu([], [(0.1, 0.1)])
        with pytest.raises(InsufficientDataError):
            EmpiricalNu([(0.1, 0.1)]).values

    def test_time_scaling_identity(self):
        spec = SimSpec('brownian', GridSpec.window(3.0, 512), master_seed=21, replicates=8)
        pairs = threshold_grid([0.05, 0.2, 0.5], [0.1, 0.4])
        paths = [gen_path(spec, i) for i in range(spec.replicates)]
        base = estimate_nu([scan_local_maxima(p, (0.0, 1.0)) for p in paths], pairs)
        scaled = estimate_nu(
            [scan_local_maxima(p.time_scaled(2.0), (0.0, 2.0)) for p in paths],
            2.0 * pairs, s_range=(0.0, 2.0),
        )
        np.testing.assert_array_equal(scaled.counts, base.counts)
        np.testing.assert_allclose(scaled.values, base.values / 2.0, rtol=1e-15)

    def test_frame_identity_for_brownian_motion(self):
        spec = SimSpec('brownian', GridSpec.window(3.0, 256), master_seed=5, replicates=400)
        t_values = Defaults.FRAME_T_VALUES
        pairs = frame_thresholds(t_values)
        results = map_replicates(spec, NuTask(pairs), workers=1)
        nu = EmpiricalNu(pairs)
        for counts, dropped, _ in results:
            nu.add(counts, dropped)
        estimate = estimate_location_density([sample for _, _, sample in results], bins=10)
        verdict = frame_identity_check(nu, estimate, t_values, n_se=4)
        assert verdict.passed, verdict.to_dict()


class TestTails:

    @pytest.mark.parametrize('exponent', [1.0, 2.0])
    def test_synthetic_exponent(self, exponent):
        rng = np.random.default_rng(int(exponent))
        l = _pareto(rng, exponent, 0.05, 100000)
        v = rng.uniform(0.2, 0.8, l.size)
        cloud = _synthetic_cloud(l, l * (1.0 - v) / v, rng)
        estimate = u_marginal_tail_exponent([cloud], u_window=(0.1, 2.0))
        assert estimate == pytest.approx(exponent, abs=0.05)

    def test_brownian_exponent(self, brownian_clouds):
        estimate = u_marginal_tail_exponent(brownian_clouds)
        assert 0.85 <= estimate <= 1.15

    def test_window_required_without_grid(self):
        rng = np.random.default_rng(0)
        cloud = _synthetic_cloud(np.ones(10), np.ones(10), rng)
        with pytest.raises(DomainError):
            u_marginal_tail_exponent([cloud])

    def test_too_few_points(self):
        rng = np.random.default_rng(0)
        cloud = _synthetic_cloud(np.full(10, 0.5), np.full(10, 0.5), rng)
        with pytest.raises(InsufficientDataError):
            u_marginal_tail_exponent([cloud], u_window=(0.1, 1.0))

    def test_log_binned_slope(self):
        rng = np.random.default_rng(9)
        slope, _, used = log_binned_slope(_pareto(rng, 1.5, 1.0, 50000), 1.0, 100.0)
        assert slope == pytest.approx(-2.5, abs=0.05)
        assert used <= 50000
        with pytest.raises(InsufficientDataError):
            log_binned_slope(np.array([2.0, 2.0]), 1.0, 100.0)
        with pytest.raises(DomainError):
            log_binned_slope(np.ones(5), 2.0, 1.0)


class TestBetaLaw:

    @pytest.mark.parametrize('a, b', [(0.5, 0.5), (0.3, 0.7), (2.0, 3.0), (1.0, 1.0), (5.0, 0.8)])
    def test_cdf_matches_scipy(self, a, b):
        for x in (1e-6, 0.01, 0.2, 0.5, 0.77, 0.999):
            assert beta_cdf(a, b, x) == pytest.approx(special.betainc(a, b, x), abs=1e-12)

    def test_cdf_boundaries_and_errors(self):
        assert beta_cdf(0.5, 0.5, 0.0) == 0.0
        assert beta_cdf(0.5, 0.5, 1.0) == 1.0
        with pytest.raises(DomainError):
            beta_cdf(0.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            beta_cdf(1.0, 1.0, 1.5)

    def test_arcsine(self):
        law = BetaLaw.arcsine()
        x = np.array([0.1, 0.5, 0.9])
        np.testing.assert_allclose(law.cdf(x), 2.0 / np.pi * np.arcsin(np.sqrt(x)), atol=1e-12)
        assert law.pdf(0.5) == pytest.approx(2.0 / np.pi)
        assert (law.mean, law.var) == (pytest.approx(0.5), pytest.approx(0.125))

    def test_uniform(self):
        assert BetaLaw.uniform().cdf(0.3) == pytest.approx(0.3)
        assert BetaLaw.uniform().pdf(0.3) == pytest.approx(1.0)

    def test_moments(self):
        assert beta_from_moments(0.5, 0.125) == BetaLaw(0.5, 0.5)
        with pytest.raises(DomainError):
            beta_from_moments(0.5, 0.25)
        with pytest.raises(DomainError):
            beta_from_moments(1.0, 0.1)

    def test_fit_recovers_parameters(self):
        rng = np.random.default_rng(12)
        law = fit_beta_moments(rng.beta(2.0, 3.0, 200000))
        assert law.a == pytest.approx(2.0, abs=0.05)
        assert law.b == pytest.approx(3.0, abs=0.08)

    def test_brownian_location_is_arcsine(self):
        spec = SimSpec('brownian', GridSpec.unit(512), master_seed=3, replicates=12000)
        samples = map_replicates(spec, LocationTask('supremum'), workers=1)
        law = fit_beta_moments(samples)
        assert law.a + law.b == pytest.approx(1.0, abs=0.05)
        assert abs(law.a - law.b) <= 0.05


class TestKolmogorovSmirnov:

    def test_single_sample(self):
        d, n = ks_statistic([0.5], lambda x: x)
        assert (d, n) == (0.5, 1)

    def test_scalar_cdf(self):
        d, _ = ks_statistic([0.25, 0.75], lambda x: min(max(x, 0.0), 1.0))
        assert d == pytest.approx(0.25)

    def test_uniform_accepted(self):
        rng = np.random.default_rng(10)
        samples = rng.uniform(size=20000)
        verdict = ks_test(samples, lambda x: x)
        assert verdict.threshold == pytest.approx(1.6276 / np.sqrt(20000), rel=1e-3)
        strict = ks_test(samples, lambda x: x, level=1e-4)
        assert strict.passed
        assert strict.to_dict()['pass']

    def test_wrong_law_rejected(self):
        rng = np.random.default_rng(10)
        verdict = ks_test(rng.uniform(size=20000), BetaLaw.arcsine().cdf)
        assert not verdict.passed
        assert verdict.p_value < 1e-6

    def test_empty(self):
        with pytest.raises(DomainError):
            ks_statistic([], lambda x: x)


class TestHorizonScaling:

    def test_brownian_locations_ignore_the_horizon(self):
        # same draws on [0, 4] give the path on [0, 1] times two
        short = SimSpec('brownian', GridSpec(0.0, 1.0, 257), 13, 50)
        long = SimSpec('brownian', GridSpec(0.0, 4.0, 257), 13, 50)
        for i in range(short.replicates):
            a, b = gen_path(short, i), gen_path(long, i)
            np.testing.assert_allclose(b.values, 2.0 * a.values, rtol=1e-12)
            assert argmax_location(a).to_dict() == argmax_location(b).to_dict()

    def test_fbm_location_law_ignores_the_horizon(self):
        reps = 2000
        short = SimSpec('fbm', GridSpec(0.0, 1.0, 129), 14, reps, hurst=0.7)
        long = SimSpec('fbm', GridSpec(0.0, 2.0, 129), 15, reps, hurst=0.7)
        a = [argmax_location(gen_path(short, i)).value for i in range(reps)]
        b = [argmax_location(gen_path(long, i)).value for i in range(reps)]
        assert stats.ks_2samp(a, b).pvalue > 1e-3


class TestLevyFactorization:

    def test_synthetic_product_law(self):
        rng = np.random.default_rng(6)
        clouds = [
            _synthetic_cloud(_pareto(rng, 0.3, 0.01, 5000), _pareto(rng, 0.7, 0.01, 5000), rng)
            for _ in range(10)
        ]
        report = levy_factorization_check(clouds, l_window=(0.02, 2.0), r_window=(0.02, 2.0))
        assert report.c1 == pytest.approx(0.3, abs=0.05)
        assert report.c2 == pytest.approx(0.7, abs=0.05)
        assert report.marginal_c1 == pytest.approx(0.3, abs=0.05)
        assert report.max_interaction < 0.5
        law = report.predicted_law()
        assert law.a == pytest.approx(0.7, abs=0.05)

    def test_brownian_motion(self, brownian_clouds):
        report = levy_factorization_check(brownian_clouds, l_window=(0.01, 0.75),
                                          r_window=(0.01, 0.75))
        assert 0.9 <= report.exponent_sum <= 1.1
        assert report.c1 == pytest.approx(0.5, abs=0.1)
        assert report.c2 == pytest.approx(0.5, abs=0.1)
        assert report.n_points >= 10000

    def test_too_few_points(self, brownian_clouds):
        with pytest.raises(InsufficientDataError):
            levy_factorization_check(brownian_clouds[:1], min_points=10 ** 6)


class TestVerdicts:

    def test_uniform_density_within_bounds(self):
        rng = np.random.default_rng(2)
        estimate = estimate_location_density(rng.uniform(size=20000))
        assert bound_compliance(estimate).passed
        verdict = bound_compliance(estimate, reversible_bound)
        assert verdict.passed
        assert verdict.name == 'reversible_bound'

    def test_spike_violates_bound(self):
        estimate = estimate_location_density(np.full(1000, 0.51))
        verdict = bound_compliance(estimate, entropy_bound)
        assert not verdict.passed
        assert verdict.details['violations'] == 1
        assert verdict.statistic > 1.0

    def test_frame_identity_mismatch(self):
        pairs = frame_thresholds([0.3, 0.5])
        nu = EmpiricalNu(pairs)
        for _ in range(100):
            nu.add([5, 5], [0, 0])
        estimate = estimate_location_density(np.random.default_rng(0).uniform(size=5000), bins=10)
        verdict = frame_identity_check(nu, estimate, [0.3, 0.5])
        assert not verdict.passed
        assert verdict.statistic > 3.0
        with pytest.raises(DomainError):
            frame_identity_check(nu, estimate, [0.2])

    def test_frame_allowance_is_looser_term_not_sum(self):
        # 100 replicates, 12 of them count 2 and the rest 1: nu = 1.12
        nu = EmpiricalNu(frame_thresholds([0.5]), counts=[112], sum_sq=[136], n_replicates=100)
        three_se = 3.0 * np.sqrt((1.36 - 1.12 ** 2) * 100.0 / 99.0 / 100.0)
        edges = np.linspace(0.0, 1.0, 11)

        def flat(height):
            return DensityEstimate(edges, np.full(10, height), 0.0, 0.0, 1000, np.zeros(10))

        # gap 0.12 sits between max(3 SE, 5%) = 0.098 and their sum 0.148
        verdict = frame_identity_check(nu, flat(1.0), [0.5], n_se=3, rel_tol=0.05)
        assert not verdict.passed
        assert verdict.details['points'][0]['allowed'] == pytest.approx(three_se)
        assert verdict.statistic == pytest.approx(0.12 / three_se)

        verdict = frame_identity_check(nu, flat(1.05), [0.5], n_se=3, rel_tol=0.05)
        assert verdict.passed
        assert verdict.statistic < 1.0

        verdict = frame_identity_check(nu, flat(1.0), [0.5], n_se=3, rel_tol=0.2)
        assert verdict.passed
        assert verdict.details['points'][0]['allowed'] == pytest.approx(0.2)

    def test_reversibility(self):
        rng = np.random.default_rng(4)
        assert reversibility_check(rng.uniform(size=4000), level=1e-4).passed
        assert not reversibility_check(rng.beta(2.0, 5.0, size=4000), level=1e-4).passed
        with pytest.raises(DomainError):
            reversibility_check([0.5, 0.5])


class TestTasks:

    def test_location_task(self):
        path = path_from_values([0.0, 1.0, 0.5, 3.0], 0.0, 1.0)
        assert LocationTask('largest_drawdown')(path).value == pytest.approx(2.0 / 3.0)
        assert LocationTask()(path).at_one
