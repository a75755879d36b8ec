import math

import numpy as np
import pytest

from hypdisc import (
    CemConfig,
    ConfNatural,
    DiscPoint,
    DomainError,
    KarcherConfig,
    MoebiusTransform,
    NonConvergenceError,
    ORIGIN,
    ObjectiveError,
    RngStream,
    cem_optimize,
    cn_sample,
    cn_sample_complex,
    fit_mle,
    hyp_distance,
    hyp_exp,
    karcher_mean,
    loglik_location_gradient,
    mobius_apply,
    mobius_inverse,
    total_log_likelihood,
)
from hypdisc.estimation import concentration_mle
from hypdisc.geometry import mobius_apply_complex

TWO_PI = 2.0 * math.pi


def random_disc_points(gen, n, max_radius=0.85):
    z = max_radius * np.sqrt(gen.random(n)) * np.exp(1j * TWO_PI * gen.random(n))
    return [DiscPoint.from_complex(w) for w in z]


class TestConfigs:
    def test_karcher_validation(self):
        with pytest.raises(DomainError):
            KarcherConfig(tol=0.0)
        with pytest.raises(DomainError):
            KarcherConfig(max_iter=0)
        with pytest.raises(DomainError):
            KarcherConfig(step=1.5)

    def test_cem_validation(self):
        with pytest.raises(DomainError):
            CemConfig(population=1)
        with pytest.raises(DomainError):
            CemConfig(elite_frac=0.0)
        with pytest.raises(DomainError):
            CemConfig(alpha0=1.0)
        with pytest.raises(DomainError):
            CemConfig(alpha_growth=0.9)

    def test_elite_count_ceil(self):
        assert CemConfig(population=10, elite_frac=0.25).elite_count == 3
        assert CemConfig(population=10, elite_frac=1.0).elite_count == 10


class TestKarcher:
    def test_single_point(self):
        p = DiscPoint(0.3, -0.1)
        assert karcher_mean([p]) == p

    def test_symmetric_pair_midpoint(self):
        w = DiscPoint(0.6, 0.2)
        minus_w = DiscPoint(-0.6, -0.2)
        m = karcher_mean([w, minus_w])
        assert abs(m.as_complex()) < 1e-12

    def test_recovers_family_location(self):
        a = DiscPoint(0.3, 0.4)
        z = cn_sample_complex(ConfNatural(10.0, a), RngStream(7001), 10**5)
        m = karcher_mean(z)
        assert hyp_distance(m, a) < 0.05

    def test_accepts_point_lists_and_weights(self):
        pts = [DiscPoint(0.5, 0.0), DiscPoint(-0.5, 0.0), DiscPoint(0.0, 0.5)]
        m_uniform = karcher_mean(pts)
        m_weighted = karcher_mean(pts, weights=[1.0 / 3.0] * 3)
        assert hyp_distance(m_uniform, m_weighted) < 1e-9

    def test_weight_concentration_pulls_mean(self):
        pts = [DiscPoint(0.5, 0.0), DiscPoint(-0.5, 0.0)]
        m = karcher_mean(pts, weights=[0.999, 0.001])
        assert hyp_distance(m, pts[0]) < hyp_distance(m, pts[1])

    def test_objective_monotone_history(self):
        gen = np.random.default_rng(43)
        history = []
        karcher_mean(random_disc_points(gen, 500, max_radius=0.95), history=history)
        values = np.array([j for _, j in history])
        assert np.all(np.diff(values) <= 1e-12 * (1.0 + values[:-1]))

    def test_equivariance(self):
        gen = np.random.default_rng(47)
        pts = random_disc_points(gen, 200)
        cfg = KarcherConfig(tol=1e-12)
        g = MoebiusTransform(DiscPoint(0.3, 0.5), 2.2)
        moved = [mobius_apply(g, p) for p in pts]
        lhs = karcher_mean(moved, cfg=cfg)
        rhs = mobius_apply(g, karcher_mean(pts, cfg=cfg))
        assert hyp_distance(lhs, rhs) < 2.0 * 1e-9

    def test_validation(self):
        with pytest.raises(DomainError):
            karcher_mean([])
        pts = [DiscPoint(0.1, 0.0), DiscPoint(0.2, 0.0)]
        with pytest.raises(DomainError):
            karcher_mean(pts, weights=[0.7, 0.7])
        with pytest.raises(DomainError):
            karcher_mean(pts, weights=[-0.5, 1.5])

    def test_nonconvergence_carries_best_iterate(self):
        gen = np.random.default_rng(53)
        pts = random_disc_points(gen, 50, max_radius=0.9)
        with pytest.raises(NonConvergenceError) as excinfo:
            karcher_mean(pts, cfg=KarcherConfig(tol=1e-15, max_iter=1))
        assert isinstance(excinfo.value.best, DiscPoint)


class TestMle:
    def test_centred_recovery_with_fixed_alpha(self):
        z = cn_sample_complex(ConfNatural(2.0, ORIGIN), RngStream(7003), 10**4)
        result = fit_mle(z, fixed_alpha=2.0)
        assert result.converged
        assert result.alpha_hat == 2.0
        assert hyp_distance(result.a_hat, ORIGIN) < 0.05

    def test_joint_recovery(self):
        true = DiscPoint(0.5, 0.0)
        z = cn_sample_complex(ConfNatural(2.0, true), RngStream(7002), 10**4)
        result = fit_mle(z)
        assert result.converged
        assert abs(result.alpha_hat - 2.0) < 0.15
        assert hyp_distance(result.a_hat, true) < 0.05

    def test_fit_beats_truth_on_the_sample(self):
        true_alpha, true_a = 3.0, DiscPoint(0.2, -0.3)
        z = cn_sample_complex(ConfNatural(true_alpha, true_a), RngStream(7004), 5000)
        result = fit_mle(z)
        truth_ll = total_log_likelihood(z, true_alpha, true_a)
        assert result.log_likelihood >= truth_ll - 1e-9

    def test_gradient_matches_finite_differences(self):
        gen = np.random.default_rng(59)
        h = 1e-6
        for _ in range(20):
            alpha = 1.3 + 6.0 * gen.random()
            a = DiscPoint.from_complex(
                0.7 * math.sqrt(gen.random()) * np.exp(1j * TWO_PI * gen.random())
            )
            samples = random_disc_points(gen, 200)
            analytic = loglik_location_gradient(samples, alpha, a)
            fd = np.array(
                [
                    (
                        total_log_likelihood(samples, alpha, hyp_exp(a, dv * h))
                        - total_log_likelihood(samples, alpha, hyp_exp(a, -dv * h))
                    )
                    / (2.0 * h)
                    for dv in (np.array([1.0, 0.0]), np.array([0.0, 1.0]))
                ]
            )
            assert np.linalg.norm(analytic - fd) / np.linalg.norm(analytic) < 1e-5

    def test_concentration_closed_form_is_consistent(self):
        # at the true location the closed-form estimate converges to the
        # true concentration
        true_a = DiscPoint(0.4, 0.0)
        estimates = [
            concentration_mle(cn_sample_complex(ConfNatural(3.0, true_a), s, 10**5), true_a)
            for s in RngStream(9090).split(20)
        ]
        assert abs(float(np.mean(estimates)) - 3.0) < 0.05

    def test_degenerate_input(self):
        p = DiscPoint(0.1, 0.1)
        with pytest.raises(DomainError):
            fit_mle([p, p, p])
        with pytest.raises(DomainError):
            fit_mle([p])
        with pytest.raises(DomainError):
            fit_mle([p, DiscPoint(0.2, 0.0)], fixed_alpha=1.0)

    def test_array_input_outside_disc_rejected(self):
        bad = np.array([0.1 + 0.1j, 1.5 + 0.0j])
        with pytest.raises(DomainError):
            fit_mle(bad)
        with pytest.raises(DomainError):
            karcher_mean(np.array([0.2 + 0.0j, float("nan") + 0.0j]))


class TestCem:
    def test_elite_frac_one_growth_one_updates_to_population_mean(self):
        cfg = CemConfig(population=50, elite_frac=1.0, iterations=1, alpha0=2.0, alpha_growth=1.0)
        _, trace = cem_optimize(lambda p: p.radius, cfg, RngStream(31337))
        population = cn_sample(ConfNatural(2.0, ORIGIN), RngStream(31337), 50)
        expected = karcher_mean(population, cfg=KarcherConfig(tol=1e-12))
        assert hyp_distance(trace[0].location, expected) < 1e-8
        assert trace[0].alpha == 2.0

    def test_end_to_end_distance_objective(self):
        target = DiscPoint(0.4, -0.2)
        cfg = CemConfig(population=200, elite_frac=0.2, iterations=40, alpha0=2.0, alpha_growth=1.15)
        best, trace = cem_optimize(lambda p: hyp_distance(p, target), cfg, RngStream(424242))
        assert hyp_distance(trace[-1].location, target) < 0.05
        assert hyp_distance(best, target) < 0.05
        assert len(trace) == 40

    def test_replay_is_identical(self):
        target = DiscPoint(0.1, 0.6)
        cfg = CemConfig(population=80, elite_frac=0.25, iterations=10)
        runs = [
            cem_optimize(lambda p: hyp_distance(p, target), cfg, RngStream(2718))
            for _ in range(2)
        ]
        assert runs[0][0] == runs[1][0]
        assert runs[0][1] == runs[1][1]

    def test_best_value_never_increases(self):
        target = DiscPoint(-0.3, 0.2)
        cfg = CemConfig(population=60, elite_frac=0.3, iterations=15)
        _, trace = cem_optimize(lambda p: hyp_distance(p, target), cfg, RngStream(15))
        best_values = [t.best_value for t in trace]
        assert np.all(np.diff(best_values) <= 0.0)

    def test_nan_objective_is_reported_with_point(self):
        def bad(p):
            return float("nan") if p.re > -2 else 0.0

        with pytest.raises(ObjectiveError) as excinfo:
            cem_optimize(bad, CemConfig(population=10, iterations=2), RngStream(3))
        assert isinstance(excinfo.value.point, DiscPoint)

    def test_conjugation_equivariance(self):
        target = DiscPoint(0.4, -0.2)
        cfg = CemConfig(population=60, elite_frac=0.2, iterations=12)
        for ga, gtheta, seed in [((0.25, -0.35), 0.8, 777), ((0.0, 0.0), 2.1, 778)]:
            g = MoebiusTransform(DiscPoint(*ga), gtheta)
            g_inv = mobius_inverse(g)
            _, plain = cem_optimize(lambda p: hyp_distance(p, target), cfg, RngStream(seed))
            _, conjugated = cem_optimize(
                lambda p: hyp_distance(mobius_apply(g_inv, p), target),
                cfg,
                RngStream(seed),
                init_transform=g,
            )
            for t1, t2 in zip(plain, conjugated):
                moved = mobius_apply_complex(g, t1.location.as_complex())
                assert abs(t2.location.as_complex() - moved) < 1e-9
