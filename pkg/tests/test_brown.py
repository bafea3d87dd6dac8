"""Tests for the analytic Brown measure: weights, nu, lambda branches, support, determinant and recovery."""

import itertools
import math

import numpy as np
import pytest
from scipy import integrate

from freebrown.brown import (
    BranchIndex,
    LambdaBranch,
    atom_census,
    boundary_density,
    branches,
    brown_measure,
    build_nu,
    component_masses,
    distance_to_support,
    hz_moments,
    hz_singular_values,
    in_support,
    lambda_at,
    laplacian_mass,
    log_fk_determinant,
    nearest_point,
    normal_spectral_measure,
    nu_density,
    nu_support,
    recover_laws,
    sample_brown,
    smoothed_mass,
    spectral_projection_traces,
    two_by_two_model,
    weights,
)
from freebrown.errors import DomainError, NormalOperatorError, RecoveryError
from freebrown.models import geometry, get_preset, make_params
from freebrown.transforms import g_nu_star

HALF_PI = math.pi / 2


def random_params(count: int, seed: int) -> list:
    """Two-atom laws with both corner atoms clearly charged."""
    rng = np.random.default_rng(seed)
    found = []
    while len(found) < count:
        a, b = rng.uniform(0.1, 0.9, 2)
        if abs(a - b) < 0.05 or abs(a + b - 1) < 0.05:
            continue
        p_low, q_low = rng.uniform(-2, 2, 2)
        p_gap, q_gap = rng.uniform(0.2, 3, 2)
        found.append(make_params(p_low, p_low + p_gap, a, q_low, q_low + q_gap, b))
    return found


class TestWeights:
    def test_zero_atoms(self):
        w = weights(0.5, 0.5)
        assert (w.w00, w.w01, w.w10, w.w11, w.w_cont) == (0.0, 0.0, 0.0, 0.0, 1.0)

    def test_single_atom(self):
        w = weights(0.8, 0.2)
        assert w.w01 == pytest.approx(0.6)
        assert w.w00 == w.w10 == w.w11 == 0.0
        assert w.w_cont == pytest.approx(0.4)

    def test_two_atoms(self):
        w = weights(0.9, 0.9)
        assert w.w00 == pytest.approx(0.8)
        assert w.w01 == w.w10 == w.w11 == 0.0
        assert w.w_cont == pytest.approx(0.2)

    @pytest.mark.parametrize("a,b", [(0.0, 0.5), (0.5, 1.0), (math.nan, 0.5)])
    def test_boundary_traces(self, a, b):
        with pytest.raises(NormalOperatorError):
            weights(a, b)

    @pytest.mark.parametrize("a,b", [(0.3, 0.2), (0.6, 0.9), (0.45, 0.45), (0.25, 0.75)])
    def test_reflection_permutes_corners(self, a, b):
        w = weights(a, b)
        r = weights(1 - a, b)
        assert r.w00 == pytest.approx(w.w10, abs=1e-15)
        assert r.w10 == pytest.approx(w.w00, abs=1e-15)
        assert r.w01 == pytest.approx(w.w11, abs=1e-15)
        assert r.w11 == pytest.approx(w.w01, abs=1e-15)
        assert r.w_cont == pytest.approx(w.w_cont, abs=1e-15)

    def test_atom_census_grid(self):
        grid = np.arange(1, 22) / 22
        for a, b in itertools.product(grid, repeat=2):
            ties = math.isclose(a, b, abs_tol=1e-14) + math.isclose(a + b, 1.0, abs_tol=1e-14)
            assert atom_census(weights(a, b)) == {2: 0, 1: 1, 0: 2}[ties], (a, b)

    def test_trace_grid(self):
        grid = np.arange(1, 100) / 100
        for a, b in itertools.product(grid, repeat=2):
            w = weights(a, b)
            assert math.fsum((w.w00, w.w01, w.w10, w.w11, w.w_cont)) == pytest.approx(1.0, abs=1e-15)
            assert w.w_cont > 0.0
            assert w.w00 * w.w11 == 0.0
            assert w.w01 * w.w10 == 0.0

            r = weights(1 - a, b)
            reflected = (r.w10, r.w11, r.w00, r.w01, r.w_cont)
            assert reflected == pytest.approx((w.w00, w.w01, w.w10, w.w11, w.w_cont), abs=1e-14)


class TestNuDensity:
    @pytest.mark.parametrize("theta", [0.0, 0.3, HALF_PI / 2, 1.2, HALF_PI])
    def test_uniform_when_both_half(self, theta):
        assert nu_density(0.5, 0.5, theta) == pytest.approx(2 / math.pi)

    @pytest.mark.parametrize("a,b", [(0.5, 0.5), (0.8, 0.2), (0.7, 0.7), (0.9, 0.4)])
    def test_probability(self, a, b):
        lo, hi = nu_support(a, b)
        total, _ = integrate.quad(lambda t: float(nu_density(a, b, t)), lo, hi, epsabs=1e-12, epsrel=1e-12, limit=200)
        assert total == pytest.approx(1.0, abs=1e-8)

    def test_vanishes_off_support(self):
        lo, hi = nu_support(0.9, 0.4)
        assert 0.0 < lo < hi < HALF_PI
        outside = np.concatenate([np.linspace(0.0, lo, 20, endpoint=False), np.linspace(hi, HALF_PI, 20)[1:]])
        assert np.all(nu_density(0.9, 0.4, outside) == 0.0)

    @pytest.mark.parametrize("a,b", [(0.8, 0.2), (0.9, 0.4), (0.3, 0.65), (0.7, 0.7)])
    def test_symmetries(self, a, b):
        theta = np.linspace(1e-3, HALF_PI - 1e-3, 1000)
        np.testing.assert_allclose(nu_density(a, b, theta), nu_density(b, a, theta), rtol=1e-9, atol=1e-10)
        np.testing.assert_allclose(
            nu_density(1 - a, b, theta), nu_density(a, b, HALF_PI - theta), rtol=1e-9, atol=1e-10
        )

    def test_boundary_behaviour_grid(self):
        grid = np.arange(1, 22) / 22
        for a, b in itertools.product(grid, repeat=2):
            meets_zero = math.isclose(a + b, 1.0, abs_tol=1e-14)
            meets_right_angle = math.isclose(a, b, abs_tol=1e-14)
            assert (float(nu_density(a, b, 1e-3)) > 0) == meets_zero, (a, b)
            assert (float(nu_density(a, b, HALF_PI - 1e-3)) > 0) == meets_right_angle, (a, b)
            assert (boundary_density(a, b, "zero") > 0) == meets_zero, (a, b)
            assert (boundary_density(a, b, "right_angle") > 0) == meets_right_angle, (a, b)

    def test_boundary_limits(self):
        assert boundary_density(0.8, 0.2, "zero") == pytest.approx(4 / math.pi)
        assert boundary_density(0.8, 0.2, "right_angle") == 0.0
        assert float(nu_density(0.8, 0.2, 1e-7)) == pytest.approx(4 / math.pi, rel=1e-6)
        with pytest.raises(DomainError):
            boundary_density(0.8, 0.2, "middle")

    def test_matches_stieltjes_boundary_values(self):
        """The law of t = cos^2(theta) has density nu(theta) / (2 sin cos) = -Im G(t + i0) / pi."""
        a, b, theta = 0.8, 0.2, 0.1
        t = math.cos(theta) ** 2
        eps = weights(a, b).w_cont
        from_g = -g_nu_star(a, b, eps, complex(t, 1e-12)).imag / math.pi
        expected = float(nu_density(a, b, theta)) / (2 * math.sin(theta) * math.cos(theta))
        assert from_g == pytest.approx(expected, rel=1e-6)

    def test_theta_out_of_range(self):
        with pytest.raises(DomainError):
            nu_density(0.5, 0.5, -0.1)


class TestNuTable:
    def test_uniform_cdf(self):
        nu = build_nu(0.5, 0.5)
        theta = np.linspace(0, HALF_PI, 101)
        np.testing.assert_allclose(nu.cdf(theta), theta / HALF_PI, atol=1e-8)
        assert nu.quantile(0.5) == pytest.approx(math.pi / 4, abs=1e-8)

    @pytest.mark.parametrize("a,b", [(0.8, 0.2), (0.9, 0.4), (0.3, 0.3)])
    def test_endpoints(self, a, b):
        nu = build_nu(a, b)
        assert nu.cdf(0.0) == pytest.approx(0.0, abs=1e-12)
        assert nu.cdf(HALF_PI) == pytest.approx(1.0, abs=1e-12)
        assert nu.normalization == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize("a,b", [(0.8, 0.2), (0.9, 0.4), (0.3, 0.3)])
    def test_round_trips(self, a, b):
        nu = build_nu(a, b)
        u = np.random.default_rng(3).random(1000)
        np.testing.assert_allclose(nu.cdf(nu.quantile(u)), u, atol=1e-6)

        lo, hi = nu.support
        theta = np.linspace(lo + 0.01 * (hi - lo), hi - 0.01 * (hi - lo), 200)
        np.testing.assert_allclose(nu.quantile(nu.cdf(theta)), theta, atol=1e-6)

    def test_cdf_is_monotone(self):
        nu = build_nu(0.9, 0.4)
        assert np.all(np.diff(nu.grid["cdf"].to_numpy()) >= 0.0)

    def test_moments(self):
        nu = build_nu(0.5, 0.5)
        assert nu.moment(0) == pytest.approx(1.0, abs=1e-9)
        assert nu.moment(1) == pytest.approx(0.5, abs=1e-9)

    def test_out_of_range(self):
        nu = build_nu(0.5, 0.5)
        with pytest.raises(DomainError):
            nu.quantile(1.5)
        with pytest.raises(DomainError):
            nu.cdf(2.0)

    def test_small_grid_rejected(self):
        with pytest.raises(DomainError):
            build_nu(0.5, 0.5, grid_points=2)

    def test_support(self):
        assert nu_support(0.5, 0.5) == pytest.approx((0.0, HALF_PI))
        assert nu_support(0.8, 0.2) == pytest.approx((0.0, math.acos(0.6)))


class TestMeasure:
    def test_figure_one_has_no_atoms(self, fig1_desc):
        assert fig1_desc.charged_atoms() == []
        assert fig1_desc.eps == 1.0

    def test_figure_two_single_atom(self, fig2a_desc):
        atoms = fig2a_desc.charged_atoms()
        assert len(atoms) == 1
        assert atoms[0].position == 1j
        assert atoms[0].mass == pytest.approx(0.6)

    def test_total_mass(self, fig1_desc, fig2a_desc, fig3a_desc):
        for desc in (fig1_desc, fig2a_desc, fig3a_desc):
            assert desc.total_mass() == pytest.approx(1.0, abs=1e-15)

    def test_degenerate(self):
        with pytest.raises(NormalOperatorError, match="normal case"):
            brown_measure(make_params(0, 1, 0.5, 0, 1, 1.0))

    def test_component_masses(self, fig1_desc, fig2a_desc, fig3a_desc):
        assert component_masses(fig1_desc) == pytest.approx((0.5, 0.5))
        assert component_masses(fig2a_desc) == pytest.approx((0.2, 0.8))
        assert component_masses(fig3a_desc) == pytest.approx((0.5, 0.5))

    def test_figure_three_atom(self, fig3a_desc):
        by_position = {atom.position: atom.mass for atom in fig3a_desc.atoms}
        assert by_position[0j] == pytest.approx(0.4)

    @pytest.mark.parametrize("preset", ["fig1", "fig2a", "fig2b", "fig3a"])
    def test_trace_relations(self, preset):
        params = get_preset(preset)
        traces = spectral_projection_traces(brown_measure(params))
        assert traces["p_low"] == pytest.approx(params.a)
        assert traces["p_high"] == pytest.approx(1 - params.a)
        assert traces["q_low"] == pytest.approx(params.b)
        assert traces["q_high"] == pytest.approx(1 - params.b)

    def test_normal_spectral_measure(self):
        atoms = normal_spectral_measure(make_params(0, 1, 0.3, 0.5, 0.5, 1.0))
        assert {atom.position: atom.mass for atom in atoms} == {0.5j: pytest.approx(0.3), 1 + 0.5j: pytest.approx(0.7)}


class TestSampling:
    def test_samples_on_curve(self, square_params):
        desc = brown_measure(square_params)
        samples = sample_brown(desc, 100_000, seed=1)
        assert np.max(np.abs(desc.geometry.hyperbola_residual(samples))) < 1e-9

    def test_atom_fraction(self, fig2a_desc):
        samples = sample_brown(fig2a_desc, 100_000, seed=2)
        assert np.mean(samples == 1j) == pytest.approx(0.6, abs=0.005)

    def test_deterministic(self, fig2a_desc):
        assert np.array_equal(sample_brown(fig2a_desc, 500, seed=9), sample_brown(fig2a_desc, 500, seed=9))

    def test_continuous_part_avoids_corners(self, fig1_desc):
        samples = sample_brown(fig1_desc, 20_000, seed=4)
        assert not np.isin(samples, np.array(fig1_desc.geometry.corners())).any()

    def test_invalid_size(self, fig1_desc):
        with pytest.raises(ValueError):
            sample_brown(fig1_desc, 0, seed=1)


class TestLambdas:
    def test_figure_one_midpoint(self, fig1_desc):
        _, two = branches(fig1_desc.geometry)
        assert lambda_at(two, math.pi / 4) == pytest.approx(0.8 + 0.4j)

    @pytest.mark.parametrize("preset", ["fig1", "fig2a", "fig3a"])
    def test_corners(self, preset):
        g = geometry(get_preset(preset))
        one, two = branches(g)
        ends = [lambda_at(one, 0.0), lambda_at(two, 0.0), lambda_at(one, HALF_PI), lambda_at(two, HALF_PI)]
        assert ends[0] == pytest.approx(complex(g.alpha, g.beta))
        assert ends[1] == pytest.approx(complex(g.alpha_prime, g.beta_prime))
        corners = g.corners()
        for corner in corners:
            assert min(abs(corner - end) for end in ends) < 1e-12
        assert np.max(np.abs(g.hyperbola_residual(np.array(ends)))) < 1e-12

    def test_right_angle_placement(self, fig1_desc, fig2a_desc):
        wide = branches(fig1_desc.geometry)
        assert lambda_at(wide[0], HALF_PI) == pytest.approx(0.8j)
        assert lambda_at(wide[1], HALF_PI) == pytest.approx(1.0)
        tall = branches(fig2a_desc.geometry)
        assert lambda_at(tall[0], HALF_PI) == pytest.approx(0.9)
        assert lambda_at(tall[1], HALF_PI) == pytest.approx(1j)

    def test_theta_range(self, fig1_desc):
        with pytest.raises(DomainError):
            lambda_at(LambdaBranch(BranchIndex.ONE, fig1_desc.geometry), 2.0)

    def test_two_by_two_projection(self):
        p_mat, _ = two_by_two_model(make_params(0, 1, 0.5, 0, 1, 0.5), math.pi / 4)
        np.testing.assert_allclose(p_mat, [[0.5, 0.5], [0.5, 0.5]], atol=1e-15)

    def test_two_by_two_spectra(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            p_low, q_low = rng.uniform(-1, 1, 2)
            p_gap, q_gap = rng.uniform(0.1, 2, 2)
            params = make_params(p_low, p_low + p_gap, 0.5, q_low, q_low + q_gap, 0.5)
            one, two = branches(geometry(params))
            for theta in rng.uniform(0.01, HALF_PI - 0.01, 10):
                p_mat, q_mat = two_by_two_model(params, theta)
                np.testing.assert_allclose(np.linalg.eigvalsh(p_mat), [p_low, p_low + p_gap], atol=1e-12)
                eigenvalues = np.linalg.eigvals(p_mat + 1j * q_mat)
                for value in (lambda_at(one, theta), lambda_at(two, theta)):
                    assert np.min(np.abs(eigenvalues - value)) < 1e-10

    def test_singular_values(self, fig2a_params):
        one, two = branches(geometry(fig2a_params))
        theta, z = 0.7, 0.3 + 0.8j
        s1, s2 = hz_singular_values(fig2a_params, z, theta)
        assert s1 >= s2 >= 0.0
        product = abs(z - lambda_at(one, theta)) ** 2 * abs(z - lambda_at(two, theta)) ** 2
        assert (s1 * s2) ** 2 == pytest.approx(product, abs=1e-10)
        assert hz_singular_values(fig2a_params, complex(lambda_at(one, theta)), theta)[1] == pytest.approx(0.0, abs=1e-12)


class TestSupport:
    def test_corner(self, fig1_desc):
        corner = fig1_desc.geometry.corners()[3]
        assert in_support(fig1_desc, corner, 0.0)

    def test_center_is_outside(self, fig1_desc):
        assert not in_support(fig1_desc, 0.5 + 0.4j, 0.05)
        assert distance_to_support(fig1_desc, 0.5 + 0.4j) == pytest.approx(0.3, abs=1e-9)

    def test_curve_points(self, fig2a_desc):
        rng = np.random.default_rng(8)
        for branch in branches(fig2a_desc.geometry):
            for theta in rng.uniform(0, HALF_PI, 20):
                assert in_support(fig2a_desc, complex(lambda_at(branch, theta)), 1e-9)

    def test_nearest_point_recovers_branch(self, fig1_desc):
        one, two = branches(fig1_desc.geometry)
        branch, theta, distance = nearest_point(fig1_desc.geometry, complex(lambda_at(two, 0.6)))
        assert branch is BranchIndex.TWO
        assert theta == pytest.approx(0.6, abs=1e-7)
        assert distance < 1e-12

    def test_negative_tolerance(self, fig1_desc):
        with pytest.raises(ValueError):
            in_support(fig1_desc, 0j, -1.0)


class TestDeterminant:
    def test_far_field(self, fig2a_desc):
        z = 1e6 * complex(math.cos(0.3), math.sin(0.3))
        assert log_fk_determinant(fig2a_desc, z) == pytest.approx(math.log(abs(z)), abs=1e-4)

    def test_atom(self, fig2a_desc):
        assert log_fk_determinant(fig2a_desc, 1j) == -math.inf

    @pytest.mark.parametrize("center,radius", [(2 + 2j, 0.1), (0.5 + 0.4j, 0.05)])
    def test_harmonic_off_support(self, fig1_desc, center, radius):
        angles = 2 * math.pi * np.arange(16) / 16
        ring = [log_fk_determinant(fig1_desc, center + radius * complex(math.cos(t), math.sin(t))) for t in angles]
        assert np.mean(ring) == pytest.approx(log_fk_determinant(fig1_desc, center), abs=1e-7)

    def test_hz_moment_zero_is_mass(self, fig3a_desc):
        assert hz_moments(fig3a_desc, 0.2 + 0.1j, 0) == pytest.approx(1.0, abs=1e-8)

    @pytest.mark.parametrize("z", [0.3 + 0.2j, -1 + 2j])
    def test_hz_first_moment(self, fig2a_desc, z):
        params = fig2a_desc.params
        mean = complex(params.law_p.mean, params.law_q.mean)
        variance = (
            params.a * (1 - params.a) * params.law_p.gap**2 + params.b * (1 - params.b) * params.law_q.gap**2
        )
        assert hz_moments(fig2a_desc, z, 1) == pytest.approx(abs(z - mean) ** 2 + variance, abs=1e-7)

    def test_smoothed_mass_of_whole_plane(self, fig2a_desc):
        # A bump of radius 10 is within 0.5% of its peak e^-1 on the whole rectangle.
        assert smoothed_mass(fig2a_desc, 0.45 + 0.5j, 10.0) == pytest.approx(math.exp(-1), abs=0.005)

    def test_laplacian_rejects_atoms(self, fig2a_desc):
        with pytest.raises(DomainError):
            laplacian_mass(fig2a_desc, 1j, 0.1, steps=4)

    @pytest.mark.slow
    def test_mean_value_property_at_random_points(self, fig1_desc):
        rng = np.random.default_rng(19)
        ring = np.exp(2j * np.pi * np.arange(16) / 16)
        checked = 0
        while checked < 100:
            z = complex(rng.uniform(-0.5, 1.5), rng.uniform(-0.5, 1.3))
            distance = distance_to_support(fig1_desc, z)
            if distance < 0.05:
                continue
            radius = min(distance / 5, 0.1)
            values = [log_fk_determinant(fig1_desc, z + radius * w) for w in ring]
            assert np.mean(values) == pytest.approx(log_fk_determinant(fig1_desc, z), abs=1e-7), z
            checked += 1

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "index,theta",
        [
            (BranchIndex.ONE, 0.35),
            (BranchIndex.TWO, 0.6),
            (BranchIndex.TWO, math.pi / 4),
            (BranchIndex.ONE, 1.0),
            (BranchIndex.TWO, 1.25),
        ],
    )
    def test_laplacian_matches_measure(self, fig1_desc, index, theta):
        center = complex(lambda_at(LambdaBranch(index, fig1_desc.geometry), theta))
        expected = smoothed_mass(fig1_desc, center, 0.15)
        assert expected > 0.005
        assert laplacian_mass(fig1_desc, center, 0.15, steps=64) == pytest.approx(expected, abs=1e-3)


class TestRecovery:
    def test_figure_one(self, fig1_desc):
        recovered = recover_laws(sample_brown(fig1_desc, 100_000, seed=21))
        assert recovered.a == pytest.approx(0.5, abs=0.01)
        assert recovered.b == pytest.approx(0.5, abs=0.01)
        expected = fig1_desc.params
        for found, true in zip(
            (recovered.alpha, recovered.alpha_prime, recovered.beta, recovered.beta_prime),
            (expected.alpha, expected.alpha_prime, expected.beta, expected.beta_prime),
        ):
            assert found == pytest.approx(true, abs=1e-6)

    def test_figure_two(self, fig2a_desc):
        recovered = recover_laws(sample_brown(fig2a_desc, 100_000, seed=22))
        assert recovered.a == pytest.approx(0.8, abs=0.01)
        assert recovered.b == pytest.approx(0.2, abs=0.01)
        assert recovered.alpha_prime == pytest.approx(0.9, abs=1e-6)
        assert recovered.beta_prime == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.slow
    @pytest.mark.parametrize("params", random_params(10, seed=25))
    def test_random_laws(self, params):
        recovered = recover_laws(sample_brown(brown_measure(params), 100_000, seed=26))
        assert (recovered.a, recovered.b) == pytest.approx((params.a, params.b), abs=0.01)
        positions = (recovered.alpha, recovered.alpha_prime, recovered.beta, recovered.beta_prime)
        assert positions == pytest.approx((params.alpha, params.alpha_prime, params.beta, params.beta_prime), abs=1e-3)

    def test_atomic_input(self):
        params = make_params(0, 1, 0.3, 0.5, 0.5, 1.0)
        atoms = normal_spectral_measure(params)
        rng = np.random.default_rng(23)
        picks = rng.choice(len(atoms), size=10_000, p=[atom.mass for atom in atoms])
        samples = np.array([atom.position for atom in atoms])[picks]
        recovered = recover_laws(samples)
        assert recovered.is_degenerate
        assert recovered.law_q.atoms() == [(0.5, 1.0)]
        assert recovered.alpha == 0.0
        assert recovered.alpha_prime == 1.0
        assert recovered.a == pytest.approx(0.3, abs=0.02)

    def test_rejects_unstructured_cloud(self):
        rng = np.random.default_rng(24)
        cloud = rng.normal(size=500) + 1j * rng.normal(size=500)
        with pytest.raises(RecoveryError):
            recover_laws(cloud)

    def test_empty(self):
        with pytest.raises(RecoveryError):
            recover_laws([])
