import math

import numpy as np
import pytest

from slitflow.configs import RadialConfig
from slitflow.errors import DomainError
from slitflow.numerics import branch_log_disc
from slitflow.radial import (
    compute_spiral_data,
    convergence_experiment,
    phi_boundary_image,
    phi_derivative,
    phi_eval,
    radial_flow,
    radial_trace,
    semigroup_residual,
    spirallike_functional,
    trace_diagnostics,
)

SYM = RadialConfig(theta=(0.0, math.pi), b=(0.5, 0.5), a=0.0)
SPIROID = RadialConfig(theta=(0.0,), b=(1.0,), a=1.0)
STAR1 = RadialConfig(theta=(0.0,), b=(1.0,), a=0.0)


def _disc_points(rng, count, radius=0.9):
    return radius * np.sqrt(rng.uniform(0, 1, count)) * np.exp(
        1j * rng.uniform(0, 2 * math.pi, count)
    )


class TestSpiralData:
    def test_single_rotating_atom(self):
        d = compute_spiral_data(SPIROID)
        assert d.rho[0] == pytest.approx(math.pi / 2, abs=1e-12)
        assert d.alpha[0] == pytest.approx(-math.cos(math.pi / 4), abs=1e-12)
        assert d.half_arg == pytest.approx(math.pi / 4)

    def test_single_static_atom(self):
        d = compute_spiral_data(STAR1)
        assert d.rho[0] == pytest.approx(math.pi, abs=1e-12)
        assert d.alpha[0] == pytest.approx(-1.0, abs=1e-12)

    def test_symmetric_pair(self):
        d = compute_spiral_data(SYM)
        assert np.allclose(d.rho, [math.pi / 2, 3 * math.pi / 2], atol=1e-12)
        assert np.allclose(d.alpha, [-0.5, -0.5], atol=1e-12)

    def test_sum_rule_and_interlacing_random(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            n = int(rng.integers(1, 6))
            theta = np.sort(rng.uniform(0, 2 * math.pi, n))
            while n > 1 and np.min(np.diff(theta)) < 5e-2:
                theta = np.sort(rng.uniform(0, 2 * math.pi, n))
            cfg = RadialConfig(
                theta=tuple(theta), b=tuple(rng.uniform(0.1, 2.0, n)),
                a=float(rng.normal(0, 2)),
            )
            d = compute_spiral_data(cfg)
            assert abs(d.alpha.sum() + math.cos(d.half_arg)) < 1e-10
            assert np.all(d.alpha < 0)


class TestPhi:
    def test_origin_fixed(self):
        d = compute_spiral_data(SYM)
        assert phi_eval(d, 0j) == 0

    def test_symmetric_closed_form(self):
        d = compute_spiral_data(SYM)
        for z in (0.3 + 0j, 0.5j, -0.2 + 0.4j):
            assert phi_eval(d, z) == pytest.approx(z / (1 + z * z), abs=1e-12)

    def test_single_rotating_closed_form(self):
        # phi(z) = z (z - i)^{i - 1} under the disc branch
        d = compute_spiral_data(SPIROID)
        z = 0.5 + 0j
        expect = z * np.exp((1j - 1) * branch_log_disc(z, 1j))
        assert phi_eval(d, z) == pytest.approx(expect, abs=1e-12)

    def test_domain_error_outside_disc(self):
        d = compute_spiral_data(SYM)
        with pytest.raises(DomainError):
            phi_eval(d, 1.5 + 0j)

    def test_derivative_fixtures(self):
        d = compute_spiral_data(SYM)
        assert phi_derivative(d, 0j) == pytest.approx(1.0, abs=1e-12)
        assert phi_derivative(d, 0.5 + 0j) == pytest.approx(0.48, abs=1e-12)

    def test_derivative_matches_finite_differences(self):
        d = compute_spiral_data(SPIROID)
        rng = np.random.default_rng(2)
        for z in _disc_points(rng, 20, radius=0.8):
            step = 1e-5
            fd = (phi_eval(d, z + step) - phi_eval(d, z - step)) / (2 * step)
            assert abs(phi_derivative(d, z) - fd) < 1e-6

    def test_spirallike_positivity(self):
        rng = np.random.default_rng(8)
        for cfg in (SYM, SPIROID, STAR1):
            d = compute_spiral_data(cfg)
            z = _disc_points(rng, 10000, radius=0.999)
            z = z[np.abs(z) > 1e-6]
            assert np.min(spirallike_functional(d, z)) > 0


class TestFlow:
    def test_identity_at_time_zero_and_origin(self):
        d = compute_spiral_data(SYM)
        assert radial_flow(d, SYM, 0.3 + 0.2j, 0.0) == 0.3 + 0.2j
        assert radial_flow(d, SYM, 0j, 1.7) == 0

    def test_functional_equation(self):
        d = compute_spiral_data(SPIROID)
        for t in (0.1, 0.5, 1.0):
            w = radial_flow(d, SPIROID, 0.4 - 0.3j, t)
            target = np.exp(-(1 - 1j) * t) * phi_eval(d, np.exp(-1j * t) * (0.4 - 0.3j))
            assert abs(phi_eval(d, w) - target) < 1e-10

    def test_semigroup_random(self):
        rng = np.random.default_rng(4)
        d = compute_spiral_data(SPIROID)
        for _ in range(5):
            z = complex(_disc_points(rng, 1, radius=0.7)[0])
            s, t = rng.uniform(0, 1, 2)
            assert semigroup_residual(d, SPIROID, z, s, t) < 1e-6

    def test_conjugation_symmetry(self):
        # flows for +-a agree under conjugation
        cfg_p = RadialConfig(theta=(0.5, 2.5), b=(0.7, 1.1), a=1.3)
        cfg_m = RadialConfig(
            theta=tuple(np.sort(2 * math.pi - np.array([2.5, 0.5]))),
            b=(1.1, 0.7), a=-1.3,
        )
        dp, dm = compute_spiral_data(cfg_p), compute_spiral_data(cfg_m)
        for z in (0.3 + 0.2j, -0.4 + 0.1j):
            lhs = radial_flow(dm, cfg_m, z, 0.6)
            rhs = np.conj(radial_flow(dp, cfg_p, np.conj(z), 0.6))
            assert abs(lhs - rhs) < 1e-8

    def test_large_time_collapses_to_origin(self):
        d = compute_spiral_data(STAR1)
        assert radial_flow(d, STAR1, 0.5 + 0j, 1e3) == 0.0


class TestTrace:
    def test_starts_at_anchor(self):
        d = compute_spiral_data(SYM)
        tr = radial_trace(d, SYM, 0, np.linspace(0, 1, 20))
        assert tr[0].t == 0 and tr[0].point == 1.0 and tr[0].residual == 0

    def test_symmetric_closed_form_segment(self):
        # x/(1 + x^2) = e^{-t}/2 along the positive radius
        d = compute_spiral_data(SYM)
        tr = radial_trace(d, SYM, 0, np.linspace(0, 2, 50))
        for s in tr[1:]:
            e = math.exp(-s.t) / 2
            x = (1 - math.sqrt(1 - 4 * e * e)) / (2 * e)
            assert abs(s.point - x) < 1e-8
            assert s.residual < 1e-8

    def test_modulus_decreases_for_spiroid(self):
        d = compute_spiral_data(SPIROID)
        tr = radial_trace(d, SPIROID, 0, np.linspace(0, 5, 80))
        mods = [abs(s.point) for s in tr]
        assert all(x > y for x, y in zip(mods, mods[1:]))


class TestDiagnostics:
    def _spiroid_trace(self, t_end, count):
        d = compute_spiral_data(SPIROID)
        grid = np.concatenate(
            [[0.0], np.geomspace(1e-6, 0.1, 30), np.linspace(0.12, t_end, count)]
        )
        tr = radial_trace(d, SPIROID, 0, grid)
        refine = lambda t: radial_trace(d, SPIROID, 0, [t])[-1].point
        return trace_diagnostics(tr, 1.0, refine=refine)

    def test_start_angle_perpendicular(self):
        diag = self._spiroid_trace(2.0, 60)
        assert abs(diag.start_angle - math.pi / 2) < 0.05

    def test_starlike_trace_has_no_winding(self):
        d = compute_spiral_data(SYM)
        grid = np.concatenate([[0.0], np.geomspace(1e-6, 2.0, 60)])
        tr = radial_trace(d, SYM, 0, grid)
        diag = trace_diagnostics(tr, 1.0)
        assert abs(diag.total_winding) < 1e-6
        assert diag.modulus_monotone

    def test_spiroid_winds_more_than_two_turns(self):
        diag = self._spiroid_trace(20.0, 300)
        assert diag.total_winding > 2.0

    def test_crossing_gaps_stabilize(self):
        # real-diameter crossings settle toward a fixed time spacing
        diag = self._spiroid_trace(20.0, 300)
        gaps = np.diff(diag.crossing_times)
        assert len(gaps) >= 3
        assert np.all(np.diff(gaps) < 0.1)


class TestBoundary:
    def test_profile_concave_between_critical_angles(self):
        d = compute_spiral_data(SPIROID)
        rho = d.rho[0]
        th = np.linspace(rho + 0.05, rho + 2 * math.pi - 0.05, 400)
        vals, profile = phi_boundary_image(d, th)
        second = np.diff(profile, 2)
        assert np.all(second < 0)

    def test_blow_up_near_critical_angle(self):
        d = compute_spiral_data(SYM)
        near = abs(_phi_bd(d, math.pi / 2 + 1e-5))
        far = abs(_phi_bd(d, math.pi / 4))
        assert near > 100 * far

    def test_rejects_points_at_critical_angles(self):
        d = compute_spiral_data(SYM)
        with pytest.raises(DomainError):
            phi_boundary_image(d, np.array([math.pi / 2 + 1e-9]))

    def test_arcs_lie_on_logarithmic_spirals(self):
        d = compute_spiral_data(SPIROID)
        rho = d.rho[0]
        th = np.linspace(rho + 0.3, rho + 2 * math.pi - 0.3, 200)
        vals, profile = phi_boundary_image(d, th)
        # log|phi| against unwrapped arg must fit a line of slope tan(half_arg)
        logs = np.log(np.abs(vals))
        args = np.unwrap(np.angle(vals))
        coef = np.polyfit(args, logs, 1)
        resid = np.max(np.abs(np.polyval(coef, args) - logs))
        assert resid < 1e-6
        assert coef[0] == pytest.approx(-math.tan(d.half_arg), abs=1e-8)


def _phi_bd(data, theta):
    return phi_boundary_image(data, np.array([theta]))[0][0]


class TestConvergence:
    def test_deviation_decreases_in_rotation_rate(self):
        rng = np.random.default_rng(12)
        zs = 0.8 * np.sqrt(rng.uniform(0, 1, 10)) * np.exp(
            1j * rng.uniform(0, 2 * math.pi, 10)
        )
        devs = convergence_experiment([10.0, 100.0, 1000.0], zs, t=1.0)
        assert devs[0] > devs[1] > devs[2]

    def test_slow_rotation_is_a_genuine_slit_map(self):
        devs = convergence_experiment([1.0], [0.5 + 0j], t=1.0)
        assert devs[0] > 1e-3
