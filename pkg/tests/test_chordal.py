import math

import numpy as np
import pytest

from slitflow.chordal import (
    DistinctRealCase,
    DoubleCase,
    SpiralCase,
    TripleCase,
    attraction_point,
    build_case,
    chordal_flow,
    chordal_trace,
    chordal_w_explicit,
    h_boundary_image,
    h_derivative,
    h_eval,
    intersection_angles,
    spiral_functional,
)
from slitflow.configs import ChordalConfig
from slitflow.errors import DomainError
from slitflow.polyroots import build_chordal_P, classify_roots


def make_case(k, b):
    cfg = ChordalConfig(k=k, b=b)
    return cfg, build_case(cfg, classify_roots(build_chordal_P(cfg), cfg))


SYM_SPIRAL = make_case((-2, 2), (1, 1))
K5 = make_case((5,), (1,))
K4 = make_case((4,), (1,))
SYM_TRIPLE = make_case((-2, 2), (0.5, 0.5))
ALL_CASES = (SYM_SPIRAL, K5, K4, SYM_TRIPLE)


def _random_chordal_configs(rng, count, n_max=5):
    out = []
    while len(out) < count:
        n = int(rng.integers(1, n_max + 1))
        k = np.sort(rng.normal(0, 3, n))
        if n > 1 and np.min(np.diff(k)) < 5e-2:
            continue
        out.append(ChordalConfig(k=tuple(k), b=tuple(rng.uniform(0.05, 2.0, n))))
    return out


class TestBuildCase:
    def test_symmetric_spiral_fixture(self):
        case = SYM_SPIRAL[1]
        assert isinstance(case, SpiralCase)
        assert abs(case.beta - 2j) < 1e-12
        assert abs(case.B - 1) < 1e-12
        assert abs(case.psi) < 1e-12
        assert case.A[0] == pytest.approx(-1.0, abs=1e-12)
        assert case.a[0] == pytest.approx(1.0, abs=1e-12)

    def test_distinct_real_fixture(self):
        case = K5[1]
        assert isinstance(case, DistinctRealCase)
        assert case.rho1 == pytest.approx(1.0, abs=1e-10)
        assert case.rho2 == pytest.approx(4.0, abs=1e-10)
        assert case.B1 == pytest.approx(4 / 3, abs=1e-10)
        assert case.B2 == pytest.approx(-1 / 3, abs=1e-10)
        assert case.exponent_b == pytest.approx(0.25, abs=1e-10)

    def test_double_fixture(self):
        case = K4[1]
        assert isinstance(case, DoubleCase)
        assert case.rho0 == pytest.approx(2.0)
        assert case.B1 == pytest.approx(2.0, abs=1e-9)
        assert case.B2 == pytest.approx(-1.0, abs=1e-9)

    def test_triple_fixture(self):
        case = SYM_TRIPLE[1]
        assert isinstance(case, TripleCase)
        assert case.rho0 == pytest.approx(0.0, abs=1e-7)
        assert case.c1 == pytest.approx(1.0, abs=1e-9)
        assert case.c3 == pytest.approx(-4.0, abs=1e-7)

    def test_coefficient_identities_random(self):
        rng = np.random.default_rng(23)
        for cfg in _random_chordal_configs(rng, 200):
            case = build_case(cfg, classify_roots(build_chordal_P(cfg), cfg))
            if isinstance(case, SpiralCase):
                assert abs(2 * math.cos(case.psi) - sum(case.a) - 1 / abs(case.B)) < 1e-9
            elif isinstance(case, DistinctRealCase):
                assert abs(case.B1 + case.B2 + sum(case.A) - 1) < 1e-9
                assert case.B1 >= 1.0 - 1e-9
            else:
                assert abs(case.c1 + sum(case.A) - 1) < 1e-9


class TestH:
    def test_symmetric_spiral_values(self):
        case = SYM_SPIRAL[1]
        assert h_eval(case, 1j) == pytest.approx(-3j, abs=1e-12)
        assert abs(h_eval(case, 2j)) < 1e-12
        z = 0.3 + 1.7j
        assert h_eval(case, z) == pytest.approx(z + 4 / z, abs=1e-12)

    def test_triple_closed_form(self):
        case = SYM_TRIPLE[1]
        z = 0.4 + 0.9j
        assert h_eval(case, z) == pytest.approx(np.log(z) + 2 / z**2, abs=1e-7)

    def test_distinct_real_zero_and_pole(self):
        case = K5[1]
        # vertical limits: zero at rho2 = 4, pole at rho1 = 1
        assert abs(h_eval(case, 4 + 1e-8j)) < 1e-2
        assert abs(h_eval(case, 1 + 1e-8j)) > 1e7

    def test_rejects_lower_half_plane(self):
        with pytest.raises(DomainError):
            h_eval(SYM_SPIRAL[1], 1 - 1j)

    def test_derivative_fixture(self):
        case = SYM_SPIRAL[1]
        assert h_derivative(case, 1j) == pytest.approx(5.0, abs=1e-12)

    def test_derivative_vanishes_at_driving_points(self):
        for cfg, case in ALL_CASES:
            scale = 1.0 + max(abs(x) for x in cfg.k)
            for kk in cfg.k:
                assert abs(h_derivative(case, kk + 1e-8j)) < 1e-6 * scale

    def test_derivative_matches_finite_differences(self):
        rng = np.random.default_rng(31)
        for cfg, case in ALL_CASES:
            z = rng.uniform(-3, 3, 25) + 1j * rng.uniform(0.5, 3, 25)
            step = 1e-6
            fd = (h_eval(case, z + step) - h_eval(case, z - step)) / (2 * step)
            assert np.max(np.abs(h_derivative(case, z) - fd)) < 1e-6

    def test_spiral_functional_positive(self):
        rng = np.random.default_rng(41)
        case = SYM_SPIRAL[1]
        z = rng.uniform(-8, 8, 10000) + 1j * rng.uniform(1e-3, 8, 10000)
        assert np.min(spiral_functional(case, z)) > 0


class TestFlow:
    def test_identity_at_time_zero(self):
        assert chordal_flow(SYM_SPIRAL[1], 1 + 1j, 0.0) == 1 + 1j

    def test_spiral_center_is_stationary(self):
        case = SYM_SPIRAL[1]
        for t in (0.2, 0.5, 0.9):
            z = 2j * math.sqrt(1 - t)
            assert abs(chordal_flow(case, z, t) - 2j) < 1e-10

    def test_explicit_w_composes_to_identity(self):
        rng = np.random.default_rng(6)
        for cfg, case in ALL_CASES:
            for _ in range(3):
                z = complex(rng.uniform(-2, 2), rng.uniform(0.5, 2))
                t = float(rng.uniform(0.1, 0.9))
                w = chordal_w_explicit(case, z, t)
                assert abs(chordal_flow(case, w, t) - z) < 1e-9

    def test_image_stays_in_upper_half_plane(self):
        for cfg, case in ALL_CASES:
            assert chordal_flow(case, 0.1 + 0.4j, 0.8).imag > 0

    def test_scale_covariance(self):
        # k -> ck, b -> c^2 b rescales the flow by c
        c = 1.7
        cfg1, case1 = make_case((5,), (1,))
        cfg2, case2 = make_case((5 * c,), (c * c,))
        z, t = 0.8 + 1.1j, 0.55
        assert abs(chordal_flow(case2, c * z, t) - c * chordal_flow(case1, z, t)) < 1e-9


class TestTrace:
    GRID = np.concatenate([np.linspace(0, 0.85, 30), 1 - np.geomspace(0.1, 1e-5, 30)])

    def test_starts_at_driving_point(self):
        tr = chordal_trace(SYM_SPIRAL[1], 0, np.linspace(0, 0.9, 20))
        assert tr[0].point == -2.0 and tr[0].residual == 0

    def test_symmetric_spiral_closed_form(self):
        # gamma_2 moves along the circle |z| = 2
        tr = chordal_trace(SYM_SPIRAL[1], 1, np.linspace(0, 0.99, 50))
        for s in tr:
            expect = 2 * math.sqrt(1 - s.t) + 2j * math.sqrt(s.t)
            assert abs(s.point - expect) < 1e-8

    def test_distinct_real_attracts_to_rho1(self):
        case = K5[1]
        tr = chordal_trace(case, 0, self.GRID, cap=1 - 1e-6)
        assert abs(tr[-1].point - 1.0) < 0.1
        res = [abs(s.point - 1.0) for s in tr[1:]]
        assert res[-1] == min(res)

    def test_traces_stay_above_axis_and_disjoint(self):
        for cfg, case in ALL_CASES:
            traces = [
                chordal_trace(case, j, self.GRID, cap=1 - 1e-6)
                for j in range(cfg.n)
            ]
            for tr in traces:
                assert all(s.point.imag > 0 for s in tr if s.t > 0)
            for a in range(len(traces)):
                for b in range(a + 1, len(traces)):
                    pa = np.array([s.point for s in traces[a]])
                    pb = np.array([s.point for s in traces[b]])
                    assert np.min(np.abs(pa[:, None] - pb[None, :])) > 0

    def test_residuals_below_tolerance(self):
        for cfg, case in ALL_CASES:
            tr = chordal_trace(case, 0, self.GRID, cap=1 - 1e-6, tol=1e-10)
            assert max(s.residual for s in tr) < 1e-8


class TestAttraction:
    def test_fixture_values(self):
        assert attraction_point(SYM_SPIRAL[1]) == 2j
        assert attraction_point(K5[1]) == pytest.approx(1.0, abs=1e-10)
        assert attraction_point(SYM_TRIPLE[1]) == pytest.approx(0.0, abs=1e-7)


class TestAngles:
    GRID = np.concatenate(
        [[0.0], np.geomspace(1e-6, 0.5, 25), 1 - np.geomspace(0.4, 1e-6, 25)]
    )

    def _report(self, pair, j):
        cfg, case = pair
        tr = chordal_trace(case, j, self.GRID, cap=1 - 1e-6)
        return intersection_angles(case, j, tr)

    def test_all_slits_start_perpendicular(self):
        for pair in ALL_CASES:
            for j in range(pair[0].n):
                rep = self._report(pair, j)
                assert abs(rep.start_angle - math.pi / 2) < 0.05

    def test_double_ends_tangentially(self):
        rep = self._report(K4, 0)
        assert min(abs(rep.end_angle), abs(rep.end_angle - math.pi)) < 0.05
        assert rep.expected_end_angle == pytest.approx(math.pi)

    def test_triple_ends_orthogonally(self):
        for j in (0, 1):
            rep = self._report(SYM_TRIPLE, j)
            assert abs(rep.end_angle - math.pi / 2) < 0.05

    def test_distinct_real_matches_polygon_angle(self):
        rep = self._report(K5, 0)
        assert rep.expected_end_angle == pytest.approx(math.pi / 4, abs=1e-9)
        assert abs(rep.end_angle - rep.expected_end_angle) < 0.05

    def test_spiral_reports_winding(self):
        rep = self._report(SYM_SPIRAL, 0)
        assert math.isnan(rep.end_angle)
        assert not math.isnan(rep.winding)


class TestBoundary:
    def test_symmetric_spiral_range(self):
        case = SYM_SPIRAL[1]
        x = np.concatenate([np.linspace(-9, -0.05, 200), np.linspace(0.05, 9, 200)])
        vals, S = h_boundary_image(case, x)
        assert np.max(np.abs(vals.imag)) < 1e-10
        assert np.min(np.abs(vals.real)) >= 4.0 - 1e-9
        assert S is not None

    def test_profile_monotone_between_division_points(self):
        cfg, case = SYM_SPIRAL
        pts = sorted(list(case.lambdas) + list(cfg.k))
        for lo, hi in zip([-12.0] + pts, pts + [12.0]):
            x = np.linspace(lo + 1e-3, hi - 1e-3, 150)
            _, S = h_boundary_image(case, x)
            d = np.diff(S)
            assert np.all(d > 0) or np.all(d < 0)

    def test_blow_up_at_lambda(self):
        case = SYM_SPIRAL[1]
        vals, _ = h_boundary_image(case, np.array([1e-5]))
        assert abs(vals[0]) > 1e4

    def test_double_imag_piecewise_constant(self):
        case = K4[1]
        x = np.linspace(-3, 1.9, 100)
        vals, _ = h_boundary_image(case, x)
        # left of rho0 = 2 both logs contribute a fixed multiple of pi
        assert np.allclose(vals.imag, vals.imag[0], atol=1e-10)

    def test_pole_proximity_rejected(self):
        with pytest.raises(DomainError):
            h_boundary_image(K5[1], np.array([1.0 + 1e-9]))

    def test_tips_match_trace_start_targets(self):
        cfg, case = SYM_SPIRAL
        vals, _ = h_boundary_image(case, np.array(cfg.k, dtype=float))
        assert vals[0] == pytest.approx(-4.0, abs=1e-9)
        assert vals[1] == pytest.approx(4.0, abs=1e-9)
