"""Radial multi-slit engine: spirallike map, explicit flow, slit traces.

The flow in the unit disc driven by n rotating boundary atoms admits the
closed form

    f(z, t) = phi^{-1}( e^{-(b - i a) t} phi(e^{-i a t} z) ),

where phi(z) = z * prod (z - xi_k)^{2 alpha_k} under a fixed disc branch.
This module computes the critical circle points xi_k, the exponents
alpha_k, and everything built on top of them: evaluation of phi and its
derivatives, flow values via Newton continuation, trace points of the
growing slits, and the diagnostics (start angle, winding, boundary spiral
profile) used by the check suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .configs import RadialConfig
from .errors import DomainError, SeedingError
from .numerics import (
    _branch_log_closed,
    branch_log_disc,
    newton_continuation,
    principal_arg,
    principal_log,
)

__all__ = [
    "RadialSpiralData",
    "TraceSample",
    "TraceDiagnostics",
    "compute_spiral_data",
    "phi_eval",
    "phi_derivative",
    "phi_log_derivative",
    "phi_second_derivative_at_anchor",
    "spirallike_functional",
    "radial_flow",
    "radial_trace",
    "trace_diagnostics",
    "semigroup_residual",
    "convergence_experiment",
    "phi_boundary_image",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RadialSpiralData:
    """Critical points and exponents defining the spirallike map."""

    rho: np.ndarray      # angles of the xi_k, sorted, in (0, 2*pi]
    alpha: np.ndarray    # negative real exponents, one per xi_k
    xi_hat: complex      # unimodular (1 + i*a_hat)/(1 - i*a_hat)
    half_arg: float      # half the argument of xi_hat, equals arctan(a_hat)
    parity: int          # 0: anchors below their critical angles, 1: above
    b_total: float

    @property
    def xi(self) -> np.ndarray:
        return np.exp(1j * self.rho)

    @property
    def n(self) -> int:
        return len(self.rho)


@dataclass(frozen=True)
class TraceSample:
    t: float
    point: complex
    residual: float


@dataclass(frozen=True)
class TraceDiagnostics:
    start_angle: float
    total_winding: float
    modulus_monotone: bool
    crossing_times: np.ndarray


# --------------------------------------------------------------------------
# Critical points and exponents.

def _g_profile(config: RadialConfig, xi_hat: complex):
    """The real strictly-decreasing profile whose zeros are the rho_k."""
    zeta = config.anchors
    b = np.asarray(config.b)
    denom = 1.0 + np.conj(xi_hat)

    def g_tilde(theta: float) -> float:
        z = complex(math.cos(theta), math.sin(theta))
        val = np.sum(b * (z + zeta * np.conj(xi_hat)) / (zeta - z))
        return (-1j * val / denom).real

    def g_tilde_prime(theta: float) -> float:
        # d/dtheta of the profile; each atom contributes -b_k/(4 sin^2(.)).
        s = np.sin(0.5 * (theta - np.asarray(config.theta)))
        return float(-np.sum(b / (4.0 * s * s)))

    return g_tilde, g_tilde_prime


def compute_spiral_data(config: RadialConfig) -> RadialSpiralData:
    """Locate the critical circle angles and solve for the exponents.

    One zero of the decreasing profile lies strictly inside each arc
    between consecutive anchors; bisection there cannot fail to bracket.
    Exponents come from residues of the logarithmic derivative and are
    validated against the sum rule alpha_1 + ... + alpha_n = -cos(half_arg).
    """
    b_tot = config.b_total
    a_hat = config.a / b_tot
    xi_hat = (1.0 + 1j * a_hat) / (1.0 - 1j * a_hat)
    half_arg = math.atan(a_hat)
    theta = np.asarray(config.theta)
    n = config.n

    g_tilde, g_tilde_prime = _g_profile(config, xi_hat)

    roots = np.empty(n)
    for k in range(n):
        lo = theta[k]
        hi = theta[k + 1] if k + 1 < n else theta[0] + _TWO_PI
        gap = hi - lo
        eps = gap * 1e-9
        flo, fhi = g_tilde(lo + eps), g_tilde(hi - eps)
        for _ in range(30):
            if flo > 0 and fhi < 0:
                break
            eps *= 0.1
            flo, fhi = g_tilde(lo + eps), g_tilde(hi - eps)
        assert flo > 0 > fhi, "profile failed to bracket inside an arc"
        a_, b_ = lo + eps, hi - eps
        for _ in range(70):
            mid = 0.5 * (a_ + b_)
            if g_tilde(mid) > 0:
                a_ = mid
            else:
                b_ = mid
        root = 0.5 * (a_ + b_)
        for _ in range(3):
            root -= g_tilde(root) / g_tilde_prime(root)
        roots[k] = root

    parity = 1 if roots[-1] > _TWO_PI else 0
    if parity:
        rho = np.concatenate([[roots[-1] - _TWO_PI], roots[:-1]])
    else:
        rho = roots
    rho = np.where(rho <= 0.0, rho + _TWO_PI, rho)
    rho = np.sort(rho)
    _check_interlacing_pattern(theta, rho, parity)

    xi = np.exp(1j * rho)
    zeta = config.anchors
    residues = np.empty(n, dtype=complex)
    for k in range(n):
        others = np.delete(xi, k)
        residues[k] = np.prod(zeta - xi[k]) / (xi[k] * np.prod(xi[k] - others))
    alpha_raw = (-1.0) ** (n - 1) * residues * np.exp(-1j * half_arg) / 2.0
    target = -math.cos(half_arg)
    sign = 1.0 if abs(alpha_raw.real.sum() - target) < abs(-alpha_raw.real.sum() - target) else -1.0
    alpha = sign * alpha_raw
    assert np.max(np.abs(alpha.imag)) < 1e-9, "exponents must be real"
    alpha = alpha.real
    assert abs(alpha.sum() - target) < 1e-10, "exponent sum rule violated"
    assert np.all(alpha < 0), "exponents must be negative"

    return RadialSpiralData(
        rho=rho, alpha=alpha, xi_hat=complex(xi_hat),
        half_arg=half_arg, parity=parity, b_total=b_tot,
    )


def _check_interlacing_pattern(theta, rho, parity):
    n = len(theta)
    hi = np.concatenate([theta[1:], [theta[0] + _TWO_PI]])
    if parity == 0:
        ok = np.all((theta < rho) & (rho < hi))
    else:
        lo = np.concatenate([[theta[-1] - _TWO_PI], theta[:-1]])
        ok = np.all((lo < rho) & (rho < theta))
    assert ok, "critical angles do not interlace the anchors"


# --------------------------------------------------------------------------
# The spirallike map.

def _log_phi_over_z(data: RadialSpiralData, z, closed: bool):
    xi = data.xi
    branch = _branch_log_closed if closed else branch_log_disc
    acc = 0.0
    for k in range(data.n):
        acc = acc + 2.0 * data.alpha[k] * branch(z, xi[k])
    return np.exp(-1j * data.half_arg) * acc


def phi_eval(data: RadialSpiralData, z):
    """phi(z) for |z| < 1.  Accepts scalars or arrays."""
    z = np.asarray(z, dtype=complex)
    out = z * np.exp(_log_phi_over_z(data, z, closed=False))
    return complex(out) if out.ndim == 0 else out


def _phi_eval_closed(data: RadialSpiralData, z):
    z = np.asarray(z, dtype=complex)
    out = z * np.exp(_log_phi_over_z(data, z, closed=True))
    return complex(out) if out.ndim == 0 else out


def phi_log_derivative(data: RadialSpiralData, z):
    """phi'(z)/phi(z) = 1/z + e^{-i half_arg} sum 2 alpha_k/(z - xi_k)."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for k in range(data.n):
        acc = acc + 2.0 * data.alpha[k] / (z - data.xi[k])
    out = 1.0 / z + np.exp(-1j * data.half_arg) * acc
    return complex(out) if out.ndim == 0 else out


def phi_derivative(data: RadialSpiralData, z):
    """phi'(z) on |z| < 1, with the removable singularity at 0 filled in."""
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("phi_derivative requires |z| < 1")
    out = np.empty_like(z)
    at0 = z == 0
    if np.any(at0):
        # phi'(0) = lim phi(z)/z.
        out[at0] = np.exp(
            np.exp(-1j * data.half_arg)
            * np.sum(2.0 * data.alpha * principal_log(-data.xi))
        )
    rest = ~at0
    if np.any(rest):
        zr = z[rest]
        out[rest] = phi_eval(data, zr) * phi_log_derivative(data, zr)
    return complex(out[0]) if scalar else out


def spirallike_functional(data: RadialSpiralData, z):
    """Re(e^{i half_arg} z phi'/phi); positive on the punctured disc."""
    z = np.asarray(z, dtype=complex)
    val = np.exp(1j * data.half_arg) * z * phi_log_derivative(data, z)
    out = val.real
    return float(out) if out.ndim == 0 else out


def phi_second_derivative_at_anchor(data: RadialSpiralData, zeta: complex) -> complex:
    """phi'' at an anchor, where phi' vanishes.

    At a zero of phi'/phi the second derivative reduces to
    phi * d/dz(phi'/phi).
    """
    zeta = complex(zeta)
    lval = phi_log_derivative(data, zeta)
    assert abs(lval) < 1e-8, "anchor is not a critical point of phi"
    lprime = -1.0 / zeta**2 - np.exp(-1j * data.half_arg) * np.sum(
        2.0 * data.alpha / (zeta - data.xi) ** 2
    )
    return complex(_phi_eval_closed(data, zeta) * lprime)


# --------------------------------------------------------------------------
# Flow evaluation.

_LOG_FLOOR = 30.0 * math.log(10.0)


def _flow_eval_fn(data: RadialSpiralData):
    def eval_fn(w: complex):
        if abs(w) > 1.0:
            return complex(math.inf), complex(1.0)
        val = _phi_eval_closed(data, w)
        der = val * phi_log_derivative(data, w) if w != 0 else phi_derivative(data, 0.0)
        return complex(val), complex(der)

    return eval_fn


def _flow_targets(data, config, z, t, n_min=16):
    """Sampled target path s -> e^{-(b - i a) s} phi(e^{-i a s} z)."""
    rate = complex(data.b_total, -config.a)
    count = max(n_min, int(math.ceil(abs(rate) * t / 0.2)))
    s = np.linspace(0.0, t, count + 1)[1:]
    gap = 1.0 - abs(z)
    speed = abs(config.a) + data.b_total
    if gap * 10.0 < speed * t:
        # starting near the circle the image path turns on the scale of the
        # boundary gap, far faster than the uniform spacing; grade the first
        # leg geometrically from that scale upward
        first = min(0.2 * gap / speed, t / count)
        ramp = np.geomspace(first, t, 400)
        s = np.unique(np.concatenate([ramp, s]))
    zs = np.exp(-1j * config.a * s) * z
    return np.exp(-rate * s) * phi_eval(data, zs)


def radial_flow(
    data: RadialSpiralData,
    config: RadialConfig,
    z: complex,
    t: float,
    tol: float = 1e-12,
) -> complex:
    """f(z, t) by Newton continuation along the image path of phi.

    Beyond the time where e^{-b t} underflows the working precision the
    flow is numerically the origin and 0 is returned directly.
    """
    if t < 0:
        raise DomainError("flow time must be nonnegative")
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError("flow evaluation requires |z| < 1")
    if t == 0 or z == 0:
        return z
    if data.b_total * t > _LOG_FLOOR:
        return 0.0
    targets = _flow_targets(data, config, z, t)
    sol = newton_continuation(_flow_eval_fn(data), targets, seed=z, tol=tol)
    w = sol[-1]
    assert abs(w) < 1.0
    return w


def semigroup_residual(
    data: RadialSpiralData, config: RadialConfig, z: complex, s: float, t: float
) -> float:
    """|f(e^{i a (t+s)} z, t+s) - f(e^{i a t} f(e^{i a s} z, s), t)|."""
    a = config.a
    lhs = radial_flow(data, config, np.exp(1j * a * (t + s)) * z, t + s)
    inner = radial_flow(data, config, np.exp(1j * a * s) * z, s)
    rhs = radial_flow(data, config, np.exp(1j * a * t) * inner, t)
    return abs(lhs - rhs)


# --------------------------------------------------------------------------
# Slit traces.

def _seed_off_anchor(data, config, k, offset=1e-4):
    """Second-order Taylor seed just inside the disc, off the critical anchor."""
    zeta = complex(config.anchors[k])
    phi_z = _phi_eval_closed(data, zeta)
    phi_pp = phi_second_derivative_at_anchor(data, zeta)
    rate = complex(data.b_total, -config.a)
    # Time at which the quadratic displacement has size ~offset.
    t_small = 0.5 * abs(phi_pp) * offset**2 / (abs(rate) * abs(phi_z))
    target = np.exp(-rate * t_small) * phi_z
    delta = np.sqrt(2.0 * (target - phi_z) / phi_pp)
    for cand in (zeta + delta, zeta - delta):
        if abs(cand) < 1.0:
            return float(t_small), complex(cand), complex(target)
    raise SeedingError("both quadratic seed branches leave the disc")


def radial_trace(
    data: RadialSpiralData,
    config: RadialConfig,
    k: int,
    t_grid,
    tol: float = 1e-10,
) -> list[TraceSample]:
    """Points of the k-th slit tip gamma_k along the given time grid.

    gamma_k solves phi(gamma) = e^{-(b - i a) t} phi(zeta_k).  The anchor
    itself is a critical point, so the first step uses the local quadratic
    model of phi and continuation takes over from there.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if len(t_grid) == 0 or t_grid[0] < 0 or np.any(np.diff(t_grid) <= 0):
        raise DomainError("t_grid must be increasing and start at t >= 0")
    zeta = complex(config.anchors[k])
    phi_z = _phi_eval_closed(data, zeta)
    rate = complex(data.b_total, -config.a)

    out: list[TraceSample] = []
    times = t_grid
    if times[0] == 0.0:
        out.append(TraceSample(t=0.0, point=zeta, residual=0.0))
        times = times[1:]
        if len(times) == 0:
            return out

    t_small, seed, seed_target = _seed_off_anchor(data, config, k)
    eval_fn = _flow_eval_fn(data)
    # Densify between the seed time and the last grid time so consecutive
    # targets stay within each other's Newton basins.
    t_end = times[-1]
    count = max(32, int(math.ceil(abs(rate) * (t_end - t_small) / 0.1)))
    dense = np.geomspace(t_small, t_end, count)
    full = np.unique(np.concatenate([dense, times]))
    full = full[full >= t_small]
    targets = np.exp(-rate * full) * phi_z
    sols = newton_continuation(eval_fn, targets, seed=seed, tol=tol)

    idx = {float(t): i for i, t in enumerate(full)}
    for t in times:
        if t < t_small:
            # Inside the seeding window the quadratic model is the best
            # available value; its residual is recorded honestly.
            target = np.exp(-rate * t) * phi_z
            delta = np.sqrt(
                2.0 * (target - phi_z) / phi_second_derivative_at_anchor(data, zeta)
            )
            cand = zeta + delta if abs(zeta + delta) < 1 else zeta - delta
            res = abs(_phi_eval_closed(data, cand) - target) / max(1.0, abs(target))
            out.append(TraceSample(t=float(t), point=complex(cand), residual=float(res)))
            continue
        i = idx[float(t)]
        w = sols[i]
        res = abs(_phi_eval_closed(data, w) - targets[i]) / max(1.0, abs(targets[i]))
        out.append(TraceSample(t=float(t), point=complex(w), residual=float(res)))
    return out


def trace_diagnostics(
    samples: list[TraceSample],
    anchor: complex,
    refine=None,
) -> TraceDiagnostics:
    """Start angle, winding and modulus monotonicity of a sampled trace.

    The start angle is the limit angle between the chord from the anchor
    and the circle tangent there, extrapolated linearly in sqrt(t).  The
    winding unwraps the sampled argument; when adjacent samples jump by
    more than pi/2 and a ``refine(t) -> point`` callback is given, midpoint
    samples are inserted until the jumps are resolved.
    """
    pts = [s for s in samples if s.t > 0 and abs(s.point) > 1e-12]
    if len([s for s in pts if s.t <= pts[0].t * 30][:10]) < 3 or len(pts) < 10:
        raise DomainError("need at least 10 positive-time samples for diagnostics")
    anchor = complex(anchor)
    tangent = 1j * anchor

    head = pts[: max(10, len(pts) // 5)]
    sq = np.sqrt([s.t for s in head])
    ang = np.array(
        [principal_arg((s.point - anchor) / tangent) % math.pi for s in head]
    )
    coef = np.polyfit(sq, np.unwrap(ang, period=math.pi), 1)
    start_angle = float(coef[1])

    t_arr = np.array([s.t for s in pts])
    p_arr = np.array([s.point for s in pts])
    t_arr, p_arr = _refine_for_winding(t_arr, p_arr, refine)
    raw = principal_arg(p_arr)
    unwrapped = np.unwrap(raw)
    total_winding = float((unwrapped[-1] - unwrapped[0]) / _TWO_PI)

    moduli = np.abs(p_arr)
    modulus_monotone = bool(np.all(np.diff(moduli) < 1e-12))

    rel = unwrapped - unwrapped[0]
    crossings = []
    for m in range(1, int(abs(rel[-1]) // math.pi) + 1):
        level = math.copysign(m * math.pi, rel[-1])
        hit = np.nonzero(np.diff(np.sign(rel - level)) != 0)[0]
        if len(hit):
            i = hit[0]
            frac = (level - rel[i]) / (rel[i + 1] - rel[i])
            crossings.append(float(t_arr[i] + frac * (t_arr[i + 1] - t_arr[i])))
    return TraceDiagnostics(
        start_angle=start_angle,
        total_winding=total_winding,
        modulus_monotone=modulus_monotone,
        crossing_times=np.asarray(crossings),
    )


def _refine_for_winding(t_arr, p_arr, refine, max_rounds=12):
    if refine is None:
        return t_arr, p_arr
    for _ in range(max_rounds):
        jumps = np.abs(np.diff(principal_arg(p_arr)))
        bad = np.nonzero(np.minimum(jumps, _TWO_PI - jumps) > 0.5 * math.pi)[0]
        if len(bad) == 0:
            break
        new_t = 0.5 * (t_arr[bad] + t_arr[bad + 1])
        new_p = np.array([refine(t) for t in new_t])
        t_arr = np.concatenate([t_arr, new_t])
        order = np.argsort(t_arr)
        t_arr = t_arr[order]
        p_arr = np.concatenate([p_arr, new_p])[order]
    return t_arr, p_arr


# --------------------------------------------------------------------------
# Experiments and boundary profile.

def convergence_experiment(a_values, z_samples, t: float):
    """Sup-deviation of the single-atom flow from the dilation z e^{-t}.

    For the unit-weight atom at 1, as the rotation rate grows the flow
    approaches the rotationally averaged flow z -> z e^{-t}.  Returns one
    deviation per rate; for the default grids these decrease strictly.
    """
    a_values = list(a_values)
    if any(a <= 0 for a in a_values) or any(
        x >= y for x, y in zip(a_values, a_values[1:])
    ):
        raise DomainError("rates must be positive and increasing")
    z_samples = np.asarray(z_samples, dtype=complex)
    if np.any(np.abs(z_samples) > 0.8):
        raise DomainError("sample points must satisfy |z| <= 0.8")
    devs = []
    for a in a_values:
        config = RadialConfig(theta=(0.0,), b=(1.0,), a=float(a))
        data = compute_spiral_data(config)
        err = max(
            abs(radial_flow(data, config, complex(z), t) - z * math.exp(-t))
            for z in z_samples
        )
        devs.append(float(err))
    return devs


def phi_boundary_image(data: RadialSpiralData, theta_grid):
    """Boundary values phi(e^{i theta}) and the spiral angle profile.

    The profile is Theta(theta) = theta sin(half_arg)
    - sum 2 alpha_k log|sin((theta - rho_k)/2)|; it is concave between
    consecutive critical angles and each arc maps onto a logarithmic
    spiral through the corresponding tip.
    """
    theta_grid = np.asarray(theta_grid, dtype=float)
    d = np.abs(
        (theta_grid[:, None] - data.rho[None, :] + math.pi) % _TWO_PI - math.pi
    )
    if np.min(d) < 1e-6:
        raise DomainError("grid point too close to a critical angle")
    z = np.exp(1j * theta_grid)
    phi_vals = _phi_eval_closed(data, z)
    profile = theta_grid * math.sin(data.half_arg)
    for k in range(data.n):
        profile = profile - 2.0 * data.alpha[k] * np.log(
            np.abs(np.sin(0.5 * (theta_grid - data.rho[k])))
        )
    return phi_vals, profile
