"""Chordal multi-slit engine: case data, the map h, explicit flow, traces.

The half-plane flow driven by n atoms moving along k_j*sqrt(1-t) is
resolved by one conformal map h per root structure of the auxiliary
polynomial P:

    spiral         f(z,t) = h^{-1}( (1-t)^{e^{-i psi}/(2|B|)} h((1-t)^{-1/2} z) )
    distinct real  f(z,t) = h^{-1}( (1-t)^{-1/(2 B_1)}       h((1-t)^{-1/2} z) )
    double/triple  f(z,t) = h^{-1}( (1/2) log(1-t) +         h((1-t)^{-1/2} z) )

All coefficients come from closed product formulas (partial fractions of
prod(z - k_j)/P(z)); the case invariants are asserted at build time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .configs import ChordalConfig
from .errors import DomainError, SeedingError
from .numerics import newton_continuation, principal_arg, principal_log
from .polyroots import ComplexPair, DistinctReal, DoubleRoot, TripleRoot

__all__ = [
    "SpiralCase",
    "DistinctRealCase",
    "DoubleCase",
    "TripleCase",
    "ChordalTraceSample",
    "AngleReport",
    "build_case",
    "h_eval",
    "h_derivative",
    "h_second_derivative_at_k",
    "chordal_flow",
    "chordal_w_explicit",
    "chordal_trace",
    "attraction_point",
    "intersection_angles",
    "h_boundary_image",
    "spiral_functional",
]

_BOUNDARY_OFFSET = 1e-8


@dataclass(frozen=True)
class SpiralCase:
    k: tuple[float, ...]
    b: tuple[float, ...]
    beta: complex
    lambdas: tuple[float, ...]
    B: complex
    psi: float
    A: tuple[float, ...]          # negative residues at the lambdas
    a: tuple[float, ...]          # positive exponents |A_j / B|


@dataclass(frozen=True)
class DistinctRealCase:
    k: tuple[float, ...]
    b: tuple[float, ...]
    rho1: float                   # attraction point (positive coefficient)
    rho2: float
    lambdas: tuple[float, ...]
    B1: float
    B2: float
    A: tuple[float, ...]
    exponent_b: float             # -B2/B1
    a: tuple[float, ...]          # -A_j/B1
    ordering_case: str


@dataclass(frozen=True)
class DoubleCase:
    k: tuple[float, ...]
    b: tuple[float, ...]
    rho0: float
    lambdas: tuple[float, ...]
    A: tuple[float, ...]
    c1: float                     # coefficient of log(z - rho0)
    c2: float                     # equals B2 * rho0
    B1: float                     # nan when rho0 == 0
    B2: float                     # nan when rho0 == 0
    position_case: str


@dataclass(frozen=True)
class TripleCase:
    k: tuple[float, ...]
    b: tuple[float, ...]
    rho0: float
    mu: int
    lambdas: tuple[float, ...]    # remaining simple roots, rho0 excluded
    A: tuple[float, ...]
    c1: float                     # log coefficient
    c2: float                     # equals C = (B2 + 2 B3) rho0
    c3: float                     # equals B3 rho0^2, negative
    B1: float                     # nan when rho0 == 0
    B2: float
    B3: float
    C: float


ChordalCaseData = SpiralCase | DistinctRealCase | DoubleCase | TripleCase


@dataclass(frozen=True)
class ChordalTraceSample:
    t: float
    point: complex
    residual: float


@dataclass(frozen=True)
class AngleReport:
    start_angle: float
    end_angle: float              # nan for the spiral case
    expected_end_angle: float     # nan for the spiral case
    winding: float                # populated for the spiral case only


# --------------------------------------------------------------------------
# Case construction.

def _assert_close(value, target, what, tol=1e-9):
    if abs(value - target) > tol:
        raise AssertionError(f"{what}: {value} vs {target}")


def build_case(config: ChordalConfig, structure) -> ChordalCaseData:
    """Partial-fraction coefficients of prod(z - k_j)/P for the given roots.

    All coefficients are evaluated from the closed product formulas and the
    sign/sum invariants of each case are asserted before returning.
    """
    k = np.asarray(config.k)
    if isinstance(structure, ComplexPair):
        return _build_spiral(config, k, structure)
    if isinstance(structure, DistinctReal):
        return _build_distinct(config, k, structure)
    if isinstance(structure, DoubleRoot):
        return _build_double(config, k, structure)
    if isinstance(structure, TripleRoot):
        return _build_triple(config, k, structure)
    raise TypeError(f"unknown root structure {type(structure).__name__}")


def _build_spiral(config, k, st):
    beta = st.beta
    lam = np.asarray(st.lambdas)
    B = np.prod(beta - k) / (2j * beta.imag * np.prod(beta - lam))
    psi = float(principal_arg(B))
    if not (-0.5 * math.pi < psi < 0.5 * math.pi):
        raise AssertionError(f"spiral angle out of range: {psi}")
    A = np.array(
        [
            np.prod(lam[j] - k)
            / (np.prod(lam[j] - np.delete(lam, j)) * abs(lam[j] - beta) ** 2)
            for j in range(len(lam))
        ]
    )
    if np.any(A >= 0):
        raise AssertionError(f"spiral residues must be negative: {A}")
    a = -A / abs(B)
    _assert_close(2.0 * math.cos(psi) - a.sum(), 1.0 / abs(B), "spiral coefficient identity")
    return SpiralCase(
        k=tuple(config.k), b=tuple(config.b), beta=complex(beta),
        lambdas=tuple(st.lambdas), B=complex(B), psi=psi,
        A=tuple(A), a=tuple(a),
    )


def _lambda_residues(k, lam, extra):
    """Residues A_j of prod(z-k)/P at the simple roots lam; extra multiplies
    the denominator with the remaining factors evaluated at lam_j."""
    out = []
    for j in range(len(lam)):
        denom = np.prod(lam[j] - np.delete(lam, j)) * extra(lam[j])
        out.append(float(np.prod(lam[j] - k) / denom))
    return np.array(out)


def _build_distinct(config, k, st):
    r1, r2 = st.rho1, st.rho2
    lam = np.asarray(st.lambdas)
    B1 = float(np.prod(r1 - k) / ((r1 - r2) * np.prod(r1 - lam)))
    B2 = float(np.prod(r2 - k) / ((r2 - r1) * np.prod(r2 - lam)))
    A = _lambda_residues(k, lam, lambda x: (x - r1) * (x - r2))
    if B1 <= 0 or B2 >= 0 or np.any(A >= 0):
        raise AssertionError(f"sign pattern violated: B1={B1}, B2={B2}, A={A}")
    _assert_close(B1 + B2 + A.sum(), 1.0, "residue sum")
    return DistinctRealCase(
        k=tuple(config.k), b=tuple(config.b), rho1=r1, rho2=r2,
        lambdas=tuple(st.lambdas), B1=B1, B2=B2, A=tuple(A),
        exponent_b=-B2 / B1, a=tuple(-A / B1), ordering_case=st.ordering_case,
    )


def _G_derivatives(k, lam, rho0, order):
    """G(rho0), G'(rho0), (G''/2)(rho0) for G = prod(z-k)/prod(z-lam)."""
    g = float(np.prod(rho0 - k) / np.prod(rho0 - lam)) if len(lam) else float(np.prod(rho0 - k))
    L = np.sum(1.0 / (rho0 - k)) - (np.sum(1.0 / (rho0 - lam)) if len(lam) else 0.0)
    if order == 1:
        return g, float(g * L)
    Lp = -np.sum(1.0 / (rho0 - k) ** 2) + (np.sum(1.0 / (rho0 - lam) ** 2) if len(lam) else 0.0)
    return g, float(g * L), float(0.5 * g * (L * L + Lp))


def _build_double(config, k, st):
    rho0 = st.rho0
    lam = np.asarray(st.lambdas)
    c2, c1 = _G_derivatives(k, lam, rho0, order=1)
    A = _lambda_residues(k, lam, lambda x: (x - rho0) ** 2)
    _assert_close(c1 + A.sum(), 1.0, "residue sum")
    positive = st.position_case in ("gap_below", "right")
    if (c2 > 0) != positive or c2 == 0:
        raise AssertionError(f"second-order coefficient sign {c2} contradicts {st.position_case}")
    if rho0 != 0:
        B2 = c2 / rho0
        B1 = c1 - B2
    else:
        B1 = B2 = math.nan
    return DoubleCase(
        k=tuple(config.k), b=tuple(config.b), rho0=rho0,
        lambdas=tuple(st.lambdas), A=tuple(A), c1=c1, c2=c2,
        B1=B1, B2=B2, position_case=st.position_case,
    )


def _build_triple(config, k, st):
    rho0 = st.rho0
    lam = np.asarray(st.lambdas)
    c3, c2, c1 = _G_derivatives(k, lam, rho0, order=2)
    A = _lambda_residues(k, lam, lambda x: (x - rho0) ** 3)
    _assert_close(c1 + A.sum(), 1.0, "residue sum")
    if c3 >= 0:
        raise AssertionError(f"third-order coefficient must be negative: {c3}")
    if rho0 != 0:
        B3 = c3 / rho0**2
        B2 = c2 / rho0 - 2.0 * B3
        B1 = c1 - B2 - B3
    else:
        B1 = B2 = B3 = math.nan
    return TripleCase(
        k=tuple(config.k), b=tuple(config.b), rho0=rho0, mu=st.mu,
        lambdas=tuple(st.lambdas), A=tuple(A), c1=c1, c2=c2, c3=c3,
        B1=B1, B2=B2, B3=B3, C=c2,
    )


def attraction_point(case: ChordalCaseData) -> complex:
    """The point every slit tip converges to as t -> 1."""
    if isinstance(case, SpiralCase):
        return case.beta
    if isinstance(case, DistinctRealCase):
        return complex(case.rho1)
    return complex(case.rho0)


# --------------------------------------------------------------------------
# The map h and its derivatives.

def _upper_log(w):
    """Principal log; on the real line the limit from above (arg pi on the
    negative axis) is used instead."""
    w = np.asarray(w, dtype=complex)
    re, im = w.real, w.imag
    arg = np.where(
        im == 0.0, np.where(re < 0.0, math.pi, 0.0), np.angle(w)
    )
    return np.log(np.abs(w)) + 1j * arg


def _h_additive(case, z):
    acc = np.zeros_like(np.asarray(z, dtype=complex))
    for Aj, lj in zip(case.A, case.lambdas):
        acc = acc + Aj * _upper_log(z - lj)
    acc = acc + case.c1 * _upper_log(z - case.rho0) - case.c2 / (z - case.rho0)
    if isinstance(case, TripleCase):
        acc = acc - case.c3 / (2.0 * (z - case.rho0) ** 2)
    return acc


def _h_any(case, z):
    z = np.asarray(z, dtype=complex)
    if isinstance(case, SpiralCase):
        e = np.exp(-1j * case.psi)
        acc = (z - case.beta) * np.exp(
            np.exp(-2j * case.psi) * _upper_log(z - np.conj(case.beta))
        )
        for aj, lj in zip(case.a, case.lambdas):
            acc = acc * np.exp(-aj * e * _upper_log(z - lj))
        return acc
    if isinstance(case, DistinctRealCase):
        acc = np.exp(case.exponent_b * _upper_log(z - case.rho2)) / (z - case.rho1)
        for aj, lj in zip(case.a, case.lambdas):
            acc = acc * np.exp(aj * _upper_log(z - lj))
        return acc
    return _h_additive(case, z)


def h_eval(case: ChordalCaseData, z):
    """h(z) on the open upper half-plane, principal branches throughout."""
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag <= 0):
        raise DomainError("h_eval requires Im z > 0")
    out = _h_any(case, z)
    return complex(out) if out.ndim == 0 else out


def _h_log_derivative_mult(case, z):
    """h'/h for the two multiplicative cases."""
    if isinstance(case, SpiralCase):
        e = np.exp(-1j * case.psi)
        acc = 1.0 / (z - case.beta) + np.exp(-2j * case.psi) / (z - np.conj(case.beta))
        for aj, lj in zip(case.a, case.lambdas):
            acc = acc - aj * e / (z - lj)
        return acc
    acc = case.exponent_b / (z - case.rho2) - 1.0 / (z - case.rho1)
    for aj, lj in zip(case.a, case.lambdas):
        acc = acc + aj / (z - lj)
    return acc


def _h_prime_additive(case, z):
    acc = case.c1 / (z - case.rho0) + case.c2 / (z - case.rho0) ** 2
    if isinstance(case, TripleCase):
        acc = acc + case.c3 / (z - case.rho0) ** 3
    for Aj, lj in zip(case.A, case.lambdas):
        acc = acc + Aj / (z - lj)
    return acc


def h_derivative(case: ChordalCaseData, z):
    """h'(z); vanishes exactly at the driving points k_j."""
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag <= 0):
        raise DomainError("h_derivative requires Im z > 0")
    if isinstance(case, (SpiralCase, DistinctRealCase)):
        out = _h_any(case, z) * _h_log_derivative_mult(case, z)
    else:
        out = _h_prime_additive(case, z)
    return complex(out) if out.ndim == 0 else out


def h_second_derivative_at_k(case: ChordalCaseData, kj: float) -> complex:
    """h'' at a driving point, where h' vanishes."""
    z = complex(kj, _BOUNDARY_OFFSET)
    if isinstance(case, (SpiralCase, DistinctRealCase)):
        L = _h_log_derivative_mult(case, z)
        lam = np.asarray(case.lambdas)
        if isinstance(case, SpiralCase):
            Lp = (
                -1.0 / (z - case.beta) ** 2
                - np.exp(-2j * case.psi) / (z - np.conj(case.beta)) ** 2
                + np.sum(np.asarray(case.a) * np.exp(-1j * case.psi) / (z - lam) ** 2)
            )
        else:
            Lp = (
                -case.exponent_b / (z - case.rho2) ** 2
                + 1.0 / (z - case.rho1) ** 2
                - (np.sum(np.asarray(case.a) / (z - lam) ** 2) if len(lam) else 0.0)
            )
        return complex(_h_any(case, z) * (Lp + L * L))
    acc = -case.c1 / (z - case.rho0) ** 2 - 2.0 * case.c2 / (z - case.rho0) ** 3
    if isinstance(case, TripleCase):
        acc = acc - 3.0 * case.c3 / (z - case.rho0) ** 4
    for Aj, lj in zip(case.A, case.lambdas):
        acc = acc - Aj / (z - lj) ** 2
    return complex(acc)


def spiral_functional(case: SpiralCase, z):
    """Im(e^{i psi} (z - beta)(z - conj beta) h'/h); positive on H."""
    z = np.asarray(z, dtype=complex)
    val = (
        np.exp(1j * case.psi)
        * (z - case.beta)
        * (z - np.conj(case.beta))
        * _h_log_derivative_mult(case, z)
    )
    out = val.imag
    return float(out) if out.ndim == 0 else out


# --------------------------------------------------------------------------
# Flow, explicit ODE solution, traces.

def _flow_exponent(case):
    if isinstance(case, SpiralCase):
        return np.exp(-1j * case.psi) / (2.0 * abs(case.B))
    if isinstance(case, DistinctRealCase):
        return -1.0 / (2.0 * case.B1)
    return None  # additive cases


def _target_at(case, t, h_ref):
    E = _flow_exponent(case)
    if E is None:
        return 0.5 * math.log1p(-t) + h_ref
    return np.exp(E * math.log1p(-t)) * h_ref


def _h_eval_fn(case):
    def eval_fn(w: complex):
        if w.imag <= 0:
            return complex(math.inf), complex(1.0)
        val = _h_any(case, w)
        if isinstance(case, (SpiralCase, DistinctRealCase)):
            der = val * _h_log_derivative_mult(case, w)
        else:
            der = _h_prime_additive(case, w)
        return complex(val), complex(der)

    return eval_fn


def _time_path(case, t, n_min=32):
    E = _flow_exponent(case)
    mag = abs(E) if E is not None else 0.5
    count = max(n_min, int(math.ceil(16.0 * (1.0 + mag) * abs(math.log1p(-t)))))
    # cluster the path points toward t = 1 where the targets move fastest
    u = np.linspace(0.0, math.log1p(-t), count + 1)[1:]
    return 1.0 - np.exp(u)


def chordal_flow(case: ChordalCaseData, z: complex, t: float, tol: float = 1e-12,
                 cap: float = 1.0 - 1e-6) -> complex:
    """f(z, t) by continuation of h along the time path from t = 0."""
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("flow evaluation requires Im z > 0")
    if not 0.0 <= t <= cap:
        raise DomainError(f"time must lie in [0, {cap}]")
    if t == 0.0:
        return z
    path = _time_path(case, t)
    inner = h_eval(case, z / np.sqrt(1.0 - path))
    targets = [_target_at(case, s, hv) for s, hv in zip(path, inner)]
    sol = newton_continuation(_h_eval_fn(case), targets, seed=z, tol=tol)
    w = sol[-1]
    assert w.imag > 0
    return w


def chordal_w_explicit(case: ChordalCaseData, z: complex, t: float,
                       tol: float = 1e-12) -> complex:
    """Explicit solution of the driving ODE started at z.

    The scaling exponent is the negative of the flow exponent:
    w(z, t) = sqrt(1-t) * h^{-1}((1-t)^{-E} h(z)) in the power cases and
    the additive analogue otherwise.  Satisfies f(w(z,t), t) = z.
    """
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("requires Im z > 0")
    if t == 0.0:
        return z
    path = _time_path(case, t)
    hz = h_eval(case, z)
    E = _flow_exponent(case)
    if E is None:
        targets = [hz - 0.5 * math.log1p(-s) for s in path]
    else:
        targets = [np.exp(-E * math.log1p(-s)) * hz for s in path]
    sol = newton_continuation(_h_eval_fn(case), targets, seed=z, tol=tol)
    return complex(math.sqrt(1.0 - t) * sol[-1])


def _h_at_k(case, kj):
    return complex(_h_any(case, complex(kj, _BOUNDARY_OFFSET)))


def _seed_off_k(case, kj, offset=1e-4):
    h_k = _h_at_k(case, kj)
    hpp = h_second_derivative_at_k(case, kj)
    E = _flow_exponent(case)
    if E is None:
        d_rate = 0.5
    else:
        d_rate = abs(E) * max(abs(h_k), 1e-30)
    t_small = 0.5 * abs(hpp) * offset**2 / d_rate
    t_small = min(t_small, 1e-3)
    target = _target_at(case, t_small, h_k)
    delta = np.sqrt(2.0 * (target - h_k) / hpp)
    for cand in (kj + delta, kj - delta):
        if cand.imag > 0:
            return float(t_small), complex(cand)
    raise SeedingError("both quadratic seed branches leave the upper half-plane")


def chordal_trace(case: ChordalCaseData, j: int, t_grid, tol: float = 1e-10,
                  cap: float = 1.0 - 1e-6) -> list[ChordalTraceSample]:
    """Tip trajectory gamma_j(t) = h^{-1}(target_j(t)) along the grid.

    The driving point k_j is a critical point of h, so the first step off
    t = 0 uses the local quadratic model and continuation takes over.
    Residuals are scaled by max(1, |target|) since the target diverges as
    t approaches 1.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if len(t_grid) == 0 or t_grid[0] < 0 or np.any(np.diff(t_grid) <= 0):
        raise DomainError("t_grid must be increasing and start at t >= 0")
    if t_grid[-1] > cap:
        raise DomainError(f"grid exceeds the time cap {cap}")
    kj = case.k[j]
    h_k = _h_at_k(case, kj)

    out: list[ChordalTraceSample] = []
    times = t_grid
    if times[0] == 0.0:
        out.append(ChordalTraceSample(t=0.0, point=complex(kj), residual=0.0))
        times = times[1:]
        if len(times) == 0:
            return out

    t_small, seed = _seed_off_k(case, kj)
    t_end = times[-1]
    # geometric refinement toward t = 1 where the target diverges
    count = max(64, int(math.ceil(48.0 * abs(math.log1p(-t_end)))))
    dense = 1.0 - np.exp(
        np.linspace(math.log1p(-t_small), math.log1p(-t_end), count)
    )
    full = np.unique(np.concatenate([dense, times]))
    full = np.clip(full[full >= t_small * (1 - 1e-12)], t_small, t_end)
    targets = [_target_at(case, s, h_k) for s in full]
    sols = newton_continuation(_h_eval_fn(case), targets, seed=seed, tol=tol)

    lookup = {float(s): i for i, s in enumerate(full)}
    hpp = h_second_derivative_at_k(case, kj)
    for t in times:
        if float(t) not in lookup:
            # below the seeding time: quadratic model, honest residual
            target = _target_at(case, float(t), h_k)
            delta = np.sqrt(2.0 * (target - h_k) / hpp)
            cand = kj + delta if (kj + delta).imag > 0 else kj - delta
            res = abs(_h_any(case, complex(cand)) - target) / max(1.0, abs(target))
            out.append(ChordalTraceSample(t=float(t), point=complex(cand), residual=float(res)))
            continue
        i = lookup[float(t)]
        w = sols[i]
        res = abs(_h_any(case, w) - targets[i]) / max(1.0, abs(targets[i]))
        out.append(ChordalTraceSample(t=float(t), point=complex(w), residual=float(res)))
    return out


# --------------------------------------------------------------------------
# Angles and boundary behaviour.

def _sc_segment_angle(case: DistinctRealCase, kj: float) -> float:
    """Angle theta_j*pi of the half-line image endpoint, via the normalizing
    constant of the composed half-plane polygon map."""
    w = complex(case.rho1, 1.0 + abs(case.rho2 - case.rho1))
    T = (w - case.rho2) / (w - case.rho1)

    def Tmap(x):
        return (x - case.rho2) / (x - case.rho1)

    base = np.exp(principal_log(T - 1.0) / case.B1) * np.exp(
        case.exponent_b * principal_log(T)
    )
    for aj, lj in zip(case.a, case.lambdas):
        base = base * np.exp(aj * principal_log(T - Tmap(lj)))
    C = h_eval(case, w) / base
    ang = principal_arg(_h_at_k(case, kj) / C)
    return float(ang % (2.0 * math.pi))


def intersection_angles(case: ChordalCaseData, j: int,
                        samples: list[ChordalTraceSample]) -> AngleReport:
    """Start and end angles of a sampled tip trajectory.

    The start angle extrapolates Arg(gamma(t) - k_j) linearly in sqrt(t) to
    t = 0; every slit starts perpendicular to the real line.  The end angle
    (real-endpoint cases) extrapolates the approach direction at the
    attraction point in sqrt(1-t).  For the spiral case the end angle is
    undefined and the winding about beta is reported instead.
    """
    pts = [s for s in samples if s.t > 0]
    if len(pts) < 10:
        raise DomainError("need at least 10 positive-time samples")
    kj = case.k[j]
    head = pts[: max(10, len(pts) // 5)]
    sq = np.sqrt([s.t for s in head])
    ang = np.unwrap([principal_arg(s.point - kj) for s in head])
    start_angle = float(np.polyfit(sq, ang, 1)[1])

    attr = attraction_point(case)
    if isinstance(case, SpiralCase):
        rel = np.unwrap([principal_arg(s.point - attr) for s in pts])
        return AngleReport(
            start_angle=start_angle, end_angle=math.nan,
            expected_end_angle=math.nan,
            winding=float((rel[-1] - rel[0]) / (2.0 * math.pi)),
        )
    # The approach to the attraction point is logarithmically slow in t for
    # the multiple-root cases, but the angle is a smooth function of the
    # remaining distance r; extrapolate a quadratic fit in r to r = 0.
    tail = pts[-max(10, len(pts) // 5):]
    r1 = np.abs([s.point - attr for s in tail])
    ang1 = np.unwrap([principal_arg(s.point - attr) for s in tail])
    end_angle = float(np.polyfit(r1, ang1, 2)[-1] % (2.0 * math.pi))
    if isinstance(case, DistinctRealCase):
        expected = math.pi - _sc_segment_angle(case, kj)
        expected %= 2.0 * math.pi
    elif isinstance(case, DoubleCase):
        # tangential; the side follows the sign of the leading coefficient
        # in the dominant balance gamma - rho0 ~ -2 c2 / log(1-t)
        expected = 0.0 if case.c2 > 0 else math.pi
    else:
        expected = 0.5 * math.pi
    return AngleReport(
        start_angle=start_angle, end_angle=end_angle,
        expected_end_angle=float(expected), winding=math.nan,
    )


def h_boundary_image(case: ChordalCaseData, x_grid, min_dist: float = 1e-6):
    """h on the real line (limit from above) and the spiral radius profile.

    Returns (values, profile); the profile S is populated for the spiral
    case (log-radius of the boundary spirals) and is None otherwise.
    Monotonicity of S between consecutive division points and the blow-up
    at the lambdas are the callers' checks; values near poles are rejected.
    """
    x = np.asarray(x_grid, dtype=float)
    poles = list(case.lambdas)
    if isinstance(case, DistinctRealCase):
        poles.append(case.rho1)
    if isinstance(case, (DoubleCase, TripleCase)):
        poles.append(case.rho0)
    for p in poles:
        if len(x) and np.min(np.abs(x - p)) < min_dist:
            raise DomainError(f"grid point within {min_dist} of the pole {p}")
    vals = _h_any(case, x.astype(complex))
    if not isinstance(case, SpiralCase):
        return vals, None
    S = 2.0 * math.cos(case.psi) * np.log(np.abs(x - case.beta))
    S = S - 2.0 * math.sin(case.psi) * principal_arg(x - case.beta)
    for aj, lj in zip(case.a, case.lambdas):
        S = S - aj * np.log(np.abs(x - lj))
    return vals, S
