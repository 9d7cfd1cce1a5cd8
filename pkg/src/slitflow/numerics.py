"""Branch-safe complex elementary functions, adaptive ODE integration and
Newton continuation.

The principal argument used throughout the package is the half-open range
[-pi, pi): arg(-1) = -pi, never +pi.  ``principal_arg``/``principal_log``
enforce this; plain ``cmath``/``numpy`` put -1 on the +pi side instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ContinuationError, DomainError

__all__ = [
    "principal_arg",
    "principal_log",
    "arccot",
    "branch_log_disc",
    "cpow",
    "OdePath",
    "integrate_ode",
    "newton_continuation",
]


def principal_arg(w):
    """Argument of ``w`` in [-pi, pi).  Accepts scalars or arrays."""
    a = np.angle(w)
    return np.where(a >= math.pi, a - 2.0 * math.pi, a) if np.ndim(a) else (
        a - 2.0 * math.pi if a >= math.pi else a
    )


def principal_log(w):
    """log|w| + i*arg(w) with arg in [-pi, pi)."""
    return np.log(np.abs(w)) + 1j * principal_arg(w)


def arccot(x: float) -> float:
    """Arccot with range (0, pi): arccot(x) = pi/2 - arctan(x)."""
    return 0.5 * math.pi - math.atan(x)


def _branch_log_closed(z, xi):
    """log(z - xi) branch used on the closed disc, no domain check.

    Equals Log(-xi) + Log(1 - z/xi); the second factor has positive real
    part for |z| < 1 so the principal log never crosses its cut there.  The
    formula stays continuous up to |z| = 1 away from z = xi.
    """
    return principal_log(-np.asarray(xi)) + np.log1p(-np.asarray(z) / xi)


def branch_log_disc(z, xi):
    """Single-valued branch of log(z - xi) on the open unit disc.

    ``xi`` must be unimodular.  Raises :class:`DomainError` for |z| >= 1;
    engines that need boundary values use the closed-disc variant internally.
    """
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("branch_log_disc requires |z| < 1")
    return _branch_log_closed(z, xi)


def cpow(base_log, exponent):
    """exp(exponent * base_log) for a pre-chosen branch of the logarithm."""
    return np.exp(np.asarray(exponent) * base_log)


@dataclass
class OdePath:
    """Accepted samples of an adaptive integration, with step diagnostics."""

    t: np.ndarray
    y: np.ndarray
    accepted: int
    rejected: int
    err_estimate: float
    truncated: bool = False
    truncation_reason: str = ""

    @property
    def t_final(self) -> float:
        return float(self.t[-1])

    @property
    def y_final(self) -> complex:
        return complex(self.y[-1])


# Dormand-Prince 5(4) tableau.
_DP_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_DP_E = (
    35 / 384 - 5179 / 57600,
    0.0,
    500 / 1113 - 7571 / 16695,
    125 / 192 - 393 / 640,
    -2187 / 6784 + 92097 / 339200,
    11 / 84 - 187 / 2100,
    -1 / 40,
)


def integrate_ode(
    field: Callable[[float, complex], complex],
    t0: float,
    t1: float,
    y0: complex,
    rel_tol: float = 1e-9,
    abs_tol: float = 1e-12,
    guard: Callable[[float, complex], bool] | None = None,
    max_steps: int = 200_000,
) -> OdePath:
    """Integrate y' = field(t, y) with an embedded Dormand-Prince 5(4) pair.

    Step sizes follow a PI controller on the local error estimate
    ``|err| <= rel_tol*|y| + abs_tol``.  If ``guard`` returns False at a
    candidate step endpoint the step is shrunk; once the step underflows the
    path is returned truncated (flagged, never silently wrong).
    """
    if not t0 < t1:
        raise ValueError("integrate_ode requires t0 < t1")
    if rel_tol <= 0 or abs_tol <= 0:
        raise ValueError("tolerances must be positive")

    t, y = float(t0), complex(y0)
    ts, ys = [t], [y]
    k = [complex(0)] * 7
    k[0] = complex(field(t, y))
    h = min(0.1 * (t1 - t0), (rel_tol ** 0.25) * (1.0 + abs(y)) / (1.0 + abs(k[0])))
    hmin = 1e-14 * max(1.0, t1 - t0)
    accepted = rejected = 0
    err_prev = 1.0
    last_err = 0.0
    truncated = False
    reason = ""

    for _ in range(max_steps):
        if t >= t1:
            break
        h = min(h, t1 - t)
        if h < hmin:
            truncated, reason = True, "step size underflow"
            break
        for i in range(1, 7):
            yi = y + h * sum(a * k[j] for j, a in enumerate(_DP_A[i]))
            k[i] = complex(field(t + _DP_C[i] * h, yi))
        y_new = y + h * sum(b * k[j] for j, b in enumerate(_DP_B5))
        err = abs(h * sum(e * k[j] for j, e in enumerate(_DP_E)))
        scale = rel_tol * max(abs(y), abs(y_new)) + abs_tol
        ratio = err / scale if scale > 0 else math.inf

        if not math.isfinite(ratio):
            rejected += 1
            h *= 0.25
            continue
        if ratio <= 1.0:
            if guard is not None and not guard(t + h, y_new):
                rejected += 1
                if h < 4.0 * hmin:
                    truncated, reason = True, "guard stop"
                    break
                h *= 0.5
                continue
            t += h
            y = y_new
            ts.append(t)
            ys.append(y)
            k[0] = k[6]  # FSAL
            accepted += 1
            last_err = err
            # PI step control.
            fac = 0.9 * (ratio + 1e-16) ** -0.117 * (err_prev + 1e-16) ** 0.04
            err_prev = ratio + 1e-16
            h *= min(5.0, max(0.2, fac))
        else:
            rejected += 1
            h *= max(0.2, 0.9 * ratio ** -0.2)
    else:
        truncated, reason = True, "max step count reached"

    return OdePath(
        t=np.asarray(ts),
        y=np.asarray(ys),
        accepted=accepted,
        rejected=rejected,
        err_estimate=last_err,
        truncated=truncated,
        truncation_reason=reason,
    )


def _newton(eval_fn, target, z, tol, max_iter):
    """Plain Newton iteration; returns (solution, residual) or (None, residual).

    Acceptance is relative for large targets: |f(z) - target| must drop
    below tol * max(1, |target|).
    """
    res = math.inf
    goal = tol * max(1.0, abs(target))
    for _ in range(max_iter):
        val, der = eval_fn(z)
        res = abs(val - target)
        if res < goal:
            return z, res
        if der == 0 or not math.isfinite(abs(der)):
            return None, res
        step = (val - target) / der
        if not math.isfinite(abs(step)):
            return None, res
        z = z - step
    val, _ = eval_fn(z)
    res = abs(val - target)
    return (z, res) if res < goal else (None, res)


def newton_continuation(
    eval_fn: Callable[[complex], tuple[complex, complex]],
    targets: Sequence[complex],
    seed: complex,
    tol: float = 1e-12,
    max_iter: int = 30,
    max_depth: int = 48,
) -> list[complex]:
    """Track solutions of eval(z) = target along an ordered target path.

    Each target is solved by Newton iteration seeded at the previous
    solution.  On divergence the path segment from the last good target is
    bisected (recursively, up to ``max_depth``), which handles targets that
    pass near critical values where Newton basins shrink.
    """
    if len(targets) == 0:
        raise ValueError("targets must be nonempty")
    z = complex(seed)
    out: list[complex] = []
    val0, _ = eval_fn(z)
    prev_target = val0
    for idx, target in enumerate(targets):
        target = complex(target)
        sol, res = _newton(eval_fn, target, z, tol, max_iter)
        if sol is None:
            sol = _bisect_segment(eval_fn, prev_target, target, z, tol, max_iter, max_depth)
            if sol is None:
                raise ContinuationError(
                    f"continuation diverged at target index {idx}",
                    index=idx,
                    residual=res,
                )
        z = sol
        out.append(z)
        prev_target = target
    return out


def _bisect_segment(eval_fn, a, b, z, tol, max_iter, depth):
    """Reach target b from the solution at target a by path bisection."""
    if depth <= 0:
        return None
    mid = 0.5 * (a + b)
    sol_mid, _ = _newton(eval_fn, mid, z, tol, max_iter)
    if sol_mid is None:
        sol_mid = _bisect_segment(eval_fn, a, mid, z, tol, max_iter, depth - 1)
        if sol_mid is None:
            return None
    sol, _ = _newton(eval_fn, b, sol_mid, tol, max_iter)
    if sol is not None:
        return sol
    return _bisect_segment(eval_fn, mid, b, sol_mid, tol, max_iter, depth - 1)
