"""Command line interface and experiment orchestration.

An experiment is a single JSON document selecting a mode (radial, chordal,
bridge or verify), a driving configuration, a time grid and optional
oracle sampling.  ``slitflow run`` writes traces, boundary samples, check
and oracle reports, a deterministic SVG and a PNG figure; ``slitflow
verify`` runs the checks only.  Exit code 0 means every requested check
passed and no curve errored.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import bridge as bridge_mod
from . import chordal as ch
from . import oracle as oracle_mod
from . import radial as rad
from .configs import ChordalConfig, RadialConfig
from .errors import ConfigError, SlitflowError
from .polyroots import build_chordal_P, classify_roots

OUT_ENV_VAR = "SLITFLOW_OUT"

__all__ = ["ExperimentSpec", "load_spec", "run_experiment", "main"]


@dataclasses.dataclass(frozen=True)
class ExperimentSpec:
    mode: str
    radial: RadialConfig | None
    chordal: ChordalConfig | None
    t_grid: np.ndarray
    oracle_count: int
    oracle_seed: int
    oracle_times: tuple[float, ...]
    trace_tol: float
    oracle_tol: float
    out_dir: str | None
    debug_perturb: dict | None


def _build_grid(payload, mode: str, errors: list[str]) -> np.ndarray:
    kind = payload.get("kind", "linear")
    count = payload.get("count", 50)
    if not isinstance(count, int) or count < 2:
        errors.append("t_grid.count: must be an integer >= 2")
        count = 2
    default_end = 0.99 if mode != "radial" else 2.0
    t_end = float(payload.get("t_end", default_end))
    if t_end <= 0:
        errors.append("t_grid.t_end: must be positive")
        t_end = default_end
    if mode != "radial" and t_end >= 1:
        errors.append("t_grid.t_end: must be below 1 for half-plane flows")
        t_end = 0.99
    if kind == "linear":
        return np.linspace(0.0, t_end, count)
    if kind == "endpoint":
        # linear ramp plus geometric refinement 1 - 2^-m toward t = 1
        levels = int(payload.get("levels", 12))
        levels = min(max(levels, 1), 20)
        base = np.linspace(0.0, min(t_end, 0.75), count)
        extra = 1.0 - 2.0 ** -np.arange(3, 3 + levels, dtype=float)
        grid = np.unique(np.concatenate([base, extra[extra <= t_end]]))
        return grid
    errors.append(f"t_grid.kind: unknown kind {kind!r}")
    return np.linspace(0.0, t_end, count)


def load_spec(path: str) -> ExperimentSpec:
    """Parse and validate an experiment document, reporting all problems."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: not valid JSON: {exc}") from exc
    errors: list[str] = []
    mode = doc.get("mode")
    if mode not in ("radial", "chordal", "bridge", "verify"):
        errors.append(f"mode: expected radial|chordal|bridge|verify, got {mode!r}")
        mode = "verify"

    radial_cfg = chordal_cfg = None
    if "radial" in doc:
        try:
            r = doc["radial"]
            radial_cfg = RadialConfig(
                theta=tuple(r["theta"]), b=tuple(r["b"]), a=float(r.get("a", 0.0))
            )
        except (ConfigError, KeyError, TypeError, ValueError) as exc:
            errors.append(f"radial: {exc}")
    if "chordal" in doc:
        try:
            c = doc["chordal"]
            chordal_cfg = ChordalConfig(k=tuple(c["k"]), b=tuple(c["b"]))
        except (ConfigError, KeyError, TypeError, ValueError) as exc:
            errors.append(f"chordal: {exc}")
    if mode == "radial" and radial_cfg is None:
        errors.append("radial: section required for mode=radial")
    if mode in ("chordal", "bridge") and chordal_cfg is None:
        errors.append("chordal: section required for this mode")
    if mode == "verify" and radial_cfg is None and chordal_cfg is None:
        errors.append("verify: needs a radial or chordal section")

    grid_mode = "radial" if (mode == "radial" or (mode == "verify" and chordal_cfg is None)) else "chordal"
    t_grid = _build_grid(doc.get("t_grid", {}), grid_mode, errors)

    osec = doc.get("oracle", {})
    oracle_count = int(osec.get("count", 0))
    oracle_seed = int(osec.get("seed", 0))
    oracle_times = tuple(float(x) for x in osec.get("times", (0.1, 0.3, 0.5, 0.7, 0.9)))
    if oracle_count < 0:
        errors.append("oracle.count: must be nonnegative")

    tols = doc.get("tolerances", {})
    trace_tol = float(tols.get("trace", 1e-8))
    oracle_tol = float(tols.get("oracle", 1e-6))
    if trace_tol <= 0 or oracle_tol <= 0:
        errors.append("tolerances: must be positive")

    perturb = doc.get("debug_perturb")
    if perturb is not None and ("attr" not in perturb or "amount" not in perturb):
        errors.append("debug_perturb: needs attr and amount")

    if errors:
        raise ConfigError(f"{path}: " + "; ".join(errors))
    return ExperimentSpec(
        mode=mode, radial=radial_cfg, chordal=chordal_cfg, t_grid=t_grid,
        oracle_count=oracle_count, oracle_seed=oracle_seed,
        oracle_times=oracle_times, trace_tol=trace_tol, oracle_tol=oracle_tol,
        out_dir=doc.get("out"), debug_perturb=perturb,
    )


# --------------------------------------------------------------------------
# Artifact export.

def _atomic_write(path: str, data: str | bytes):
    mode = "wb" if isinstance(data, bytes) else "w"
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, mode) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def export_traces_csv(curves: dict, path: str):
    """curves maps curve_id -> list of samples with t/point/residual fields."""
    if not curves or all(len(v) == 0 for v in curves.values()):
        raise SlitflowError("no samples to export")
    lines = ["curve_id,t,re,im,residual"]
    for cid in curves:
        for s in curves[cid]:
            lines.append(
                f"{cid},{s.t!r},{s.point.real!r},{s.point.imag!r},{s.residual!r}"
            )
    _atomic_write(path, "\n".join(lines) + "\n")


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def render_svg(curves: dict, outline: str, markers: list[complex], path: str):
    """Hand-assembled SVG: one polyline per curve, outline, end markers.

    Output is a pure function of its inputs, so identical runs are
    byte-identical.
    """
    if not curves:
        raise SlitflowError("no curves to render")
    pts = np.concatenate(
        [np.array([s.point for s in v]) for v in curves.values() if len(v)]
    )
    all_x = np.concatenate([pts.real, [m.real for m in markers]])
    all_y = np.concatenate([pts.imag, [m.imag for m in markers]])
    if outline == "circle":
        all_x = np.concatenate([all_x, [-1, 1]])
        all_y = np.concatenate([all_y, [-1, 1]])
    pad = 0.1 * max(all_x.max() - all_x.min(), all_y.max() - all_y.min(), 1.0)
    x0, x1 = all_x.min() - pad, all_x.max() + pad
    y0, y1 = all_y.min() - pad, all_y.max() + pad
    w, h = x1 - x0, y1 - y0
    scale = 600.0 / max(w, h)

    def X(x):
        return _fmt((x - x0) * scale)

    def Y(y):
        return _fmt((y1 - y) * scale)  # flip so the upper half-plane is up

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w * scale)}" '
        f'height="{_fmt(h * scale)}" viewBox="0 0 {_fmt(w * scale)} {_fmt(h * scale)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if outline == "circle":
        out.append(
            f'<circle cx="{X(0)}" cy="{Y(0)}" r="{_fmt(scale)}" '
            'fill="none" stroke="black" stroke-width="1"/>'
        )
    else:
        out.append(
            f'<line x1="{X(x0)}" y1="{Y(0)}" x2="{X(x1)}" y2="{Y(0)}" '
            'stroke="black" stroke-width="1"/>'
        )
    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]
    for i, cid in enumerate(curves):
        coords = " ".join(
            f"{X(s.point.real)},{Y(s.point.imag)}" for s in curves[cid]
        )
        color = palette[i % len(palette)]
        out.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            'stroke-width="1.5"/>'
        )
    for m in markers:
        out.append(
            f'<circle cx="{X(m.real)}" cy="{Y(m.imag)}" r="4" fill="black"/>'
        )
    out.append("</svg>")
    _atomic_write(path, "\n".join(out) + "\n")


def render_png(curves: dict, outline: str, markers: list[complex], path: str):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    if outline == "circle":
        th = np.linspace(0, 2 * math.pi, 400)
        ax.plot(np.cos(th), np.sin(th), "k-", lw=0.8)
    else:
        ax.axhline(0.0, color="k", lw=0.8)
    for cid, samples in curves.items():
        p = np.array([s.point for s in samples])
        ax.plot(p.real, p.imag, lw=1.2, label=str(cid))
    for m in markers:
        ax.plot([m.real], [m.imag], "ko", ms=5)
    ax.set_aspect("equal")
    ax.legend(loc="best", fontsize=8)
    fig.savefig(path, dpi=120)
    plt.close(fig)


# --------------------------------------------------------------------------
# Check suites.

class _Checks:
    def __init__(self):
        self.items = []

    def add(self, name, passed, value=None, threshold=None):
        self.items.append(
            {
                "name": name,
                "passed": bool(passed),
                "value": None if value is None else float(value),
                "threshold": None if threshold is None else float(threshold),
            }
        )

    @property
    def all_passed(self):
        return all(i["passed"] for i in self.items)


def _perturbed(case, perturb):
    if perturb is None:
        return case
    attr, amount = perturb["attr"], float(perturb["amount"])
    cur = getattr(case, attr)
    if isinstance(cur, tuple):
        new = (cur[0] + amount,) + cur[1:]
    else:
        new = cur + amount
    return dataclasses.replace(case, **{attr: new})


def _radial_curves(data, config, t_grid, tol):
    curves, failures = {}, []
    for k in range(config.n):
        try:
            curves[f"slit_{k}"] = rad.radial_trace(data, config, k, t_grid, tol=tol)
        except SlitflowError as exc:
            failures.append(f"slit_{k}: {exc}")
    return curves, failures


def _run_radial(spec, checks, rng, fast):
    config = spec.radial
    data = rad.compute_spiral_data(config)
    curves, failures = _radial_curves(data, config, spec.t_grid, spec.trace_tol)

    checks.add(
        "exponent_sum_rule",
        abs(data.alpha.sum() + math.cos(data.half_arg)) < 1e-10,
        value=abs(data.alpha.sum() + math.cos(data.half_arg)), threshold=1e-10,
    )
    npts = 1000 if fast else 10000
    z = np.sqrt(rng.uniform(0, 1, npts)) * 0.999 * np.exp(1j * rng.uniform(0, 2 * math.pi, npts))
    vals = rad.spirallike_functional(data, z)
    checks.add("spirallike_positive", np.min(vals) > 0, value=np.min(vals), threshold=0.0)
    max_res = max((s.residual for c in curves.values() for s in c), default=0.0)
    checks.add("trace_residuals", max_res < spec.trace_tol, value=max_res,
               threshold=spec.trace_tol)
    # angle diagnostics need samples clustered at t = 0, independent of the
    # artifact grid
    diag_grid = np.concatenate([[0.0], np.geomspace(1e-6, 0.2, 25)])
    for k in range(config.n):
        samples = rad.radial_trace(data, config, k, diag_grid, tol=spec.trace_tol)
        diag = rad.trace_diagnostics(samples, config.anchors[k])
        checks.add(
            f"slit_{k}_start_angle",
            abs(diag.start_angle - math.pi / 2) < 0.05,
            value=diag.start_angle, threshold=0.05,
        )
    if spec.oracle_count and not fast:
        zs = 0.8 * np.sqrt(rng.uniform(0, 1, spec.oracle_count)) * np.exp(
            1j * rng.uniform(0, 2 * math.pi, spec.oracle_count)
        )
        report = oracle_mod.compare(
            lambda z_, t_: z_,
            lambda z_, t_: _radial_composed(data, config, z_, t_),
            zs, [t for t in spec.oracle_times if t <= spec.t_grid[-1] or t <= 1.0],
        )
        checks.add("oracle_composition", report.max_abs_err < spec.oracle_tol,
                   value=report.max_abs_err, threshold=spec.oracle_tol)
    else:
        report = None

    markers = [0j]
    return curves, failures, report, "circle", markers, _radial_boundary(data)


def _radial_composed(data, config, z, t):
    path = oracle_mod.radial_ode_solve(config, z, t)
    if path.truncated:
        return path
    return rad.radial_flow(data, config, path.y_final, t)


def _radial_boundary(data):
    rho = np.sort(data.rho)
    thetas = []
    for i in range(len(rho)):
        lo = rho[i]
        hi = rho[(i + 1) % len(rho)] + (2 * math.pi if i + 1 == len(rho) else 0.0)
        thetas.append(np.linspace(lo + 1e-3, hi - 1e-3, 80))
    grid = np.concatenate(thetas)
    vals, profile = rad.phi_boundary_image(data, grid)
    return {
        "param": grid.tolist(),
        "re": vals.real.tolist(),
        "im": vals.imag.tolist(),
        "profile": profile.tolist(),
    }


def _chordal_case(spec):
    config = spec.chordal
    structure = classify_roots(build_chordal_P(config), config)
    case = ch.build_case(config, structure)
    return config, _perturbed(case, spec.debug_perturb)


def _run_chordal(spec, checks, rng, fast):
    config, case = _chordal_case(spec)
    curves, failures = {}, []
    for j in range(config.n):
        try:
            curves[f"slit_{j}"] = ch.chordal_trace(case, j, spec.t_grid, tol=spec.trace_tol)
        except SlitflowError as exc:
            failures.append(f"slit_{j}: {exc}")

    _chordal_invariant_checks(case, checks)
    max_res = max((s.residual for c in curves.values() for s in c), default=0.0)
    checks.add("trace_residuals", max_res < spec.trace_tol, value=max_res,
               threshold=spec.trace_tol)
    # angle diagnostics use a dedicated grid clustered at both ends
    diag_grid = np.concatenate(
        [[0.0], np.geomspace(1e-6, 0.5, 25), 1.0 - np.geomspace(0.4, 1e-6, 25)]
    )
    for j in range(config.n):
        samples = ch.chordal_trace(case, j, diag_grid, tol=spec.trace_tol)
        rep = ch.intersection_angles(case, j, samples)
        checks.add(f"slit_{j}_start_angle",
                   abs(rep.start_angle - math.pi / 2) < 0.05,
                   value=rep.start_angle, threshold=0.05)
        if isinstance(case, (ch.DoubleCase, ch.TripleCase)):
            checks.add(f"slit_{j}_end_angle",
                       abs(rep.end_angle - rep.expected_end_angle) < 0.05,
                       value=rep.end_angle, threshold=0.05)
    if isinstance(case, ch.SpiralCase):
        npts = 1000 if fast else 10000
        z = rng.uniform(-4, 4, npts) * config.scale + 1j * rng.uniform(1e-3, 4, npts) * config.scale
        vals = ch.spiral_functional(case, z)
        checks.add("spirallike_positive", np.min(vals) > 0, value=np.min(vals),
                   threshold=0.0)

    if spec.oracle_count and not fast:
        zs = rng.uniform(-2, 2, spec.oracle_count) * config.scale + 1j * (
            0.2 + rng.uniform(0, 2, spec.oracle_count) * config.scale
        )
        report = oracle_mod.compare(
            lambda z_, t_: ch.chordal_w_explicit(case, z_, t_),
            lambda z_, t_: oracle_mod.chordal_ode_solve(config, z_, t_),
            zs, spec.oracle_times,
        )
        checks.add("oracle_w_explicit", report.max_abs_err < spec.oracle_tol,
                   value=report.max_abs_err, threshold=spec.oracle_tol)
    else:
        report = None

    markers = [ch.attraction_point(case)]
    return curves, failures, report, "line", markers, _chordal_boundary(case, config)


def _chordal_invariant_checks(case, checks):
    if isinstance(case, ch.SpiralCase):
        resid = abs(2 * math.cos(case.psi) - sum(case.a) - 1 / abs(case.B))
        checks.add("coefficient_identity", resid < 1e-9, value=resid, threshold=1e-9)
    elif isinstance(case, ch.DistinctRealCase):
        resid = abs(case.B1 + case.B2 + sum(case.A) - 1.0)
        checks.add("coefficient_sum", resid < 1e-9, value=resid, threshold=1e-9)
    else:
        resid = abs(case.c1 + sum(case.A) - 1.0)
        checks.add("coefficient_sum", resid < 1e-9, value=resid, threshold=1e-9)
    scale = 1.0 + max(abs(x) for x in case.k)
    worst = max(abs(ch.h_derivative(case, kk + 1e-8j)) for kk in case.k)
    checks.add("critical_points", worst < 1e-6 * scale, value=worst,
               threshold=1e-6 * scale)


def _chordal_boundary(case, config):
    pts = sorted(list(case.lambdas) + list(case.k))
    if isinstance(case, ch.DistinctRealCase):
        pts = sorted(pts + [case.rho1, case.rho2])
    if isinstance(case, (ch.DoubleCase, ch.TripleCase)):
        pts = sorted(pts + [case.rho0])
    lo, hi = pts[0] - 2 * config.scale, pts[-1] + 2 * config.scale
    grid = np.linspace(lo, hi, 600)
    keep = np.ones(len(grid), dtype=bool)
    for p in pts:
        keep &= np.abs(grid - p) > 1e-3
    grid = grid[keep]
    vals, profile = ch.h_boundary_image(case, grid)
    return {
        "param": grid.tolist(),
        "re": vals.real.tolist(),
        "im": vals.imag.tolist(),
        "profile": None if profile is None else profile.tolist(),
    }


def _run_bridge(spec, checks, rng, fast):
    config, case = _chordal_case(spec)
    if not isinstance(case, ch.SpiralCase):
        raise ConfigError("bridge mode requires a spiral-case chordal config")
    rc = bridge_mod.chordal_to_radial(case, config)
    rdata = rad.compute_spiral_data(rc)
    m = bridge_mod.HalfPlaneToDisc(case.beta)

    checks.add("weight_sum", abs(sum(rc.b) - 1.0) < 1e-9,
               value=abs(sum(rc.b) - 1.0), threshold=1e-9)
    resid = bridge_mod.verify_correspondence(case, rdata, m)
    checks.add("critical_point_correspondence", resid < 1e-8, value=resid,
               threshold=1e-8)
    worst = 0.0
    for t in (0.2, 0.4, 0.6, 0.8, 0.9):
        tau = -0.5 * math.log1p(-t)
        taup = tau * math.cos(case.psi) / abs(case.B)
        for w in (0.2 + 0.1j, -0.3 + 0.4j, 0.5j, -0.1 - 0.3j, 0.4 - 0.2j):
            lhs = rad.radial_flow(rdata, rc, w, taup)
            inner = bridge_mod.moebius_inverse(m, np.exp(-1j * rc.a * taup) * w)
            rhs = bridge_mod.moebius_apply(
                m, ch.chordal_flow(case, inner * math.sqrt(1.0 - t), t)
            )
            worst = max(worst, abs(lhs - rhs))
    checks.add("conjugated_flow", worst < 1e-5, value=worst, threshold=1e-5)

    curves = {}
    for j in range(config.n):
        samples = ch.chordal_trace(case, j, spec.t_grid, tol=spec.trace_tol)
        curves[f"slit_{j}_disc"] = [
            ch.ChordalTraceSample(
                t=s.t, point=bridge_mod.moebius_apply(m, s.point)
                if s.point != np.conj(case.beta) else 0j,
                residual=s.residual,
            )
            for s in samples
        ]
    return curves, [], None, "circle", [0j], None


def run_experiment(spec: ExperimentSpec, out_dir=None, checks_mode="all", seed=None):
    """Execute one experiment; returns (summary dict, exit code)."""
    fast = checks_mode == "fast"
    rng = np.random.default_rng(spec.oracle_seed if seed is None else seed)
    checks = _Checks()
    mode = spec.mode
    if mode == "verify":
        mode = "radial" if spec.radial is not None else "chordal"
        out_dir = None

    if mode == "radial":
        curves, failures, report, outline, markers, boundary = _run_radial(
            spec, checks, rng, fast
        )
    elif mode == "chordal":
        curves, failures, report, outline, markers, boundary = _run_chordal(
            spec, checks, rng, fast
        )
    elif mode == "bridge":
        curves, failures, report, outline, markers, boundary = _run_bridge(
            spec, checks, rng, fast
        )
    else:
        raise ConfigError(f"unknown mode {mode}")

    summary = {
        "mode": spec.mode,
        "checks": checks.items,
        "curve_failures": failures,
        "oracle_max_abs_err": None if report is None else report.max_abs_err,
        "oracle_truncated": None if report is None else report.truncated_count,
        "passed": checks.all_passed and not failures,
    }
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        export_traces_csv(curves, os.path.join(out_dir, "traces.csv"))
        render_svg(curves, outline, markers, os.path.join(out_dir, "figure.svg"))
        render_png(curves, outline, markers, os.path.join(out_dir, "figure.png"))
        if boundary is not None:
            lines = ["curve_id,t,re,im,residual"]
            for p, re_, im_ in zip(boundary["param"], boundary["re"], boundary["im"]):
                lines.append(f"boundary,{p!r},{re_!r},{im_!r},0.0")
            _atomic_write(os.path.join(out_dir, "boundary.csv"), "\n".join(lines) + "\n")
        if report is not None:
            rep_doc = {
                "max_abs_err": report.max_abs_err,
                "truncated_count": report.truncated_count,
                "samples": [
                    {
                        "z": [r.z.real, r.z.imag], "t": r.t,
                        "abs_err": r.abs_err, "truncated": r.truncated,
                    }
                    for r in report.records
                ],
            }
            _atomic_write(
                os.path.join(out_dir, "oracle.json"), json.dumps(rep_doc, indent=1)
            )
        _atomic_write(
            os.path.join(out_dir, "checks.json"), json.dumps(summary, indent=1)
        )
    return summary, (0 if summary["passed"] else 1)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="slitflow",
        description="Explicit multi-slit Loewner flows: run experiments and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run an experiment and write artifacts")
    p_run.add_argument("spec")
    p_run.add_argument("--out", default=None, help="output directory")
    p_run.add_argument("--checks", choices=("all", "fast"), default="all")
    p_run.add_argument("--seed", type=int, default=None)
    p_ver = sub.add_parser("verify", help="run checks only, no artifacts")
    p_ver.add_argument("spec")
    p_ver.add_argument("--checks", choices=("all", "fast"), default="all")
    p_ver.add_argument("--seed", type=int, default=None)
    args = parser.parse_args(argv)

    try:
        spec = load_spec(args.spec)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "run":
        out = args.out or spec.out_dir or os.environ.get(OUT_ENV_VAR) or "."
    else:
        out = None
    try:
        summary, code = run_experiment(
            spec, out_dir=out, checks_mode=args.checks, seed=args.seed
        )
    except SlitflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for item in summary["checks"]:
        state = "PASS" if item["passed"] else "FAIL"
        extra = "" if item["value"] is None else f" (value {item['value']:.3e})"
        print(f"[{state}] {item['name']}{extra}")
    for f in summary["curve_failures"]:
        print(f"[FAIL] curve: {f}")
    print("result:", "pass" if summary["passed"] else "fail")
    return code


if __name__ == "__main__":
    sys.exit(main())
