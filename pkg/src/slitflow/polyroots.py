"""Auxiliary polynomials of the two flows, root finding and root
classification.

The chordal case is selected by the root structure of the real polynomial

    P(z) = z * prod(z - k_j) + sum_j 4 b_j prod_{i != j}(z - k_i),

which always has n-1 real roots interlacing the k's; the remaining two are
either a conjugate pair, two distinct reals, or merge into a double/triple
root.  The radial case uses the complex polynomial Q - i*a*R built from the
circle anchors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .configs import ChordalConfig, RadialConfig
from .errors import ClassificationError, ConfigError

__all__ = [
    "RealPolynomial",
    "ComplexPolynomial",
    "ComplexPair",
    "DistinctReal",
    "DoubleRoot",
    "TripleRoot",
    "build_chordal_P",
    "build_radial_QiaR",
    "find_roots",
    "classify_roots",
    "default_cluster_tol",
]


@dataclass(frozen=True)
class RealPolynomial:
    """Real coefficients in ascending degree order."""

    coeffs: np.ndarray

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=float)
        if c.size == 0 or c[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return np.polyval(self.coeffs[::-1], z)

    def derivative(self) -> "RealPolynomial":
        return RealPolynomial(np.polyder(self.coeffs[::-1])[::-1])


@dataclass(frozen=True)
class ComplexPolynomial:
    """Complex coefficients in ascending degree order."""

    coeffs: np.ndarray

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=complex)
        if c.size == 0 or c[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return np.polyval(self.coeffs[::-1], z)


# --------------------------------------------------------------------------
# Root-structure variants of the chordal polynomial P.

@dataclass(frozen=True)
class ComplexPair:
    beta: complex                 # the root in the upper half-plane
    lambdas: tuple[float, ...]    # interlacing real roots
    cluster_tol: float


@dataclass(frozen=True)
class DistinctReal:
    rho1: float                   # the positive-residue root (attraction point)
    rho2: float
    lambdas: tuple[float, ...]
    ordering_case: str            # "below" | "above" | "gap"
    cluster_tol: float


@dataclass(frozen=True)
class DoubleRoot:
    rho0: float
    lambdas: tuple[float, ...]
    position_case: str            # "left" | "gap_below" | "gap_above" | "right"
    cluster_tol: float


@dataclass(frozen=True)
class TripleRoot:
    rho0: float                   # coincides with the interlacing root of gap mu
    mu: int                       # index of the gap (k_mu, k_{mu+1}), 0-based
    lambdas: tuple[float, ...]    # the remaining interlacing roots
    cluster_tol: float


RootStructure = ComplexPair | DistinctReal | DoubleRoot | TripleRoot


def default_cluster_tol(config: ChordalConfig) -> float:
    return 1e-8 * config.scale


# --------------------------------------------------------------------------
# Polynomial construction.

def _poly_from_roots(roots) -> np.ndarray:
    """Monic coefficient array (ascending) with the given roots."""
    c = np.array([1.0 + 0j])
    for r in roots:
        c = np.convolve(c, np.array([-r, 1.0 + 0j]))
    return c


def build_chordal_P(config: ChordalConfig) -> RealPolynomial:
    """Coefficients of z*prod(z-k_j) + sum_j 4 b_j prod_{i!=j}(z-k_i)."""
    k = np.asarray(config.k)
    b = np.asarray(config.b)
    coeffs = np.concatenate([[0.0 + 0j], _poly_from_roots(k)])
    for j in range(config.n):
        others = np.delete(k, j)
        term = 4.0 * b[j] * _poly_from_roots(others)
        coeffs[: len(term)] += term
    return RealPolynomial(coeffs.real)


def build_radial_QiaR(config: RadialConfig) -> ComplexPolynomial:
    """Coefficients of Q - i*a*R for the circle configuration.

    Q(z) = sum_k b_k (zeta_k + z) prod_{j!=k}(zeta_j - z) and
    R(z) = prod_k (zeta_k - z).  The normalization identities for the
    constant and leading terms are asserted.
    """
    zeta = config.anchors
    if np.min(np.abs(np.subtract.outer(zeta, zeta) + np.eye(config.n))) < 1e-12:
        raise ConfigError("coincident anchors")
    b = np.asarray(config.b)
    a = config.a
    n = config.n

    def prod_excl(j):
        # prod_{i != j} (zeta_i - z), ascending coefficients
        c = np.array([1.0 + 0j])
        for i in range(n):
            if i != j:
                c = np.convolve(c, np.array([zeta[i], -1.0 + 0j]))
        return c

    coeffs = np.zeros(n + 1, dtype=complex)
    for j in range(n):
        factor = np.array([zeta[j], 1.0 + 0j])  # zeta_j + z
        term = b[j] * np.convolve(factor, prod_excl(j))
        coeffs[: len(term)] += term
    r_coeffs = np.array([1.0 + 0j])
    for i in range(n):
        r_coeffs = np.convolve(r_coeffs, np.array([zeta[i], -1.0 + 0j]))
    coeffs -= 1j * a * r_coeffs

    b_tot = config.b_total
    expect_const = (b_tot - 1j * a) * np.prod(zeta)
    expect_lead = (-1.0) ** (n - 1) * (b_tot + 1j * a)
    scale = np.max(np.abs(coeffs))
    assert abs(coeffs[0] - expect_const) < 1e-10 * scale
    assert abs(coeffs[-1] - expect_lead) < 1e-10 * scale
    return ComplexPolynomial(coeffs)


# --------------------------------------------------------------------------
# Root finding and classification.

def find_roots(poly: RealPolynomial | ComplexPolynomial, tol: float = 1e-8):
    """All complex roots via the companion matrix, polished by Newton.

    Residuals are validated against tol * ||coeffs|| (scaled by the root
    magnitude for roots outside the unit disc).
    """
    if poly.degree < 1:
        raise ValueError("degree must be >= 1")
    c_desc = np.asarray(poly.coeffs, dtype=complex)[::-1]
    roots = np.roots(c_desc)
    d_desc = np.polyder(c_desc)
    for _ in range(2):
        p = np.polyval(c_desc, roots)
        dp = np.polyval(d_desc, roots)
        step = np.where(np.abs(dp) > 1e-300, p / np.where(dp == 0, 1, dp), 0)
        # Newton polishing helps only simple roots; cap the step so clusters
        # of multiple roots are not thrown around.
        step = np.where(np.abs(step) < tol * 10, step, 0)
        roots = roots - step
    norm = np.linalg.norm(poly.coeffs)
    resid = np.abs(np.polyval(c_desc, roots))
    bound = tol * norm * np.maximum(1.0, np.abs(roots)) ** poly.degree
    if np.any(resid > bound):
        raise ArithmeticError(
            f"root finding did not converge: max residual {resid.max():.3e} "
            f"exceeds bound {bound.min():.3e}"
        )
    return roots


def _residue_sign(P: RealPolynomial, k: np.ndarray, root: float) -> float:
    """Sign of the partial-fraction residue of prod(z-k_j)/P(z) at a simple root."""
    dP = P.derivative()(root)
    num = np.prod(root - k)
    return math.copysign(1.0, num / dP)


def classify_roots(
    poly: RealPolynomial,
    config: ChordalConfig,
    cluster_tol: float | None = None,
) -> RootStructure:
    """Cluster the roots of P and return the matching structure variant.

    Roots with |Im| < cluster_tol are snapped to the real axis; real roots
    closer than cluster_tol merge with summed multiplicity.  A pair of
    distinct roots separated by between one and two cluster tolerances is
    reported as ambiguous rather than silently resolved.
    """
    tol = default_cluster_tol(config) if cluster_tol is None else float(cluster_tol)
    k = np.asarray(config.k)
    roots = find_roots(poly, tol=1e-7)

    complex_mask = np.abs(roots.imag) >= tol
    if np.any(complex_mask):
        cplx = roots[complex_mask]
        if len(cplx) != 2:
            raise ClassificationError(f"unexpected complex root count {len(cplx)}")
        beta = cplx[np.argmax(cplx.imag)]
        if beta.imag <= 0:
            raise ClassificationError("complex roots do not form an upper/lower pair")
        lambdas = np.sort(roots[~complex_mask].real)
        _check_interlacing(lambdas, k)
        return ComplexPair(beta=complex(beta), lambdas=tuple(lambdas), cluster_tol=tol)

    real = np.sort(roots.real)
    gaps = np.diff(real)
    if np.any((gaps >= tol) & (gaps < 2 * tol)):
        raise ClassificationError(
            "root separation within [tol, 2*tol): choose a different cluster_tol"
        )
    groups: list[list[float]] = [[real[0]]]
    for r, g in zip(real[1:], gaps):
        if g < tol:
            groups[-1].append(r)
        else:
            groups.append([r])
    sizes = [len(g) for g in groups]
    centers = [float(np.mean(g)) for g in groups]

    if max(sizes) == 1:
        return _classify_distinct(poly, k, centers, tol)
    if max(sizes) == 2 and sizes.count(2) == 1:
        return _classify_double(poly, k, groups, tol)
    if max(sizes) == 3 and sizes.count(3) == 1:
        return _classify_triple(poly, k, groups, tol)
    raise ClassificationError(f"unsupported root multiplicity pattern {sizes}")


def _check_interlacing(lambdas, k):
    if len(lambdas) != len(k) - 1:
        raise ClassificationError("wrong interlacing root count")
    for j, lam in enumerate(lambdas):
        if not (k[j] < lam < k[j + 1]):
            raise ClassificationError(
                f"root {lam} does not interlace ({k[j]}, {k[j + 1]})"
            )


def _classify_distinct(poly, k, centers, tol):
    signs = [_residue_sign(poly, k, r) for r in centers]
    positive = [r for r, s in zip(centers, signs) if s > 0]
    if len(positive) != 1:
        raise ClassificationError("expected exactly one positive partial-fraction residue")
    rho1 = positive[0]
    rest = sorted(r for r in centers if r != rho1)

    if rho1 < k[0] or rho1 > k[-1]:
        # The companion extra root shares the unbounded region with rho1.
        region = [r for r in rest if (r < k[0]) == (rho1 < k[0])]
        extras = [r for r in region if r != rho1]
        if len(extras) < 1:
            raise ClassificationError("could not locate the second non-interlacing root")
        rho2 = extras[0] if rho1 < k[0] else extras[-1]
        lambdas = sorted(r for r in rest if r != rho2)
        case = "below" if rho1 < k[0] else "above"
    else:
        # rho1 sits inside a gap holding three roots: lambda, rho1, rho2.
        mu = int(np.searchsorted(k, rho1)) - 1
        in_gap = [r for r in centers if k[mu] < r < k[mu + 1]]
        if len(in_gap) != 3 or in_gap[1] != rho1:
            raise ClassificationError("gap root pattern does not match the triple layout")
        rho2 = in_gap[2]
        lambdas = sorted(r for r in centers if r not in (rho1, rho2))
        case = "gap"
    _check_interlacing(np.asarray(lambdas), k)
    return DistinctReal(
        rho1=rho1, rho2=rho2, lambdas=tuple(lambdas), ordering_case=case, cluster_tol=tol
    )


def _polish_multiple(poly, x, order):
    """One Newton step on the (order-1)-th derivative restores cluster accuracy."""
    c = np.asarray(poly.coeffs, dtype=float)[::-1]
    for _ in range(order - 1):
        c = np.polyder(c)
    d = np.polyder(c)
    val, der = np.polyval(c, x), np.polyval(d, x)
    return x - val / der if abs(der) > 1e-300 else x


def _classify_double(poly, k, groups, tol):
    rho0 = _polish_multiple(poly, float(np.mean([g for g in groups if len(g) == 2][0])), 2)
    lambdas = sorted(float(g[0]) for g in groups if len(g) == 1)
    if rho0 < k[0]:
        case = "left"
    elif rho0 > k[-1]:
        case = "right"
    else:
        mu = int(np.searchsorted(k, rho0)) - 1
        gap_lams = [lam for lam in lambdas if k[mu] < lam < k[mu + 1]]
        if len(gap_lams) != 1:
            raise ClassificationError("double root shares no gap with an interlacing root")
        case = "gap_below" if rho0 < gap_lams[0] else "gap_above"
    _check_interlacing(np.asarray(lambdas), k)
    return DoubleRoot(rho0=rho0, lambdas=tuple(lambdas), position_case=case, cluster_tol=tol)


def _classify_triple(poly, k, groups, tol):
    rho0 = _polish_multiple(poly, float(np.mean([g for g in groups if len(g) == 3][0])), 3)
    lambdas = sorted(float(g[0]) for g in groups if len(g) == 1)
    if not (k[0] < rho0 < k[-1]):
        raise ClassificationError("triple root must occupy an interlacing gap")
    mu = int(np.searchsorted(k, rho0)) - 1
    full = sorted(lambdas + [rho0])
    _check_interlacing(np.asarray(full), k)
    return TripleRoot(rho0=rho0, mu=mu, lambdas=tuple(lambdas), cluster_tol=tol)
