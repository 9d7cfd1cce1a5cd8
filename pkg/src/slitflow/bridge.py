"""Conjugation of the chordal spiral flow to a radial flow.

The Moebius map T z = (z - beta)/(z - conj beta) sends the upper
half-plane to the disc and beta to 0.  Under T the spiral-case chordal
flow becomes a radial flow whose anchors are the images T(k_j), with
weights proportional to 8 b_j (Im beta)^2 |B| / (|beta - k_j|^4 cos psi)
(summing to 1) and rotation rate tan psi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chordal import SpiralCase
from .configs import ChordalConfig, RadialConfig
from .errors import DomainError
from .numerics import principal_arg
from .radial import RadialSpiralData

__all__ = [
    "HalfPlaneToDisc",
    "moebius_apply",
    "moebius_inverse",
    "chordal_to_radial",
    "verify_correspondence",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class HalfPlaneToDisc:
    beta: complex

    def __post_init__(self):
        if self.beta.imag <= 0:
            raise DomainError("requires Im beta > 0")


def moebius_apply(m: HalfPlaneToDisc, z):
    z = np.asarray(z, dtype=complex)
    if np.any(z == np.conj(m.beta)):
        raise DomainError("pole of the Moebius map")
    out = (z - m.beta) / (z - np.conj(m.beta))
    return complex(out) if out.ndim == 0 else out


def moebius_inverse(m: HalfPlaneToDisc, w):
    w = np.asarray(w, dtype=complex)
    if np.any(w == 1.0):
        raise DomainError("pole of the inverse Moebius map")
    out = (m.beta - w * np.conj(m.beta)) / (1.0 - w)
    return complex(out) if out.ndim == 0 else out


def chordal_to_radial(case: SpiralCase, config: ChordalConfig) -> RadialConfig:
    """Transport a spiral-case configuration to the disc.

    Anchors are the images of the driving points, sorted by angle; the
    transported weights sum to 1 and the rotation rate is tan(psi).
    """
    if not isinstance(case, SpiralCase):
        raise DomainError("only the spiral case conjugates to a radial flow")
    m = HalfPlaneToDisc(case.beta)
    k = np.asarray(config.k)
    b = np.asarray(config.b)
    anchors = moebius_apply(m, k.astype(complex))
    theta = np.mod(principal_arg(anchors), _TWO_PI)
    weights = (
        8.0 * b * case.beta.imag**2 * abs(case.B)
        / (np.abs(case.beta - k) ** 4 * math.cos(case.psi))
    )
    assert abs(weights.sum() - 1.0) < 1e-9, "transported weights must sum to 1"
    order = np.argsort(theta)
    return RadialConfig(
        theta=tuple(theta[order]), b=tuple(weights[order]), a=math.tan(case.psi)
    )


def verify_correspondence(
    case: SpiralCase, radial_data: RadialSpiralData, m: HalfPlaneToDisc
) -> float:
    """Hausdorff distance between {T(lambda_j)}u{1} and the radial critical set.

    The poles of h (including the one at infinity, which T sends to 1)
    must map exactly onto the critical circle points of the transported
    radial flow.
    """
    transported = np.concatenate(
        [moebius_apply(m, np.asarray(case.lambdas, dtype=complex)), [1.0 + 0j]]
    )
    xi = radial_data.xi
    d = np.abs(transported[:, None] - xi[None, :])
    hausdorff = float(max(d.min(axis=1).max(), d.min(axis=0).max()))
    return hausdorff
