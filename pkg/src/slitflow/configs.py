"""Driving-measure configurations for the radial and chordal flows."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class RadialConfig:
    """Rotating point masses on the unit circle.

    ``theta`` are the anchor angles of the unit-circle points, strictly
    increasing in [0, 2*pi); ``b`` the positive weights; ``a`` the rotation
    rate of the whole configuration.
    """

    theta: tuple[float, ...]
    b: tuple[float, ...]
    a: float = 0.0

    def __init__(self, theta, b, a=0.0):
        theta = tuple(float(x) for x in np.atleast_1d(theta))
        b = tuple(float(x) for x in np.atleast_1d(b))
        if len(theta) == 0 or len(theta) != len(b):
            raise ConfigError("theta and b must be nonempty and equally long")
        if any(t < 0 or t >= 2 * math.pi for t in theta):
            raise ConfigError("anchor angles must lie in [0, 2*pi)")
        if any(t2 <= t1 for t1, t2 in zip(theta, theta[1:])):
            raise ConfigError("anchor angles must be strictly increasing")
        if any(w <= 0 for w in b):
            raise ConfigError("weights must be positive")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a", float(a))

    @property
    def n(self) -> int:
        return len(self.theta)

    @property
    def anchors(self) -> np.ndarray:
        """Unit-circle anchor points."""
        return np.exp(1j * np.asarray(self.theta))

    @property
    def b_total(self) -> float:
        return float(sum(self.b))


@dataclass(frozen=True)
class ChordalConfig:
    """Point masses on the real line collapsing toward the origin.

    ``k`` are strictly increasing real points; ``b`` positive weights.  The
    driving points move along k_j * sqrt(1 - t) for t in [0, 1).
    """

    k: tuple[float, ...]
    b: tuple[float, ...]

    def __init__(self, k, b):
        k = tuple(float(x) for x in np.atleast_1d(k))
        b = tuple(float(x) for x in np.atleast_1d(b))
        if len(k) == 0 or len(k) != len(b):
            raise ConfigError("k and b must be nonempty and equally long")
        if any(k2 <= k1 for k1, k2 in zip(k, k[1:])):
            raise ConfigError("k must be strictly increasing")
        if any(w <= 0 for w in b):
            raise ConfigError("weights must be positive")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return len(self.k)

    @property
    def scale(self) -> float:
        return 1.0 + max(abs(x) for x in self.k)
