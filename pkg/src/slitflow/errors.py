"""Exception types shared across the package."""


class SlitflowError(Exception):
    """Base class for all package errors."""


class ConfigError(SlitflowError, ValueError):
    """Invalid driving configuration (ordering, positivity, coincident anchors)."""


class DomainError(SlitflowError, ValueError):
    """Evaluation requested outside the map's domain."""


class ClassificationError(SlitflowError):
    """Root clustering is ambiguous at the requested tolerance."""


class ContinuationError(SlitflowError):
    """Newton continuation failed to track a target path.

    Attributes
    ----------
    index : index of the first target that could not be reached
    residual : last Newton residual seen before giving up
    """

    def __init__(self, message, index=None, residual=None):
        super().__init__(message)
        self.index = index
        self.residual = residual


class SeedingError(SlitflowError):
    """Could not seed a trace off its critical starting point."""


class TruncatedError(SlitflowError):
    """An ODE integration was truncated before the requested time."""
