"""Exception hierarchy for the sortkern package."""


class SortkernError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SortkernError):
    """Invalid configuration or argument values."""


class DimensionMismatchError(SortkernError):
    """Operands have incompatible dimensions."""


class CapExceededError(ConfigError):
    """A factorial-cost mode or grid construction exceeds its configured cap."""


class DuplicateOrbitError(SortkernError):
    """A design contains two points in the same permutation orbit where
    distinct orbits are required for positive definiteness."""


class FactorizationError(SortkernError):
    """Symmetric positive-definite factorization failed, even at maximum
    diagonal jitter."""


class NumericalError(SortkernError):
    """A numerical routine produced an unusable result (non-convergence,
    residual check failure, nonpositive values where positives are required)."""
