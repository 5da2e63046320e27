"""Exception types shared across the package."""


class UQGraphError(Exception):
    """Base class for all library-specific errors."""


class NonPrimeError(UQGraphError):
    """The requested characteristic is not a prime number."""


class EvenCharacteristicError(UQGraphError):
    """Characteristic 2 is rejected; only odd prime powers are supported."""


class TooLargeError(UQGraphError):
    """The requested object exceeds the configured size bound."""


class DivisionByZeroError(UQGraphError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class DimensionMismatchError(UQGraphError, ValueError):
    """Points of different dimensions were combined."""


class DimensionTooSmallError(UQGraphError, ValueError):
    """Graphs and quadrances need dimension at least 2."""


class IOFailureError(UQGraphError):
    """Writing to the supplied sink failed."""


class NoSlopeExistsError(UQGraphError):
    """Exhaustive search found no slope a with a**2 + 1 a nonsquare."""


class NotNonsquareError(UQGraphError, ValueError):
    """An argument required to be a nonsquare is not one."""


class ConstructionUnavailableError(UQGraphError):
    """The line-pairing construction does not exist for this field."""


class InvalidPlanError(UQGraphError, ValueError):
    """A coloring plan violates its slope, shift, or coset requirements."""


class IncompleteColoringError(UQGraphError, ValueError):
    """A coloring does not cover every vertex of its graph."""


class DegenerateSpectrumError(UQGraphError):
    """No negative eigenvalue, so the spectral lower bound is undefined."""


class NoConvergenceError(UQGraphError):
    """The dense eigensolver failed to converge."""
