"""Exception hierarchy shared by all modules.

The CLI maps these to exit codes: configuration/geometry errors -> 2,
numerical failures -> 3, resolution/packing errors -> 4.
"""


class FerronemaError(Exception):
    """Base class for all library errors."""


class ConfigurationError(FerronemaError):
    """Invalid parameters, domains, or experiment configuration."""


class GeometryError(FerronemaError):
    """Invalid spheroid, point inside a particle, overlapping particles."""


class ResolutionError(FerronemaError):
    """Grid or quadrature too coarse for the requested geometry."""


class PackingError(FerronemaError):
    """Hard-core particle placement is infeasible for the given d, D, epsilon."""


class StudyError(FerronemaError):
    """A sweep was requested with too few points or inconsistent inputs."""


class NumericalError(FerronemaError):
    """Generic numerical failure (diverging energy, ill-conditioned solve)."""


class StalledDescentError(NumericalError):
    """Line search failed to make progress; carries the last iterate."""

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class CoercivityError(NumericalError):
    """The cell-problem quadratic form lost positivity (g < 0, epsilon too large)."""
