"""Exception hierarchy shared across the package."""


class DistGameError(Exception):
    """Base class for all distgame errors."""


class DomainError(DistGameError, ValueError):
    """A parameter or state violates its admissible domain."""


class IntegrationError(DistGameError):
    """The integrator produced an invalid state.

    Carries the offending time and compartment name so grid sweeps can
    tag failures with coordinates.
    """

    def __init__(self, message: str, t: float | None = None,
                 compartment: str | None = None):
        super().__init__(message)
        self.t = t
        self.compartment = compartment


class OracleError(DistGameError):
    """A verification oracle could not produce a value (e.g. no sign
    change on a bisection bracket)."""


class GridError(DistGameError):
    """A time or step size does not align with the sampling grid."""


class ConfigError(DistGameError):
    """Invalid command-line flags or configuration file."""
