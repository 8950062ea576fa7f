"""Exception hierarchy shared by all hltcert modules."""


class HltcertError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HltcertError, ValueError):
    """An argument lies outside the mathematical domain of a function."""


class ParameterError(HltcertError, ValueError):
    """A parameter combination violates an admissibility window."""


class GridError(HltcertError, ValueError):
    """A grid specification is unusable for the requested operator."""


class QuadratureError(HltcertError, RuntimeError):
    """A quadrature did not reach the requested tolerance.

    Carries the achieved error estimate so callers can decide whether the
    value is still usable.
    """

    def __init__(self, message, value=None, achieved=None):
        super().__init__(message)
        self.value = value
        self.achieved = achieved


class SolverError(HltcertError, RuntimeError):
    """An eigensolver or linear solver failed to converge.

    ``residuals`` holds per-eigenpair residual norms when available.
    """

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals


class ConfigError(HltcertError, ValueError):
    """A run configuration file is malformed or inconsistent."""

    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location
