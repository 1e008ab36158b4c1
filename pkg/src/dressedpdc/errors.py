"""Exception hierarchy shared by the library and the command line tool."""


class PDCError(Exception):
    """Base class for every error raised by dressedpdc."""


class DomainError(PDCError, ValueError):
    """A physical input is outside the domain where the model is defined."""


class PhaseMatchingError(DomainError):
    """A frequency pair violates the sum rule of the requested component."""


class IntegrationError(PDCError, RuntimeError):
    """Numerical propagation failed; ``last_z`` is the last finite sample."""

    def __init__(self, message, last_z=None):
        super().__init__(message)
        self.last_z = last_z


class InsufficientGrowthError(PDCError, ValueError):
    """A trace did not grow enough to extract an asymptotic rate."""


class ScenarioError(PDCError, ValueError):
    """Scenario document failed to parse or validate."""

    def __init__(self, message, key=None, line=None):
        where = []
        if key:
            where.append(f"key '{key}'")
        if line is not None:
            where.append(f"line {line}")
        text = f"{message} ({', '.join(where)})" if where else message
        super().__init__(text)
        self.key = key
        self.line = line
