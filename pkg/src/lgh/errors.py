"""Exception types shared across the package."""


class DomainError(ArithmeticError):
    """A quotient was evaluated where its denominator sits below the domain floor.

    ``node`` points at the offending expression node, ``value`` carries the
    denominator value that triggered the error.
    """

    def __init__(self, message, node=None, value=None):
        super().__init__(message)
        self.node = node
        self.value = value


class DegeneracyError(ValueError):
    """Gram-Schmidt hit a null direction of the indefinite form."""


class ValidationError(ValueError):
    """Construction data violates a documented precondition."""


class ConstructionError(RuntimeError):
    """A constructed object failed its own consistency checks."""


class InconclusiveError(RuntimeError):
    """A verification had no in-domain sample to run on; neither pass nor fail."""


class ConfigError(ValueError):
    """Malformed run configuration; ``field`` names the offending entry."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
