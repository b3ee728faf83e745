"""Exception types raised by the library."""


class SincError(ValueError):
    """Base class for all library errors."""


class DomainError(SincError):
    """An argument lies outside the domain where the operation is defined."""


class PreconditionError(SincError):
    """A theorem hypothesis (e.g. a lower bound on n) is violated."""


class BuildError(SincError):
    """The target function could not be sampled at a Sinc node."""

    def __init__(self, message, k=None):
        super().__init__(message)
        self.k = k
