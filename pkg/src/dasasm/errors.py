"""Exception hierarchy shared by every module of the package."""


class DasasmError(Exception):
    """Base class for all errors raised by this package."""


class InputError(DasasmError, ValueError):
    """Malformed or out-of-domain input (bad matrix entries, even order, ...)."""


class DomainError(DasasmError, ValueError):
    """A value lies outside the domain of the requested operation.

    ``factor`` names the expression that vanished, when there is one, so
    that sampling loops can report or resample.
    """

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class DivisionByZero(DomainError, ZeroDivisionError):
    """Exact division by an exactly-zero value."""


class ResourceError(DasasmError, RuntimeError):
    """A configured size bound would be exceeded."""
