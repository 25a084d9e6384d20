"""Exception types shared across the package."""


class PTDError(Exception):
    """Base class for all errors raised by ptdesigns."""


class FormatError(PTDError, ValueError):
    """A data file could not be parsed or failed a load-time check."""

    def __init__(self, message, path=None, lineno=None):
        self.path = path
        self.lineno = lineno
        where = ""
        if path is not None:
            where += f"{path}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


class NotPreservedError(PTDError):
    """A group element does not map the block set of a design onto itself."""


class BoundExceededError(PTDError):
    """A configured size bound (coset index, pair count, degree) was exceeded."""


class ConstructionError(PTDError):
    """A construction precondition failed."""
