"""Exception hierarchy shared across the package."""


class SandcastleError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SandcastleError):
    """Malformed textual input (tree DSL, proof s-expressions, JSON tables).

    ``line`` and ``column`` are 1-based when known, 0 otherwise.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"{line}:{column}: {message}"
        super().__init__(message)


class RewriteError(SandcastleError):
    """An axiom application did not match the subtree at its position."""


class ResourceLimitError(SandcastleError):
    """A configured budget (node count, carrier size, enumeration) was hit."""


class MissingValuationError(SandcastleError):
    """A base attack had no binding in the supplied valuation."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no value bound for base attack {name!r}")
