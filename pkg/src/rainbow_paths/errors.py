"""Exception hierarchy shared across the package."""


class RainbowError(Exception):
    """Base class for all package errors."""


class ParseError(RainbowError, ValueError):
    """Malformed graph, coloring or orientation input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HypothesisError(RainbowError, ValueError):
    """The input violates a hypothesis of the requested construction."""


class VerificationError(RainbowError, RuntimeError):
    """A guaranteed conclusion failed independent verification.

    On valid input this signals a bug, never a property of the graph.
    """


class SearchExhausted(RainbowError, RuntimeError):
    """An exhaustive search finished without finding a witness."""


class BudgetExceeded(RainbowError, RuntimeError):
    """A search ran past its wall-clock or node budget."""
