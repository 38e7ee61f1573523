"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad arguments: out-of-range vertex, malformed input, wrong length, ..."""


class ParseError(UsageError):
    """Unparseable digraph text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(UsageError):
    """The input digraph lies outside the class an operation requires.

    ``witness`` holds whatever certifies the failure (usually a ClassWitness).
    """

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class InvariantViolation(RuntimeError):
    """An internal construction failed to maintain its invariant.

    Signals either a bug or an unmet precondition that was not checked.
    """


class GenerationFailure(RuntimeError):
    """A rejection sampler ran out of attempts."""
