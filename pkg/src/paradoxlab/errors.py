"""Shared exception types."""


class PreconditionError(ValueError):
    """An operation's stated precondition was violated.

    ``precondition`` is the short machine-readable statement (e.g. "R > 0");
    the message adds the offending value.
    """

    def __init__(self, precondition: str, message: str = ""):
        self.precondition = precondition
        super().__init__(message or precondition)


class OracleMismatchError(RuntimeError):
    """A closed form and its measurement oracle disagree beyond tolerance."""
