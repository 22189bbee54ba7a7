"""Exception types shared across the package.

Validation failures (bad parameters, malformed input text, objects that do not
satisfy a stated precondition) derive from ValueError.  InternalCheckError is
reserved for situations the theory rules out; it maps to a distinct exit code
in the command line driver.
"""


class DetringError(Exception):
    pass


class ParameterError(DetringError, ValueError):
    """Matrix sizes or rank bound out of range for the requested operation."""


class SpaceMismatchError(DetringError, ValueError):
    """Operands live on different variable spaces."""


class ParseError(DetringError, ValueError):
    """Malformed polynomial, minor, or bitableau text."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotStandardError(DetringError, ValueError):
    """A bitableau argument was required to be standard and is not."""


class NotInSemigroupError(DetringError, ValueError):
    """Monomial has no standard preimage under the closed-form encoding."""


class InternalCheckError(DetringError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
