"""Exception types shared across the package."""


class CodespectraError(Exception):
    """Base class for every error this package raises on purpose."""


class NotPrime(CodespectraError):
    """The requested alphabet size is not a prime number."""


class SizeOverflow(CodespectraError):
    """A computed size exceeds the enumeration budget or the 64-bit range."""


class RankDeficient(CodespectraError):
    """A generator-matrix candidate does not have full row rank."""


class ZeroColumn(CodespectraError):
    """A generator-matrix candidate contains an all-zero column."""


class OutOfRange(CodespectraError):
    """A requested length lies outside the admissible range."""


class NotInitialSegment(CodespectraError):
    """The symbol weights do not cover every value 1..m."""


class NotOdd(CodespectraError):
    """The construction needs an odd prime alphabet."""


class NotFWS(CodespectraError):
    """The code does not have a full weight spectrum."""


class UnknownWeightName(CodespectraError):
    """There is no built-in weight function with that name."""


class BudgetExceeded(CodespectraError):
    """The enumeration is larger than the configured budget.

    ``required`` carries the count that would have been needed so callers can
    raise the budget or shrink the case.
    """

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class ParseError(CodespectraError):
    """Malformed input text; the message names the offending line and column."""
