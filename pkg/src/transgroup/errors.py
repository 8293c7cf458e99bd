"""Exception hierarchy shared across the library."""


class TransgroupError(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(TransgroupError):
    """The zero polynomial cannot annihilate a number."""


class NotIsolating(TransgroupError):
    """A box could not be refined to contain exactly one root."""


class PrecisionExhausted(TransgroupError):
    """The refinement budget ran out before a decision was reached.

    This signals a bug or a pathological input, not a mathematical
    impossibility; raise the budget and retry.
    """


class DegreeOverflow(TransgroupError):
    """Resultant arithmetic would exceed the configured degree cap."""


class InvalidSymbol(TransgroupError):
    """A symbol constructor received an argument outside its domain."""


class UnboundSymbol(TransgroupError):
    """Numeric evaluation hit an abstract symbol with no binding."""


class DomainError(TransgroupError):
    """An interval operation was applied outside its domain."""


class DuplicateExponent(TransgroupError):
    """An exponential group was given two equal exponents."""


class ZeroExponent(TransgroupError):
    """An exponential group was given the exponent 0."""


class NonPositiveLogArgument(TransgroupError):
    """A logarithm group was given an argument that is not a positive real."""


class ZeroInput(TransgroupError):
    """An operation requiring nonzero elements received a certified zero."""


class NotDiscrete(TransgroupError):
    """A minimal-norm query was made on a group that is not discrete."""


class SearchExhausted(TransgroupError):
    """No witness was found within the given budget.

    Never interpret this as a discreteness proof; only the classifier's
    exact criterion proves discreteness.
    """

    def __init__(self, message, height_cap=None):
        super().__init__(message)
        self.height_cap = height_cap


class BudgetExceeded(TransgroupError):
    """A brute-force enumeration would exceed the candidate guard."""


class ParseError(TransgroupError):
    """Input text does not match the expression grammar."""

    def __init__(self, message, position=None, expected=None):
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected) if expected else ()


class SemanticError(TransgroupError):
    """Input parsed but violates a semantic constraint (e.g. log(-2))."""
