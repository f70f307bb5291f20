"""Exception hierarchy.

Every exception that signals a violated mathematical precondition derives
from PrecisionContractError, so callers (in particular the CLI, which maps
it to exit code 2) can distinguish "you asked for something the mathematics
does not permit" from genuine bugs.
"""


class PrecisionContractError(Exception):
    """A mathematical precondition of an operation was violated."""


# polynomial ring
class NonUnitLeadingCoefficient(PrecisionContractError):
    """Division requires the divisor's leading coefficient to be a unit."""


class DivisionByZeroPolynomial(PrecisionContractError):
    pass


class BothZero(PrecisionContractError):
    """Resultant/Bezout data is undefined when both inputs are zero."""


class NotPrime(PrecisionContractError):
    pass


# graph / combinatorics
class EmptySet(PrecisionContractError):
    pass


class EqualIndices(PrecisionContractError):
    pass


# completions
class ChainMismatch(PrecisionContractError):
    """Arithmetic on truncated elements requires a common filtration chain."""


class DigitDegreeViolation(PrecisionContractError):
    pass


class NotCoarser(PrecisionContractError):
    """The restriction map is undefined: the target modulus does not divide
    the source modulus at these finite levels."""


class NonConvergent(PrecisionContractError):
    """A series' divisibility witness never exceeded the requested level
    within the configured term bound."""


class EvenM(PrecisionContractError):
    pass


# roots of unity
class OrderMismatch(PrecisionContractError):
    pass


class InsufficientPrecision(PrecisionContractError):
    """The truncation level is too low for the requested evaluation or
    expansion to be well defined."""


# CRT
class DegreeViolation(PrecisionContractError):
    pass
