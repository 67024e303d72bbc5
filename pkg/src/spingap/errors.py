"""Exception types shared across the package."""


class SpinGapError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(SpinGapError):
    """Polynomial division by the zero polynomial."""


class NonExactDivision(SpinGapError):
    """Polynomial division left a nonzero remainder.

    In the degree engine this signals a formula/symbol mismatch, so it is
    never caught and ignored.
    """


class ZeroPolynomial(SpinGapError):
    """An operation that needs a nonzero polynomial got the zero one."""


class WrongDefectParity(SpinGapError):
    """Symbol defect is not admissible for the requested family."""


class OutOfRange(SpinGapError):
    """Rank or index outside the range a table or bound is defined for."""


class HypothesisViolated(SpinGapError):
    """Side conditions of an audited classification are not satisfied."""


class BudgetExceeded(SpinGapError):
    """A finite-field enumeration would exceed the configured budget."""


class NonRationalSum(SpinGapError):
    """A character sum that must be rational has nonzero cyclotomic part."""


class BadPair(SpinGapError):
    """The supplied vector pair is not singular, orthogonal and independent."""


class BadInput(SpinGapError):
    """Arguments violate a documented precondition."""


class IdentityFailed(SpinGapError):
    """A degree identity that must hold coefficient-exactly does not."""
