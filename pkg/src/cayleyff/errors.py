"""Exception types raised across the package."""


class CayleyFFError(Exception):
    """Base class for every error raised by cayleyff."""


class UsageError(CayleyFFError, ValueError):
    """Invalid parameters or malformed input."""


class NotPrime(UsageError):
    pass


class ReducibleModulus(UsageError):
    pass


class DegreeMismatch(UsageError):
    pass


class NotMonic(UsageError):
    pass


class DegreeTooSmall(UsageError):
    pass


class ZeroPolynomial(UsageError):
    pass


class FieldMismatch(UsageError):
    pass


class DivisionByZero(CayleyFFError, ZeroDivisionError):
    pass


class ZeroElement(UsageError):
    pass


class SizeGuard(UsageError):
    """The instance exceeds the table-size guard (override with force)."""


class BudgetExceeded(UsageError):
    pass


class BadHint(UsageError):
    pass


class GiveUp(CayleyFFError):
    """A cofactor resisted the factoring effort budget; supply the factors."""


class NotAGenerator(UsageError):
    pass


class WrongKind(UsageError):
    pass


class NotApplicable(UsageError):
    """A theorem's hypothesis fails, so its bound does not apply."""


class EllDoesNotDivide(UsageError):
    pass


class UnknownFormat(UsageError):
    pass


class Disconnected(CayleyFFError):
    """The graph has more than one component where connectivity was required."""


class CollisionDetected(CayleyFFError):
    """Two connection-set polynomials evaluated to the same element (internal bug)."""


class TheoremViolation(CayleyFFError):
    """A numerically checked inequality failed; signals a bug, never bad input."""
