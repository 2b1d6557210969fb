"""Exception types shared across the package."""


class CurveInvError(Exception):
    """Base class for all errors raised by this package."""


class CurveSyntaxError(CurveInvError):
    """Malformed curve expression.  `offset` is a 1-based character position."""

    def __init__(self, message, offset):
        super().__init__("%s at offset %d" % (message, offset))
        self.offset = offset


class ZeroPolynomial(CurveInvError):
    """An expression simplified to the zero polynomial."""


class InvalidGerm(CurveInvError):
    """Input polynomial does not define a reduced germ at the chosen point."""


class FieldMismatch(CurveInvError):
    """Operands live over different coefficient fields."""


class BadDenominator(CurveInvError):
    """A rational coefficient has denominator divisible by the reduction prime."""

    def __init__(self, prime, value=None):
        msg = "denominator divisible by %d" % prime
        if value is not None:
            msg += ": %s" % (value,)
        super().__init__(msg)
        self.prime = prime


class DegenerateReduction(CurveInvError):
    """Reduction mod p is zero or acquires a repeated factor."""


class NotTotallyRational(CurveInvError):
    """A branch or singular point is not defined over the base field."""


class WildFailure(CurveInvError):
    """Newton iteration in small characteristic failed to separate branches."""


class PrecisionExhausted(CurveInvError):
    """A series computation needed more coefficients than were carried.

    Internal: callers retry with doubled precision.
    """


class ZeroDivisorError(CurveInvError):
    """Element vanishes identically on some branch, so it has no finite value."""


class ExactDivisionFailure(CurveInvError):
    """Division in the Laurent ring Z[L, L^-1] left a remainder."""


class NonStabilized(CurveInvError):
    """A jet-truncation invariant kept changing as the truncation was doubled."""


class SmallFieldAmbiguity(CurveInvError):
    """Dimension-drop membership test forced over F_q with more branches than q."""


class BudgetExceeded(CurveInvError):
    """An enumeration would exceed the configured operation budget."""


class InconsistentCounts(CurveInvError):
    """Point counts admit no integral Weil numerator with the expected symmetry."""


class IndexMismatch(CurveInvError):
    """Unit-group index from enumeration disagrees with the closed formula."""
