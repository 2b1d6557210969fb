"""Truncated power series in one variable t over an exact field.

A TruncSeries stores exactly `precision` coefficients: the series is known
modulo t^precision and nothing beyond.  Precision propagates pessimistically
(the minimum over the operands), so a computed coefficient is always a true
coefficient of the underlying series.
"""

from __future__ import annotations

from .errors import PrecisionExhausted
from .fields import same_field


class AbovePrecision:
    """Order query result for a series with no nonzero stored coefficient.

    The true order exceeds (or equals) the recorded precision, or the series
    is identically zero; the data carried cannot tell.
    """

    __slots__ = ("precision",)

    def __init__(self, precision):
        self.precision = precision

    def __eq__(self, other):
        return isinstance(other, AbovePrecision) and \
            other.precision == self.precision

    def __hash__(self):
        return hash(("AbovePrecision", self.precision))

    def __repr__(self):
        return "AbovePrecision(%d)" % self.precision


class TruncSeries:
    __slots__ = ("field", "coeffs", "precision")

    def __init__(self, field, coeffs, precision):
        coeffs = tuple(coeffs)[:precision]
        if len(coeffs) < precision:
            coeffs = coeffs + (field.zero,) * (precision - len(coeffs))
        self.field = field
        self.coeffs = coeffs
        self.precision = precision

    @classmethod
    def zero(cls, field, precision):
        return cls(field, (), precision)

    @classmethod
    def monomial(cls, field, coeff, exp, precision):
        c = [field.zero] * precision
        if exp < precision:
            c[exp] = coeff
        return cls(field, c, precision)

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                parts.append("%s*t^%d" % (self.field.to_str(c), i))
        body = " + ".join(parts) if parts else "0"
        return "(%s + O(t^%d))" % (body, self.precision)

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.field is other.field \
            and self.precision == other.precision and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs, self.precision))

    def coefficient(self, i):
        if i >= self.precision:
            raise PrecisionExhausted("coefficient %d beyond precision %d"
                                     % (i, self.precision))
        return self.coeffs[i]

    def order(self):
        """Index of the first nonzero coefficient, or AbovePrecision."""
        for i, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                return i
        return AbovePrecision(self.precision)

    def is_zero_to_precision(self):
        return isinstance(self.order(), AbovePrecision)

    def truncate(self, precision):
        if precision > self.precision:
            raise PrecisionExhausted("cannot refine %d to %d"
                                     % (self.precision, precision))
        return TruncSeries(self.field, self.coeffs[:precision], precision)

    def __add__(self, other):
        f = same_field(self.field, other.field)
        n = min(self.precision, other.precision)
        return TruncSeries(
            f, [f.add(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    def __sub__(self, other):
        f = same_field(self.field, other.field)
        n = min(self.precision, other.precision)
        return TruncSeries(
            f, [f.sub(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    def __neg__(self):
        f = self.field
        return TruncSeries(f, [f.neg(a) for a in self.coeffs], self.precision)

    def scale(self, c):
        f = self.field
        return TruncSeries(f, [f.mul(c, a) for a in self.coeffs], self.precision)

    def add_constant(self, c):
        f = self.field
        coeffs = list(self.coeffs)
        if self.precision == 0:
            raise PrecisionExhausted("zero-precision series")
        coeffs[0] = f.add(coeffs[0], c)
        return TruncSeries(f, coeffs, self.precision)

    def __mul__(self, other):
        f = same_field(self.field, other.field)
        n = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        out = [f.zero] * n
        for i in range(n):
            ai = a[i]
            if f.is_zero(ai):
                continue
            for j in range(n - i):
                bj = b[j]
                if not f.is_zero(bj):
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return TruncSeries(f, out, n)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a series")
        result = TruncSeries.monomial(self.field, self.field.one, 0,
                                      self.precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by t^k (k >= 0).  Precision grows by k: the first k
        result coefficients are exact zeros."""
        f = self.field
        return TruncSeries(f, (f.zero,) * k + self.coeffs, self.precision + k)

    def inverse(self):
        """Multiplicative inverse; requires a unit (nonzero constant term)."""
        f = self.field
        if self.precision == 0:
            raise PrecisionExhausted("zero-precision series")
        c0 = self.coeffs[0]
        if f.is_zero(c0):
            raise ZeroDivisionError("series has zero constant term")
        inv0 = f.inv(c0)
        out = [f.zero] * self.precision
        out[0] = inv0
        for i in range(1, self.precision):
            acc = f.zero
            for j in range(1, i + 1):
                cj = self.coeffs[j]
                if not f.is_zero(cj):
                    acc = f.add(acc, f.mul(cj, out[i - j]))
            out[i] = f.neg(f.mul(inv0, acc))
        return TruncSeries(f, out, self.precision)

    def divide(self, other):
        """self / other where other has finite order k.

        The result is a series of precision min(precisions) - k; requires
        ord(self) >= k so the quotient is again a power series.
        """
        f = same_field(self.field, other.field)
        k = other.order()
        if isinstance(k, AbovePrecision):
            raise PrecisionExhausted("division by a series that is zero to "
                                     "precision %d" % other.precision)
        n = min(self.precision, other.precision) - k
        if n <= 0:
            raise PrecisionExhausted("no precision left after division")
        for i in range(min(k, self.precision)):
            if not f.is_zero(self.coeffs[i]):
                raise ValueError("quotient would have a pole")
        num = TruncSeries(f, self.coeffs[k:k + n], n)
        den = TruncSeries(f, other.coeffs[k:k + n], n)
        return num * den.inverse()


def order_of_series(s):
    """Order (valuation) of a truncated series: the exponent of its lowest
    nonzero term, or AbovePrecision if every stored coefficient vanishes."""
    return s.order()
