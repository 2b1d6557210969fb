"""Exact coefficient fields.

Two kinds of field are supported: the rationals QQ and prime fields GF(p).
Elements are plain Python values (`fractions.Fraction` for QQ, int residues
in [0, p) for GF(p)); the field object supplies the arithmetic.  Keeping
elements unboxed makes the inner loops of linear algebra and series
arithmetic cheap.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadDenominator, FieldMismatch


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field of rational numbers.  Elements are Fractions."""

    characteristic = 0

    def __repr__(self):
        return "QQ"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError("cannot coerce %r into QQ" % (x,))

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def pow(self, a, n):
        return a ** n if n >= 0 else (1 / a) ** (-n)

    def is_zero(self, a):
        return a == 0

    def sort_key(self, a):
        return a

    def to_str(self, a):
        return str(a)


class PrimeField:
    """The field F_p.  Elements are int residues in [0, p)."""

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return "GF(%d)" % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.from_rational(x)
        raise TypeError("cannot coerce %r into %r" % (x, self))

    def from_rational(self, fr):
        """Reduce a rational number mod p; BadDenominator if p divides the
        denominator of the reduced fraction."""
        if fr.denominator % self.p == 0:
            raise BadDenominator(self.p, fr)
        return fr.numerator * pow(fr.denominator, -1, self.p) % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in %r" % self)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, n):
        return pow(a, n, self.p) if n >= 0 else pow(self.inv(a), -n, self.p)

    def is_zero(self, a):
        return a == 0

    def elements(self):
        return range(self.p)

    def sort_key(self, a):
        return a

    def to_str(self, a):
        return str(a)


def primes_in_range(lo, hi):
    """All primes p with lo <= p <= hi."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


QQ = Rationals()

_prime_fields = {}


def GF(p):
    """The prime field F_p, cached so GF(p) is GF(p)."""
    try:
        return _prime_fields[p]
    except KeyError:
        _prime_fields[p] = PrimeField(p)
        return _prime_fields[p]


def same_field(a, b):
    if a is not b:
        raise FieldMismatch("%r vs %r" % (a, b))
    return a
