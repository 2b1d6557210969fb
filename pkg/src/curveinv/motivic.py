"""Laurent polynomials in the Lefschetz class L and series built from them.

MotClass models the subring Z[L, L^-1] of the localized Grothendieck ring
of varieties in which every class computed here lives.  A MotSeries is a
finitely supported map from exponent tuples n (one slot per branch) to
MotClass coefficients, truncated at a stated bound on ||n|| = n_1+...+n_d.

Counting specialization L -> q turns both into exact rational data.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExactDivisionFailure


class MotClass:
    """An integer Laurent polynomial in L, kept as {exponent: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def from_int(cls, n):
        return cls({0: n})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def lefschetz(cls):
        return cls({1: 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MotClass) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MotClass(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return MotClass(out)

    def __neg__(self):
        return MotClass({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return MotClass({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return MotClass(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power; use exact_div")
        result = MotClass.from_int(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by L^k (k may be negative)."""
        return MotClass({e + k: c for e, c in self.terms.items()})

    def exact_div(self, other):
        """Divide in Z[L, L^-1]; ExactDivisionFailure if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero class")
        if self.is_zero():
            return MotClass()
        lo_s = min(self.terms)
        lo_o = min(other.terms)
        num = self.shift(-lo_s)
        den = other.shift(-lo_o)
        dn, dd = max(num.terms), max(den.terms)
        lead = den.terms[dd]
        quo = {}
        while num.terms:
            d = max(num.terms)
            if d < dd:
                raise ExactDivisionFailure("%s does not divide %s"
                                           % (other, self))
            c = num.terms[d]
            if c % lead:
                raise ExactDivisionFailure("%s does not divide %s"
                                           % (other, self))
            q = c // lead
            quo[d - dd] = q
            num = num - den.shift(d - dd) * q
        return MotClass(quo).shift(lo_s - lo_o)

    def evaluate(self, q):
        """Counting specialization L -> q, as an exact Fraction."""
        acc = Fraction(0)
        for e, c in self.terms.items():
            acc += c * Fraction(q) ** e
        return acc

    def __repr__(self):
        return "MotClass(%s)" % self.to_str()

    def to_str(self):
        """Canonical string, exponents descending: 'L^2 - 2*L + 1 - L^-1'."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            neg = c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                power = "L" if e == 1 else "L^%d" % e
                body = power if mag == 1 else "%d*%s" % (mag, power)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


def evaluate_motclass(c, q):
    return c.evaluate(q)


class MotSeries:
    """Truncated d-variable series with MotClass coefficients.

    `terms` maps exponent tuples n with ||n|| <= bound to nonzero classes.
    """

    __slots__ = ("d", "bound", "terms")

    def __init__(self, d, bound, terms=None):
        self.d = d
        self.bound = bound
        clean = {}
        if terms:
            for n, c in terms.items():
                n = tuple(n)
                assert len(n) == d and sum(n) <= bound
                if not c.is_zero():
                    clean[n] = c
        self.terms = clean

    def coefficient(self, n):
        return self.terms.get(tuple(n), MotClass())

    def __eq__(self, other):
        return isinstance(other, MotSeries) and self.d == other.d \
            and self.bound == other.bound and self.terms == other.terms

    def __add__(self, other):
        assert self.d == other.d
        bound = min(self.bound, other.bound)
        out = {}
        for n in set(self.terms) | set(other.terms):
            if sum(n) <= bound:
                out[n] = self.coefficient(n) + other.coefficient(n)
        return MotSeries(self.d, bound, out)

    def scale(self, c):
        return MotSeries(self.d, self.bound,
                         {n: c * v for n, v in self.terms.items()})

    def diagonal(self):
        """Collapse to one variable: t_i -> t for every i."""
        out = {}
        for n, c in self.terms.items():
            k = (sum(n),)
            out[k] = out.get(k, MotClass()) + c
        return MotSeries(1, self.bound, out)

    def specialize(self, q):
        """Apply the counting specialization L -> q to every coefficient."""
        return RationalSeries(self.d, self.bound,
                              {n: c.evaluate(q) for n, c in self.terms.items()})

    def to_json(self):
        terms = []
        for n in sorted(self.terms):
            terms.append({"n": list(n), "class": self.terms[n].to_str()})
        return {"d": self.d, "bound": self.bound, "terms": terms}

    def __repr__(self):
        return "MotSeries(d=%d, bound=%d, %d terms)" \
            % (self.d, self.bound, len(self.terms))


class RationalSeries:
    """A MotSeries after counting specialization: Fraction coefficients."""

    __slots__ = ("d", "bound", "terms")

    def __init__(self, d, bound, terms=None):
        self.d = d
        self.bound = bound
        clean = {}
        if terms:
            for n, c in terms.items():
                n = tuple(n)
                if c:
                    clean[n] = Fraction(c)
        self.terms = clean

    def coefficient(self, n):
        return self.terms.get(tuple(n), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, RationalSeries) and self.d == other.d \
            and self.bound == other.bound and self.terms == other.terms

    def diagonal(self):
        out = {}
        for n, c in self.terms.items():
            k = (sum(n),)
            out[k] = out.get(k, Fraction(0)) + c
        return RationalSeries(1, self.bound, out)

    def coefficient_list(self):
        """For d = 1: dense list of coefficients up to the bound."""
        assert self.d == 1
        return [self.coefficient((s,)) for s in range(self.bound + 1)]

    def to_json(self):
        terms = []
        for n in sorted(self.terms):
            terms.append({"n": list(n), "value": str(self.terms[n])})
        return {"d": self.d, "bound": self.bound, "terms": terms}

    def __repr__(self):
        return "RationalSeries(d=%d, bound=%d, %d terms)" \
            % (self.d, self.bound, len(self.terms))
