"""Sparse bivariate polynomials over an exact field.

A BivarPoly is a dict mapping exponent pairs (a, b) of x^a y^b to nonzero
field elements.  This is the working representation for curve germs: small
support, exact coefficients, cheap partial derivatives and substitutions.
"""

from __future__ import annotations

from math import comb

from . import unipoly
from .errors import PrecisionExhausted
from .fields import same_field
from .series import TruncSeries


class BivarPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        clean = {}
        for (a, b), c in coeffs.items():
            c = field.coerce(c)
            if not field.is_zero(c):
                clean[(a, b)] = c
        self.field = field
        self.coeffs = clean

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, c):
        return cls(field, {(0, 0): c})

    @classmethod
    def variable(cls, field, which):
        if which == "x":
            return cls(field, {(1, 0): field.one})
        if which == "y":
            return cls(field, {(0, 1): field.one})
        raise ValueError(which)

    def is_zero(self):
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(a + b for a, b in self.coeffs)

    def deg_x(self):
        return max((a for a, _ in self.coeffs), default=-1)

    def deg_y(self):
        return max((b for _, b in self.coeffs), default=-1)

    def multiplicity_at_origin(self):
        """Order of vanishing at (0, 0): the minimal total degree."""
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return min(a + b for a, b in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self.field is other.field \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        f = same_field(self.field, other.field)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = f.add(out.get(k, f.zero), c)
        return BivarPoly(f, out)

    def __sub__(self, other):
        f = same_field(self.field, other.field)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = f.sub(out.get(k, f.zero), c)
        return BivarPoly(f, out)

    def __neg__(self):
        f = self.field
        return BivarPoly(f, {k: f.neg(c) for k, c in self.coeffs.items()})

    def __mul__(self, other):
        f = same_field(self.field, other.field)
        out = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                k = (a1 + a2, b1 + b2)
                v = f.mul(c1, c2)
                if k in out:
                    out[k] = f.add(out[k], v)
                else:
                    out[k] = v
        return BivarPoly(f, out)

    def __pow__(self, n):
        result = BivarPoly.constant(self.field, self.field.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        f = self.field
        return BivarPoly(f, {k: f.mul(c, v) for k, v in self.coeffs.items()})

    def evaluate(self, x0, y0):
        f = self.field
        acc = f.zero
        for (a, b), c in self.coeffs.items():
            acc = f.add(acc, f.mul(c, f.mul(f.pow(x0, a), f.pow(y0, b))))
        return acc

    def partial_x(self):
        f = self.field
        out = {}
        for (a, b), c in self.coeffs.items():
            if a:
                out[(a - 1, b)] = f.mul(f.coerce(a), c)
        return BivarPoly(f, out)

    def partial_y(self):
        f = self.field
        out = {}
        for (a, b), c in self.coeffs.items():
            if b:
                out[(a, b - 1)] = f.mul(f.coerce(b), c)
        return BivarPoly(f, out)

    def swap_vars(self):
        return BivarPoly(self.field, {(b, a): c
                                      for (a, b), c in self.coeffs.items()})

    def translate(self, x0, y0):
        """f(x + x0, y + y0), recentering the point (x0, y0) at the origin."""
        f = self.field
        out = {}
        for (a, b), c in self.coeffs.items():
            for i in range(a + 1):
                ci = f.mul(c, f.mul(f.coerce(comb(a, i)),
                                    f.pow(x0, a - i)))
                if f.is_zero(ci):
                    continue
                for j in range(b + 1):
                    cij = f.mul(ci, f.mul(f.coerce(comb(b, j)),
                                          f.pow(y0, b - j)))
                    if f.is_zero(cij):
                        continue
                    k = (i, j)
                    out[k] = f.add(out.get(k, f.zero), cij)
        return BivarPoly(f, out)

    def x_multiplicity(self):
        """Largest k with x^k dividing the polynomial."""
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return min(a for a, _ in self.coeffs)

    def y_multiplicity(self):
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return min(b for _, b in self.coeffs)

    def shift_down_x(self, k):
        """Divide by x^k; requires x^k to divide the polynomial."""
        assert all(a >= k for a, _ in self.coeffs)
        return BivarPoly(self.field, {(a - k, b): c
                                      for (a, b), c in self.coeffs.items()})

    def shift_down_y(self, k):
        assert all(b >= k for _, b in self.coeffs)
        return BivarPoly(self.field, {(a, b - k): c
                                      for (a, b), c in self.coeffs.items()})

    def at_x_zero(self):
        """f(0, y) as a coefficient list in y."""
        f = self.field
        out = [f.zero] * (self.deg_y() + 1)
        for (a, b), c in self.coeffs.items():
            if a == 0:
                out[b] = c
        return unipoly.trim(out, f)

    def at_y_zero(self):
        """f(x, 0) as a coefficient list in x."""
        f = self.field
        out = [f.zero] * (self.deg_x() + 1)
        for (a, b), c in self.coeffs.items():
            if b == 0:
                out[a] = c
        return unipoly.trim(out, f)

    def y_coefficients(self):
        """List of coefficients of y^j, each a unipoly in x."""
        f = self.field
        out = [[f.zero] * (self.deg_x() + 1) for _ in range(self.deg_y() + 1)]
        for (a, b), c in self.coeffs.items():
            out[b][a] = c
        return [unipoly.trim(p, f) for p in out]

    @classmethod
    def from_y_coefficients(cls, field, cols):
        out = {}
        for b, p in enumerate(cols):
            for a, c in enumerate(p):
                if not field.is_zero(c):
                    out[(a, b)] = c
        return cls(field, out)

    def substitute(self, sx, sy):
        """Evaluate at a pair of truncated series (the image on a branch).

        Either argument may be None, meaning the exact zero series; the
        result precision is then governed by the other argument alone.
        """
        f = self.field
        precs = [s.precision for s in (sx, sy) if s is not None]
        if not precs:
            raise ValueError("substitute needs at least one series")
        prec = min(precs)
        if sx is None:
            sx = TruncSeries.zero(f, prec)
        if sy is None:
            sy = TruncSeries.zero(f, prec)
        sx, sy = sx.truncate(prec), sy.truncate(prec)
        # Horner in y over precomputed powers of sx.
        cols = self.y_coefficients()
        xpows = [TruncSeries.monomial(f, f.one, 0, prec)]
        for _ in range(self.deg_x()):
            xpows.append(xpows[-1] * sx)
        acc = TruncSeries.zero(f, prec)
        for b in range(len(cols) - 1, -1, -1):
            acc = acc * sy
            row = TruncSeries.zero(f, prec)
            for a, c in enumerate(cols[b]):
                if not f.is_zero(c):
                    row = row + xpows[a].scale(c)
            acc = acc + row
        return acc

    def sort_terms(self):
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][0], -kv[0][1]))

    def __repr__(self):
        return "BivarPoly(%s)" % self.to_str()

    def to_str(self):
        """Canonical human-readable form, parseable by the curve parser."""
        f = self.field
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), c in self.sort_terms():
            mon = []
            if a == 1:
                mon.append("x")
            elif a > 1:
                mon.append("x^%d" % a)
            if b == 1:
                mon.append("y")
            elif b > 1:
                mon.append("y^%d" % b)
            body = "*".join(mon)
            cs = f.to_str(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if body and mag == "1":
                term = body
            elif body:
                term = "%s*%s" % (mag, body)
            else:
                term = mag
            if not parts:
                parts.append("-" + term if neg else term)
            else:
                parts.append(("- " if neg else "+ ") + term)
        return " ".join(parts)


def _content_x(cols, field):
    """Gcd in k[x] of the y-coefficients."""
    g = []
    for p in cols:
        g = unipoly.gcd(g, p, field)
        if unipoly.degree(g) == 0:
            break
    return g


def _primitive_part(cols, field):
    g = _content_x(cols, field)
    if unipoly.degree(g) <= 0:
        return cols, g
    out = []
    for p in cols:
        q, r = unipoly.div_rem(p, g, field)
        assert not r
        out.append(q)
    return out, g


def _pseudo_rem(A, B, field):
    """Pseudo-remainder of A by B, both nonzero lists of unipolys in y."""
    dB = len(B) - 1
    lB = B[-1]
    R = [list(p) for p in A]
    while len(R) - 1 >= dB and any(R):
        while R and not R[-1]:
            R.pop()
        if len(R) - 1 < dB:
            break
        dR = len(R) - 1
        lead = R[-1]
        R = [unipoly.mul(p, lB, field) for p in R]
        shift = dR - dB
        for j, q in enumerate(B):
            R[shift + j] = unipoly.sub(R[shift + j],
                                       unipoly.mul(lead, q, field), field)
        R.pop()
        while R and not R[-1]:
            R.pop()
    return R


def gcd_bivar(f, g):
    """Gcd of two bivariate polynomials, normalized so the leading
    coefficient (highest y-degree, then x-degree) is one."""
    field = same_field(f.field, g.field)
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    if f.deg_y() == 0 and g.deg_y() == 0:
        h = unipoly.gcd(f.at_y_zero(), g.at_y_zero(), field)
        return BivarPoly.from_y_coefficients(field, [h])
    if f.deg_y() == 0:
        h = unipoly.gcd(f.at_y_zero(), _content_x(g.y_coefficients(), field),
                        field)
        return BivarPoly.from_y_coefficients(field, [h])
    if g.deg_y() == 0:
        return gcd_bivar(g, f)
    fc, cf = _primitive_part(f.y_coefficients(), field)
    gc, cg = _primitive_part(g.y_coefficients(), field)
    cont = unipoly.gcd(cf, cg, field)
    A, B = fc, gc
    if len(A) < len(B):
        A, B = B, A
    while True:
        R = _pseudo_rem(A, B, field)
        if not any(R):
            break
        R, _ = _primitive_part(R, field)
        A, B = B, R
        if len(B) == 1:
            # Content of the primitive sequence dropped to a unit in y.
            B = [[field.one]] if B[0] else [[]]
            break
    pp = BivarPoly.from_y_coefficients(field, B)
    cpoly = BivarPoly.from_y_coefficients(field, [cont])
    return _normalize(pp * cpoly)


def _normalize(h):
    if h.is_zero():
        return h
    lead = max(h.coeffs, key=lambda ab: (ab[1], ab[0]))
    return h.scale(h.field.inv(h.coeffs[lead]))


def is_squarefree(f):
    """True when f has no repeated factor.

    Uses gcd(f, f_x, f_y): over a perfect field f is squarefree iff this
    gcd is constant.  When both partials vanish identically in
    characteristic p the polynomial is a p-th power, hence not squarefree
    unless constant.
    """
    if f.is_zero():
        return False
    fx, fy = f.partial_x(), f.partial_y()
    if fx.is_zero() and fy.is_zero():
        return f.degree() == 0
    g = f
    if not fx.is_zero():
        g = gcd_bivar(g, fx)
    if not fy.is_zero():
        g = gcd_bivar(g, fy)
    return g.degree() == 0


def substitute(f, sx, sy):
    """Series image of f under x -> sx(t), y -> sy(t)."""
    return f.substitute(sx, sy)
