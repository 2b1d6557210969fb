"""Curve models: local germs at a point and projective plane curves.

A CurveGerm is a squarefree bivariate polynomial vanishing at the origin,
the local model all invariant computations work on.  A GlobalCurve is a
homogeneous squarefree polynomial in three variables over a prime field,
carrying its singular points and the germs obtained by recentering each
singular point in an affine chart.
"""

from __future__ import annotations

from .bivar import BivarPoly, is_squarefree
from .errors import (BudgetExceeded, DegenerateReduction, InvalidGerm,
                     NotTotallyRational)
from .extfield import fq_table
from .fields import GF, QQ, same_field
from .parsing import parse_polynomial

DEFAULT_BUDGET = 10 ** 7


def parse_curve(text, field=QQ):
    """Parse a plane curve expression in x, y into a BivarPoly.

    Parsing always happens over the rationals; coefficients are then
    coerced into the requested field (BadDenominator can surface here for
    prime fields).
    """
    raw = parse_polynomial(text, ("x", "y"))
    poly = BivarPoly(field, {e: field.coerce(c) for e, c in raw.items()})
    if poly.is_zero():
        from .errors import ZeroPolynomial
        raise ZeroPolynomial("expression reduces to zero over %r" % (field,))
    return poly


class CurveGerm:
    """A reduced plane curve germ at the origin."""

    def __init__(self, f):
        if f.is_zero():
            raise InvalidGerm("zero polynomial")
        if f.degree() == 0:
            raise InvalidGerm("unit: the curve is empty near the origin")
        if (0, 0) in f.coeffs:
            raise InvalidGerm("curve does not pass through the point")
        if not is_squarefree(f):
            raise InvalidGerm("polynomial has a repeated factor")
        self.f = f
        self._cache = {}

    @classmethod
    def from_string(cls, text, field=QQ):
        return cls(parse_curve(text, field))

    @property
    def field(self):
        return self.f.field

    def __eq__(self, other):
        return isinstance(other, CurveGerm) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return "CurveGerm(%s over %r)" % (self.f.to_str(), self.field)

    def branches(self, precision=None):
        """Rational branch parametrizations, cached per precision."""
        from .branches import puiseux_branches
        deg = self.f.degree()
        if precision is None:
            precision = 4 * deg * deg
        best = self._cache.get("branch_precision", 0)
        if best >= precision:
            return self._cache["branches"]
        result = puiseux_branches(self, precision)
        self._cache["branches"] = result
        self._cache["branch_precision"] = precision
        return result


def reduce_mod_p(f, p):
    """Coefficientwise reduction of a rational BivarPoly modulo p.

    Raises BadDenominator when p divides a denominator and
    DegenerateReduction when the image is zero or loses squarefreeness.
    """
    same_field(f.field, QQ)
    k = GF(p)
    image = BivarPoly(k, {e: k.from_rational(c) for e, c in f.coeffs.items()})
    if image.is_zero():
        raise DegenerateReduction("zero image mod %d" % p)
    if not is_squarefree(image):
        raise DegenerateReduction("repeated factor mod %d" % p)
    return image


def reduce_germ(germ, p):
    return CurveGerm(reduce_mod_p(germ.f, p))


class TrivarPoly:
    """A homogeneous polynomial in x, y, z with exact coefficients."""

    __slots__ = ("field", "coeffs", "degree")

    def __init__(self, field, coeffs):
        clean = {}
        for e, c in coeffs.items():
            c = field.coerce(c)
            if not field.is_zero(c):
                clean[e] = c
        if not clean:
            raise InvalidGerm("zero polynomial")
        degrees = {sum(e) for e in clean}
        if len(degrees) != 1:
            raise InvalidGerm("polynomial is not homogeneous")
        self.field = field
        self.coeffs = clean
        self.degree = degrees.pop()

    @classmethod
    def from_string(cls, text, field):
        raw = parse_polynomial(text, ("x", "y", "z"))
        return cls(field, {e: field.coerce(c) for e, c in raw.items()})

    def partial(self, i):
        f = self.field
        out = {}
        for e, c in self.coeffs.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = f.mul(f.coerce(e[i]), c)
        return out

    def evaluate(self, point):
        f = self.field
        acc = f.zero
        for (a, b, c), coef in self.coeffs.items():
            acc = f.add(acc, f.mul(coef, f.mul(f.pow(point[0], a),
                                               f.mul(f.pow(point[1], b),
                                                     f.pow(point[2], c)))))
        return acc

    def dehomogenize(self, chart):
        """Set coordinate `chart` to one; remaining variables keep their
        cyclic order from (x, y, z)."""
        rest = [i for i in range(3) if i != chart]
        out = {}
        f = self.field
        for e, c in self.coeffs.items():
            k = (e[rest[0]], e[rest[1]])
            out[k] = f.add(out.get(k, f.zero), c)
        return BivarPoly(f, out)

    def to_str(self):
        names = ("x", "y", "z")
        f = self.field
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mon = []
            for i, ei in enumerate(e):
                if ei == 1:
                    mon.append(names[i])
                elif ei > 1:
                    mon.append("%s^%d" % (names[i], ei))
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
            parts.append(("- " if neg else "+ ") + term if parts
                         else ("-" + term if neg else term))
        return " ".join(parts)

    def __repr__(self):
        return "TrivarPoly(%s over %r)" % (self.to_str(), self.field)


def _projective_points(K):
    """Representatives of P^2 over a table field, first nonzero slot 1."""
    one = 1
    for y in K.elements():
        for z in K.elements():
            yield (one, y, z)
    for z in K.elements():
        yield (0, one, z)
    yield (0, 0, one)


def _is_squarefree_homogeneous(F):
    for chart in range(3):
        g = F.dehomogenize(chart)
        if g.is_zero():
            continue
        if g.degree() >= 1 and not is_squarefree(g):
            return False
    return True


def find_singular_points(F, budget=None):
    """All F_q-rational singular points of {F = 0}, as normalized
    projective tuples sorted lexicographically."""
    field = F.field
    q = field.characteristic
    if budget is None:
        budget = DEFAULT_BUDGET
    if (q * q + q + 1) * max(1, len(F.coeffs)) > budget:
        raise BudgetExceeded("singular point search over F_%d" % q)
    partials = [TrivarPolyView(field, F.partial(i)) for i in range(3)]
    out = []
    for pt in _projective_points_prime(field):
        if not field.is_zero(F.evaluate(pt)):
            continue
        if all(field.is_zero(dp.evaluate(pt)) for dp in partials):
            out.append(pt)
    return sorted(out)


class TrivarPolyView:
    """Evaluation-only view of a possibly zero exponent dict."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def evaluate(self, point):
        f = self.field
        acc = f.zero
        for (a, b, c), coef in self.coeffs.items():
            acc = f.add(acc, f.mul(coef, f.mul(f.pow(point[0], a),
                                               f.mul(f.pow(point[1], b),
                                                     f.pow(point[2], c)))))
        return acc


def _projective_points_prime(field):
    one = field.one
    zero = field.zero
    for y in field.elements():
        for z in field.elements():
            yield (one, y, z)
    for z in field.elements():
        yield (zero, one, z)
    yield (zero, zero, one)


def _count_singular_ext(F, m):
    """Number of singular points of F over F_{q^m}."""
    q = F.field.characteristic
    K = fq_table(q, m)
    terms = [(e, K.embed(c)) for e, c in F.coeffs.items()]
    parts = []
    for i in range(3):
        parts.append([(e, K.embed(c)) for e, c in F.partial(i).items()])

    def ev(terms, pt):
        acc = 0
        for (a, b, c), coef in terms:
            v = K.mul(coef, K.mul(K.pow(pt[0], a),
                                  K.mul(K.pow(pt[1], b), K.pow(pt[2], c))))
            acc = K.add(acc, v)
        return acc

    count = 0
    for pt in _projective_points(K):
        if ev(terms, pt) != 0:
            continue
        if all(ev(p, pt) == 0 for p in parts):
            count += 1
    return count


class SingularPoint:
    """A singular point together with its recentred affine germ."""

    __slots__ = ("point", "chart", "germ")

    def __init__(self, point, chart, germ):
        self.point = point
        self.chart = chart
        self.germ = germ

    def point_str(self):
        f = self.germ.field
        return "(%s:%s:%s)" % tuple(f.to_str(c) for c in self.point)

    def __repr__(self):
        return "SingularPoint(%s)" % self.point_str()


class GlobalCurve:
    """A reduced projective plane curve over a prime field."""

    def __init__(self, F, budget=None):
        field = F.field
        if field.characteristic == 0:
            raise InvalidGerm("global curves must live over a finite field")
        if not _is_squarefree_homogeneous(F):
            raise InvalidGerm("curve has a repeated component")
        self.F = F
        self.q = field.characteristic
        self.field = field
        if budget is None:
            budget = DEFAULT_BUDGET
        points = find_singular_points(F, budget)
        # Conjugate singular points over a small extension are not handled.
        for m in (2, 3):
            cost = (self.q ** m) ** 2 * max(1, len(F.coeffs))
            if cost > budget:
                break
            if _count_singular_ext(F, m) != len(points):
                raise NotTotallyRational(
                    "singular points appear over F_%d^%d" % (self.q, m))
        self.singular = [self._localize(pt) for pt in points]

    @classmethod
    def from_string(cls, text, q, budget=None):
        return cls(TrivarPoly.from_string(text, GF(q)), budget)

    def _localize(self, pt):
        field = self.field
        chart = 0
        while field.is_zero(pt[chart]):
            chart += 1
        rest = [i for i in range(3) if i != chart]
        aff = self.F.dehomogenize(chart)
        germ_poly = aff.translate(pt[rest[0]], pt[rest[1]])
        return SingularPoint(pt, chart, CurveGerm(germ_poly))

    @property
    def r(self):
        return len(self.singular)

    def genus_smooth_model(self):
        """Genus of the normalization, by degree formula minus local delta
        invariants; negative values are rejected upstream."""
        from .semigroup import delta_invariant
        d = self.F.degree
        total = sum(delta_invariant(sp.germ) for sp in self.singular)
        return (d - 1) * (d - 2) // 2 - total

    def __repr__(self):
        return "GlobalCurve(%s over F_%d)" % (self.F.to_str(), self.q)
