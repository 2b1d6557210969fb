"""Branches of a plane curve germ by rational Newton iteration.

Each branch through the origin is returned as an exact parametrization

    x(t) = lam * t^e,   y(t) = series in t        (or the same with the
                                                   roles of x and y swapped
                                                   for vertical tangents)

with all coefficients in the base field.  The key point is the
substitution used on a Newton polygon edge of inclination u/v (gcd 1)
with edge-polynomial root w0:

    x = w0^beta * x1^v,      y = w0^alpha * x1^u * (1 + y1),

where alpha*v - beta*u = 1.  Unlike the classical x = t^v substitution
this never extracts a v-th root of w0, so branches conjugate over an
extension field are never produced and rational branches are never
missed; every branch defined over the base field appears exactly once.

Coordinate axes contained in the curve are split off first, and a branch
whose y-part has valuation below its x-part is found by running the same
iteration on the swapped polynomial; top-level edge filters (u >= v for
the straight pass, u > v for the swapped pass) keep the two passes
disjoint.
"""

from __future__ import annotations

from math import gcd

from .bivar import BivarPoly
from .errors import NotTotallyRational, WildFailure, ZeroDivisorError
from .series import AbovePrecision, TruncSeries
from .unipoly import roots_with_multiplicity


class BranchParam:
    """One branch: a pair of truncated series with a monomial coordinate.

    `x` or `y` may be None, meaning that coordinate is exactly zero (the
    branch is a coordinate axis).  `e` is the ramification index: the order
    of the monomial coordinate (x when swapped is False, y when True).
    """

    __slots__ = ("germ", "x", "y", "e", "swapped", "precision")

    def __init__(self, germ, x, y, e, swapped, precision):
        self.germ = germ
        self.x = x
        self.y = y
        self.e = e
        self.swapped = swapped
        self.precision = precision

    def orders(self):
        ox = self.x.order() if self.x is not None else None
        oy = self.y.order() if self.y is not None else None
        return ox, oy

    def min_order(self):
        """Multiplicity of the branch: min of the coordinate orders."""
        ox, oy = self.orders()
        vals = [o for o in (ox, oy) if isinstance(o, int)]
        assert vals, "branch with both coordinates zero"
        return min(vals)

    def to_json(self):
        field = self.germ.field

        def ser(s):
            if s is None:
                return ["0"] * self.precision
            return [field.to_str(c) for c in s.coeffs[:self.precision]]

        return {"x": ser(self.x), "y": ser(self.y),
                "precision": self.precision}

    def __repr__(self):
        return "BranchParam(x=%r, y=%r)" % (self.x, self.y)


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _newton_edges(F):
    """Edges of the Newton polygon of F with strictly negative slope.

    Returns a list of (top_vertex, u, v, edge_poly) tuples, ordered from
    steep to shallow.  Requires x and y not dividing F and F(0,0) = 0.
    """
    pts = sorted(F.coeffs)
    hull = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    edges = []
    for p, q in zip(hull, hull[1:]):
        if q[1] >= p[1]:
            continue
        da, db = q[0] - p[0], p[1] - q[1]
        g = gcd(da, db)
        u, v = da // g, db // g
        field = F.field
        coeffs = [F.coeffs.get((p[0] + j * u, p[1] - j * v), field.zero)
                  for j in range(g + 1)]
        # Edge polynomial: root w0 corresponds to y ~ w0-ish * x^(u/v).
        phi = list(reversed(coeffs))
        edges.append((p, u, v, phi))
    return edges


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _cofactors(u, v):
    """alpha, beta with alpha*v - beta*u = 1."""
    g, s, t = _ext_gcd(v, u)
    assert g == 1
    return s, -t


def _duval_substitute(F, u, v, w0, alpha, beta):
    """Apply x = w0^beta x1^v, y = w0^alpha x1^u (1+y1) and divide out the
    minimal power of x1."""
    field = F.field
    assert alpha * v - beta * u == 1
    from math import comb
    out = {}
    for (a, b), c in F.coeffs.items():
        coef = field.mul(c, field.pow(w0, beta * a + alpha * b))
        xe = v * a + u * b
        for j in range(b + 1):
            cj = field.mul(coef, field.coerce(comb(b, j)))
            if field.is_zero(cj):
                continue
            k = (xe, j)
            acc = field.add(out.get(k, field.zero), cj)
            if field.is_zero(acc):
                out.pop(k, None)
            else:
                out[k] = acc
    F1 = BivarPoly(field, out)
    m = F1.x_multiplicity()
    F1 = F1.shift_down_x(m)
    assert F1.coeffs, "substitution lost the polynomial"
    return F1


def _hensel(F, prec):
    """The unique series root y = s(x), s(0) = 0, when F(0, y) has a simple
    root at y = 0.  Quadratic Newton lifting on truncated series."""
    field = F.field
    Fy = F.partial_y()
    s = TruncSeries.zero(field, 1)
    cur = 1
    while cur < prec:
        cur = min(2 * cur, prec)
        t_cur = TruncSeries.monomial(field, field.one, 1, cur)
        s_lift = TruncSeries(field, s.coeffs, cur)
        num = F.substitute(t_cur, s_lift)
        den = Fy.substitute(t_cur, s_lift)
        s = s_lift - num * den.inverse()
    t_full = TruncSeries.monomial(field, field.one, 1, prec)
    residue = F.substitute(t_full, s)
    assert residue.is_zero_to_precision(), "Newton lifting failed"
    return (1, field.one, s)


def _branches_rec(F, prec, depth, top_filter=None):
    """Branches of F through the origin, x not dividing F.

    Returns triples (e, lam, yser): x = lam t^e exactly, y = yser(t).
    `top_filter` restricts polygon edges at the outermost call: "straight"
    keeps u >= v, "swapped" keeps u > v and drops unramified implicit
    branches, which belong to the straight pass.
    """
    field = F.field
    out = []
    if (0, 0) in F.coeffs:
        return out
    k = F.y_multiplicity()
    if k:
        # y^k divides F: the axis y = 0 is one branch.  k > 1 only happens
        # in small characteristic when a substitution folded a branch onto
        # itself; the axis is still a single branch.
        out.append((1, field.one, TruncSeries.zero(field, prec)))
        F = F.shift_down_y(k)
        if (0, 0) in F.coeffs:
            return out
    f0y = F.at_x_zero()
    assert f0y, "x divides F"
    multy = next(i for i, c in enumerate(f0y) if not field.is_zero(c))
    if multy == 1:
        branch = _hensel(F, prec)
        if top_filter == "swapped":
            o = branch[2].order()
            if not (isinstance(o, int) and o >= 2):
                return out
        out.append(branch)
        return out
    if depth <= 0:
        raise WildFailure("Newton iteration did not separate branches of %s"
                          % F.to_str())
    for top, u, v, phi in _newton_edges(F):
        if top_filter == "straight" and u < v:
            continue
        if top_filter == "swapped" and u <= v:
            continue
        roots, leftover = roots_with_multiplicity(phi, field)
        roots = [(w, m) for w, m in roots if not field.is_zero(w)]
        if leftover:
            raise NotTotallyRational(
                "edge polynomial with no root in %r: %s" % (field, phi))
        alpha, beta = _cofactors(u, v)
        for w0, _ in roots:
            F1 = _duval_substitute(F, u, v, w0, alpha, beta)
            for e1, lam1, ys1 in _branches_rec(F1, prec, depth - 1):
                e = v * e1
                lam = field.mul(field.pow(w0, beta), field.pow(lam1, v))
                scalar = field.mul(field.pow(w0, alpha),
                                   field.pow(lam1, u))
                yser = ys1.add_constant(field.one).shift(u * e1).scale(scalar)
                out.append((e, lam, yser))
    return out


def puiseux_branches(germ, precision):
    """All branches of the germ, deterministically ordered."""
    f = germ.f
    field = germ.field
    deg = f.degree()
    depth = 16 + 4 * deg * deg
    branches = []

    straight_in = f
    kx = straight_in.x_multiplicity()
    if kx:
        straight_in = straight_in.shift_down_x(kx)
    if straight_in.degree() > 0:
        for e, lam, ys in _branches_rec(straight_in, precision, depth,
                                        "straight"):
            x = TruncSeries.monomial(field, lam, e, precision)
            y = ys.truncate(min(ys.precision, precision))
            if y.is_zero_to_precision():
                y = None
            branches.append(BranchParam(germ, x, y, e, False, precision))

    swapped_in = f.swap_vars()
    ky = swapped_in.x_multiplicity()
    if ky:
        swapped_in = swapped_in.shift_down_x(ky)
    if swapped_in.degree() > 0:
        for e, lam, ys in _branches_rec(swapped_in, precision, depth,
                                        "swapped"):
            y = TruncSeries.monomial(field, lam, e, precision)
            x = ys.truncate(min(ys.precision, precision))
            if x.is_zero_to_precision():
                x = None
            branches.append(BranchParam(germ, x, y, e, True, precision))

    branches.sort(key=lambda b: _branch_sort_key(b, field))
    total = sum(b.min_order() for b in branches)
    mult = f.multiplicity_at_origin()
    if total != mult:
        raise WildFailure(
            "branch multiplicities sum to %d, germ multiplicity is %d"
            % (total, mult))
    for b in branches:
        _check_branch(germ, b)
    return branches


def _branch_sort_key(b, field):
    def ser_key(s):
        if s is None:
            return ()
        return tuple(field.sort_key(c) for c in s.coeffs)

    return (b.swapped, b.e, ser_key(b.x), ser_key(b.y))


def _check_branch(germ, b):
    image = germ.f.substitute(b.x, b.y)
    assert image.is_zero_to_precision(), \
        "parametrization does not satisfy the curve equation"


def substitute_branch(z, branch):
    """Series image of a polynomial on a branch parametrization."""
    return z.substitute(branch.x, branch.y)


def value_of(z, branches):
    """Value vector of z: the t-order of z on each branch.

    Branch precision is raised on demand; once it exceeds an intersection
    bound with no order visible, z vanishes identically on that branch and
    ZeroDivisorError is raised.
    """
    if z.is_zero():
        raise ZeroDivisorError("zero element has no value")
    if not branches:
        raise ValueError("no branches supplied")
    germ = branches[0].germ
    degf = germ.f.degree()
    bound = 4 * degf * degf + (z.degree() + 1) * (degf + 1)
    current = branches
    while True:
        orders = [substitute_branch(z, b).order() for b in current]
        if all(isinstance(o, int) for o in orders):
            return tuple(orders)
        prec = current[0].precision
        if prec >= bound:
            raise ZeroDivisorError(
                "%s vanishes identically on a branch" % z.to_str())
        current = germ.branches(2 * prec)
