"""Local zeta series of a curve germ in the Grothendieck ring.

The series enumerates principal ideals of the local ring by the value
vector of a generator.  All classes come from one table of value-ideal
dimensions D(n) = dim C(n)/C(M): the fiber of elements of value exactly
n has class given by inclusion-exclusion over the D, the ideal class
divides out the free unit action, and the zeta series sums the ideal
classes weighted by L^-|n| t^n.  A jet oracle recomputes the same counts
over a small finite field by exhaustive enumeration; the formula path is
only trusted because the oracle agrees with it.
"""

from __future__ import annotations

from itertools import product

from .curves import DEFAULT_BUDGET
from .errors import BudgetExceeded
from .linalg import iterate_span, rref
from .motivic import MotClass, MotSeries
from .semigroup import _convolve, _jet_model, value_semigroup


class ValueIdealTable:
    """D(n) on a box, with a truncation stability certificate.

    The truncation is M = region + gamma + 2 componentwise.  Building the
    table also builds the model at M + 1 and checks that every D on the
    box of interest shifts by exactly d, which pins the absolute
    normalization ell(n) = D(0) - D(n) independently of M.
    """

    __slots__ = ("germ", "region", "M", "delta", "conductor", "d", "_jet")

    def __init__(self, germ, region):
        vs = value_semigroup(germ)
        region = tuple(region)
        assert len(region) == vs.d
        M = tuple(r + c + 2 for r, c in zip(region, vs.conductor))
        jet = _jet_model(germ, M)
        jet2 = _jet_model(germ, tuple(m + 1 for m in M))
        for n in product(*[range(r + 2) for r in region]):
            if jet2.D(n) - jet.D(n) != vs.d:
                raise AssertionError(
                    "truncation drift at %s: %d vs %d"
                    % (n, jet.D(n), jet2.D(n)))
        self.germ = germ
        self.region = region
        self.M = M
        self.delta = vs.delta
        self.conductor = vs.conductor
        self.d = vs.d
        self._jet = jet

    def D(self, n):
        return self._jet.D(tuple(n))

    def ell(self, n):
        return self._jet.ell(tuple(n))


def value_ideal_dims(germ, region):
    return ValueIdealTable(germ, region)


def fiber_class(table, n):
    """Class of {z : v(z) = n exactly} inside the truncated model.

    Inclusion-exclusion over the sublattice of ideals C(n + eps) for
    indicator vectors eps; exact in the Grothendieck ring because the
    union of subspaces is scissored along intersections.  Zero precisely
    when n is not in the value semigroup.
    """
    n = tuple(n)
    d = table.d
    out = MotClass()
    for mask in product((0, 1), repeat=d):
        shifted = tuple(ni + mi for ni, mi in zip(n, mask))
        term = MotClass.monomial(table.D(shifted))
        if sum(mask) % 2:
            out = out - term
        else:
            out = out + term
    return out


_L_MINUS_1 = MotClass.lefschetz() - MotClass.from_int(1)


def ideal_class_from_table(table, n):
    n = tuple(n)
    fib = fiber_class(table, n)
    if fib.is_zero():
        return MotClass()
    rest = tuple(mi - ni for mi, ni in zip(table.M, n))
    return fib.exact_div(_L_MINUS_1).shift(1 - table.ell(rest))


def ideal_class(germ, n):
    """Class of the space of principal ideals with value vector n.

    Orbit formula: the truncated unit group acts freely on the fiber,
    and the orbit of z is z + z*m modulo C(M), of dimension ell(M-n) - 1
    plus the scalar factor, whence
    [I_n] = [F(n)] * (L-1)^-1 * L^(1 - ell(M-n)).
    The result does not depend on M as long as M >= n + gamma + 1.
    """
    return ideal_class_from_table(ValueIdealTable(germ, n), n)


class LocalZeta:
    """The motivic local zeta series and its diagonal."""

    __slots__ = ("germ", "joint", "single", "delta", "conductor")

    def __init__(self, germ, joint, single, delta, conductor):
        self.germ = germ
        self.joint = joint
        self.single = single
        self.delta = delta
        self.conductor = conductor

    def __eq__(self, other):
        return isinstance(other, LocalZeta) and self.joint == other.joint \
            and self.single == other.single and self.delta == other.delta \
            and self.conductor == other.conductor

    def to_json(self):
        return {"delta": self.delta, "conductor": list(self.conductor),
                "joint": self.joint.to_json(),
                "single": self.single.to_json()}

    def __repr__(self):
        return "LocalZeta(d=%d, delta=%d, bound=%d)" \
            % (self.joint.d, self.delta, self.joint.bound)


def default_bound(germ):
    return sum(value_semigroup(germ).conductor) + 4


def local_zeta(germ, bound=None):
    """Z = sum over n in S of [I_n] L^-|n| t^n, up to total degree bound."""
    vs = value_semigroup(germ)
    if bound is None:
        bound = sum(vs.conductor) + 4
    d = vs.d
    table = ValueIdealTable(germ, (bound,) * d)
    terms = {}
    for n in product(*[range(bound + 1)] * d):
        if sum(n) > bound:
            continue
        cls = ideal_class_from_table(table, n)
        if cls.is_zero():
            continue
        terms[n] = cls.shift(-sum(n))
    joint = MotSeries(d, bound, terms)
    return LocalZeta(germ, joint, joint.diagonal(), vs.delta, vs.conductor)


def poincare_series(z):
    """The generalized Poincare series, via the identity Z = L^(delta+1) P."""
    return z.joint.scale(MotClass.monomial(-(z.delta + 1)))


def counting_specialization(series, q):
    """Send L to q in every coefficient."""
    return series.specialize(q)


class OracleCounts:
    """Exhaustive jet-enumeration counts over a prime field.

    ideals[n] is the number of distinct principal ideals with generator
    of value n, counted by grouping enumerated jets by the row space
    they generate.  fibers and proj_fibers count generators and rays.
    """

    __slots__ = ("germ", "q", "bound", "ideals", "fibers", "proj_fibers",
                 "work")

    def __init__(self, germ, q, bound, ideals, fibers, proj_fibers, work):
        self.germ = germ
        self.q = q
        self.bound = bound
        self.ideals = ideals
        self.fibers = fibers
        self.proj_fibers = proj_fibers
        self.work = work

    def to_json(self):
        keys = sorted(self.ideals)
        return {"q": self.q, "bound": self.bound,
                "counts": [{"n": list(n), "ideals": self.ideals[n],
                            "fiber": self.fibers[n],
                            "proj_fiber": self.proj_fibers[n]}
                           for n in keys]}

    def __repr__(self):
        return "OracleCounts(q=%d, bound=%d, %d vectors)" \
            % (self.q, self.bound, len(self.ideals))


def _slot_split(vec, M):
    out = []
    base = 0
    for mi in M:
        out.append(vec[base:base + mi])
        base += mi
    return out


def _value_vector(vec, M, field):
    """Per-branch order of a model vector; None marks an invisible slot."""
    vals = []
    for slot in _slot_split(vec, M):
        o = None
        for i, c in enumerate(slot):
            if not field.is_zero(c):
                o = i
                break
        vals.append(o)
    return vals


def _model_product(u, v, M, field):
    out = []
    for su, sv in zip(_slot_split(u, M), _slot_split(v, M)):
        out.extend(_convolve(list(su), list(sv), len(su), field))
    return out


def brute_force_ideal_counts(germ, bound, budget=None):
    """Count ideals, fibers and rays by enumerating jets over F_q.

    For each value vector n the truncation M = n + gamma + 1 is just
    deep enough that C(M) lies inside z O for every z of value n, so
    ideals are separated by their finite row spaces.  The enumeration
    cost is sum of q^D(n); the budget guards it.
    """
    field = germ.field
    q = field.characteristic
    if q == 0:
        raise ValueError("the jet oracle needs a finite base field")
    if budget is None:
        budget = DEFAULT_BUDGET
    vs = value_semigroup(germ)
    d = vs.d
    ideals = {}
    fibers = {}
    proj = {}
    work = 0
    for n in product(*[range(bound + 1)] * d):
        if sum(n) > bound:
            continue
        M = tuple(ni + ci + 1 for ni, ci in zip(n, vs.conductor))
        jet = _jet_model(germ, M)
        dim = jet.D(n)
        work += q ** dim
        if work > budget:
            raise BudgetExceeded(
                "oracle enumeration passed %d items at n=%s" % (work, n))
        sub = jet.subspace_basis(n)
        assert len(sub) == dim
        nfib = 0
        nproj = 0
        seen = set()
        for z in iterate_span(sub, field):
            vals = _value_vector(z, M, field)
            if any(v is None or v != ni for v, ni in zip(vals, n)):
                continue
            nfib += 1
            lead = next(c for c in z if not field.is_zero(c))
            if lead == field.one:
                nproj += 1
                rows = [_model_product(z, b, M, field) for b in jet.basis]
                _, reduced = rref(rows, field)
                seen.add(tuple(tuple(r) for r in reduced))
        ideals[n] = len(seen)
        fibers[n] = nfib
        proj[n] = nproj
    return OracleCounts(germ, q, bound, ideals, fibers, proj, work)
