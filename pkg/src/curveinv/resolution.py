"""Embedded resolution of a germ by point blow-ups.

Instead of re-expanding strict transforms as polynomials, the process
follows the branch parametrizations: an infinitely near point is the set
of branches passing through it, together with two flags telling which of
the local coordinate axes are exceptional components.  Under the blow-up
charts

    chart 1:  (x, y) -> (x, y/x - c)      for the direction y/x -> c,
    chart 2:  (x, y) -> (x/y, y)          for the vertical direction,

a parametrized branch transforms by dividing one truncated series by the
other, so multiplicities of infinitely near points are just sums of
minimal coordinate orders.  A point is finished when it carries a single
smooth branch meeting at most one exceptional axis transversally.

Blowing up runs breadth first; children of a point are ordered by the
chart-1 direction constants, chart 2 last, which fixes the multiplicity
sequence deterministically.
"""

from __future__ import annotations

from collections import deque

from .curves import reduce_germ
from .fields import is_prime
from .errors import (BadDenominator, CurveInvError, DegenerateReduction,
                     NotTotallyRational, PrecisionExhausted, WildFailure)
from .series import AbovePrecision


class BlowupStep:
    """One blow-up: the multiplicity of its center and where the center
    sits (a path of direction tokens from the origin)."""

    __slots__ = ("multiplicity", "path")

    def __init__(self, multiplicity, path):
        self.multiplicity = multiplicity
        self.path = path

    def __repr__(self):
        return "BlowupStep(m=%d, at %s)" % (self.multiplicity,
                                            "/".join(self.path) or "origin")


class ResolutionProcess:
    """The full blow-up process of a germ."""

    def __init__(self, germ, steps):
        self.germ = germ
        self.steps = steps

    @property
    def N(self):
        return len(self.steps)

    @property
    def multiplicities(self):
        return [s.multiplicity for s in self.steps]

    @property
    def exceptional_components(self):
        # One new exceptional curve per blow-up.
        return len(self.steps)

    def to_json(self):
        return {"N": self.N,
                "multiplicities": self.multiplicities,
                "exceptional_components": self.exceptional_components}

    def __repr__(self):
        return "ResolutionProcess(N=%d, %s)" % (self.N, self.multiplicities)


def same_process(a, b):
    """Processes agree: same length and same multiplicity sequence."""
    return a.multiplicities == b.multiplicities


class _Point:
    __slots__ = ("branches", "exc_x", "exc_y", "path")

    def __init__(self, branches, exc_x, exc_y, path):
        self.branches = branches
        self.exc_x = exc_x
        self.exc_y = exc_y
        self.path = path


def _ord(series):
    if series is None:
        return None
    o = series.order()
    if isinstance(o, AbovePrecision):
        raise PrecisionExhausted("order invisible at precision %d"
                                 % o.precision)
    return o


def _min_ord(xs, ys):
    ox, oy = _ord(xs), _ord(ys)
    if ox is None:
        return oy
    if oy is None:
        return ox
    return min(ox, oy)


def _resolved(point):
    if len(point.branches) != 1:
        return False
    xs, ys = point.branches[0]
    ox, oy = _ord(xs), _ord(ys)
    if point.exc_x and point.exc_y:
        return False
    mo = min(o for o in (ox, oy) if o is not None)
    if mo != 1:
        return False
    if point.exc_x and ox != 1:
        return False
    if point.exc_y and oy != 1:
        return False
    return True


def _exact_zero_bound(germ):
    # A branch not contained in a line meets it with order <= deg f.
    return germ.f.degree() + 1


def resolve_germ(germ, max_steps=None):
    """Blow up until every branch point is a normal crossing."""
    deg = germ.f.degree()
    if max_steps is None:
        max_steps = 16 + 4 * deg * deg
    prec = 4 * deg * deg
    for _ in range(8):
        try:
            return _resolve_with_precision(germ, prec, max_steps)
        except PrecisionExhausted:
            prec *= 2
    raise WildFailure("resolution did not stabilize for %s"
                      % germ.f.to_str())


def _resolve_with_precision(germ, prec, max_steps):
    field = germ.field
    zero_bound = _exact_zero_bound(germ)
    branches = germ.branches(prec)
    root = _Point([(b.x, b.y) for b in branches], False, False, ())
    queue = deque([root])
    steps = []
    while queue:
        point = queue.popleft()
        if _resolved(point):
            continue
        if len(steps) >= max_steps:
            raise WildFailure("blow-up budget exhausted for %s"
                              % germ.f.to_str())
        m = sum(_min_ord(xs, ys) for xs, ys in point.branches)
        steps.append(BlowupStep(m, point.path))
        chart1 = {}
        chart2 = []
        for xs, ys in point.branches:
            ox, oy = _ord(xs), _ord(ys)
            if ox is not None and (oy is None or ox <= oy):
                if ys is None:
                    c, resid = field.zero, None
                else:
                    q = ys.divide(xs)
                    c = q.coefficient(0)
                    resid = q.add_constant(field.neg(c))
                    if resid.is_zero_to_precision():
                        if resid.precision < zero_bound:
                            raise PrecisionExhausted(
                                "cannot certify a line at precision %d"
                                % resid.precision)
                        resid = None
                chart1.setdefault(c, []).append((xs, resid))
            else:
                if xs is None:
                    resid = None
                else:
                    resid = xs.divide(ys)
                chart2.append((resid, ys))
        for c in sorted(chart1, key=field.sort_key):
            new_exc_y = point.exc_y and field.is_zero(c)
            queue.append(_Point(chart1[c], True, new_exc_y,
                                point.path + ("y/x=%s" % field.to_str(c),)))
        if chart2:
            queue.append(_Point(chart2, point.exc_x, True,
                                point.path + ("x/y=0",)))
    return ResolutionProcess(germ, steps)


def good_reduction_scan(germ, primes):
    """Compare the blow-up process of a rational germ with its reductions.

    Statuses per prime: "Good" (same multiplicity sequence), "BadProcess"
    (different sequence, or reduction degenerates), "Wild" (branch
    computation failed in small characteristic).  Bad primes are findings,
    not errors.
    """
    reference = resolve_germ(germ)
    entries = []
    for p in primes:
        if is_prime(p):
            entries.append(_scan_one(germ, p, reference))
    return ReductionScanReport(germ, reference, entries)


def _scan_one(germ, p, reference):
    try:
        germ_p = reduce_germ(germ, p)
        process = resolve_germ(germ_p)
    except BadDenominator:
        return ScanEntry(p, "BadProcess", "bad denominator")
    except DegenerateReduction as ex:
        return ScanEntry(p, "BadProcess", "degenerate: %s" % ex)
    except (NotTotallyRational, WildFailure) as ex:
        return ScanEntry(p, "Wild", str(ex))
    if same_process(reference, process):
        return ScanEntry(p, "Good", "")
    return ScanEntry(
        p, "BadProcess", "multiplicity sequence %s vs %s"
        % (process.multiplicities, reference.multiplicities))


class ScanEntry:
    __slots__ = ("prime", "status", "detail")

    def __init__(self, prime, status, detail):
        self.prime = prime
        self.status = status
        self.detail = detail

    def to_json(self):
        out = {"prime": self.prime, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out

    def __repr__(self):
        return "ScanEntry(%d, %s)" % (self.prime, self.status)


class ReductionScanReport:
    __slots__ = ("germ", "reference", "entries")

    def __init__(self, germ, reference, entries):
        self.germ = germ
        self.reference = reference
        self.entries = entries

    @property
    def bad_primes(self):
        return [e.prime for e in self.entries if e.status != "Good"]

    def to_json(self):
        return {"entries": [e.to_json() for e in self.entries],
                "bad": self.bad_primes}

    def __repr__(self):
        return "ReductionScanReport(bad=%s)" % self.bad_primes
