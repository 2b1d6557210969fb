"""Value semigroups of curve germs via finite jet models.

The local ring O = k[[x, y]]/(f) embeds into a product of power series
rings, one factor per branch.  Truncating each factor at level M_i gives a
finite dimensional model: the row space of the images of all monomials
x^a y^b.  Everything here is linear algebra over the exact base field:

    D(n) = dim { z in the model : z vanishes to order >= n_i on branch i }

computed as a column-restricted corank.  The degree of singularity is
delta = ||M|| - D(0) for stable M, the conductor is the least c with
D(c) = ||M - c|| (the truncated model of t^c times the integral closure),
and membership of n in the value semigroup is read off from dimension
drops of D around n, or from exact point counts when the base field has
fewer elements than there are branches.
"""

from __future__ import annotations

from itertools import product

from .curves import reduce_germ
from .errors import (BadDenominator, DegenerateReduction, NonStabilized,
                     NotTotallyRational, SmallFieldAmbiguity, WildFailure)
from .fields import is_prime
from .linalg import rank_of_columns, rref


class JetModel:
    """Echelon basis for the image of O in  prod_i k[t]/(t^M_i)."""

    __slots__ = ("germ", "M", "basis", "pivots", "_dcache")

    def __init__(self, germ, M):
        field = germ.field
        M = tuple(M)
        top = max(M) if M else 0
        branches = germ.branches(max(germ.f.degree() ** 2 * 4, top + 2))
        assert len(branches) == len(M)
        xpows = [_power_table(b.x, mi, top, field) for b, mi in zip(branches, M)]
        ypows = [_power_table(b.y, mi, top, field) for b, mi in zip(branches, M)]
        rows = []
        # Monomial images of total degree >= max(M) vanish in every slot,
        # so they cannot enlarge the row space.
        for total in range(top):
            for a in range(total + 1):
                b = total - a
                row = []
                for i, mi in enumerate(M):
                    row.extend(_convolve(xpows[i].get(a), ypows[i].get(b),
                                         mi, field))
                rows.append(row)
        pivots, basis = rref(rows, field)
        self.germ = germ
        self.M = M
        self.basis = basis
        self.pivots = pivots
        self._dcache = {}

    @property
    def dim(self):
        return len(self.basis)

    def column_index(self, i, j):
        return sum(self.M[:i]) + j

    def D(self, n):
        """Dimension of the subspace vanishing to order >= n_i on branch i."""
        n = tuple(n)
        assert all(ni <= mi for ni, mi in zip(n, self.M)), \
            "order bound %s outside truncation %s" % (n, self.M)
        if n in self._dcache:
            return self._dcache[n]
        cols = []
        for i, ni in enumerate(n):
            base = sum(self.M[:i])
            cols.extend(range(base, base + ni))
        val = self.dim - rank_of_columns(self.basis, cols, self.germ.field)
        self._dcache[n] = val
        return val

    def ell(self, n):
        """Codimension of the value-bounded subspace: dim O / C(n)."""
        return self.D((0,) * len(self.M)) - self.D(n)

    def subspace_basis(self, n):
        """Echelon basis of the subspace with orders >= n, as model rows."""
        field = self.germ.field
        cols = []
        for i, ni in enumerate(n):
            base = sum(self.M[:i])
            cols.extend(range(base, base + min(ni, self.M[i])))
        rest = [j for j in range(sum(self.M)) if j not in set(cols)]
        perm = cols + rest
        permuted = [[row[j] for j in perm] for row in self.basis]
        _, reduced = rref(permuted, field)
        out = []
        inv = [0] * len(perm)
        for pos, j in enumerate(perm):
            inv[j] = pos
        for row in reduced:
            if all(field.is_zero(row[k]) for k in range(len(cols))):
                out.append([row[inv[j]] for j in range(len(perm))])
        return out


def _power_table(series, mi, top, field):
    """Powers 0..top-1 of one coordinate series as coefficient lists
    modulo t^mi, skipping powers whose image is zero."""
    one = [field.zero] * mi
    if mi:
        one[0] = field.one
    table = {0: one}
    if series is None:
        return table
    base = list(series.coeffs[:mi])
    cur = one
    for k in range(1, top):
        cur = _convolve(cur, base, mi, field)
        if all(field.is_zero(c) for c in cur):
            break
        table[k] = cur
    return table


def _convolve(u, v, mi, field):
    if u is None or v is None:
        return [field.zero] * mi
    out = [field.zero] * mi
    for i, ci in enumerate(u):
        if field.is_zero(ci):
            continue
        for j in range(mi - i):
            cj = v[j]
            if not field.is_zero(cj):
                out[i + j] = field.add(out[i + j], field.mul(ci, cj))
    return out


def _jet_model(germ, M):
    cache = germ._cache.setdefault("jet_models", {})
    M = tuple(M)
    if M not in cache:
        cache[M] = JetModel(germ, M)
    return cache[M]


def branch_count(germ):
    return len(germ.branches())


def delta_invariant(germ):
    """Codimension of O in its integral closure, with a truncation
    stabilization check (NonStabilized if doubling keeps changing it)."""
    if "delta" in germ._cache:
        return germ._cache["delta"]
    d = branch_count(germ)
    deg = germ.f.degree()
    base = max(4, (deg - 1) * (deg - 2) + 2)
    for _ in range(3):
        m1 = _jet_model(germ, (base,) * d)
        m2 = _jet_model(germ, (2 * base,) * d)
        d1 = base * d - m1.dim
        d2 = 2 * base * d - m2.dim
        if d1 == d2:
            germ._cache["delta"] = d1
            return d1
        base *= 2
    raise NonStabilized("delta kept changing up to truncation %d" % base)


class ValueSemigroup:
    """The value semigroup with its conductor and a membership box."""

    __slots__ = ("germ", "d", "delta", "conductor", "generators",
                 "box_bounds", "members")

    def __init__(self, germ, d, delta, conductor, generators, box_bounds,
                 members):
        self.germ = germ
        self.d = d
        self.delta = delta
        self.conductor = conductor
        self.generators = generators
        self.box_bounds = box_bounds
        self.members = members

    def contains(self, n):
        """Membership for vectors inside the box or beyond the conductor."""
        n = tuple(n)
        if all(ni >= ci for ni, ci in zip(n, self.conductor)):
            return True
        if all(ni <= bi for ni, bi in zip(n, self.box_bounds)):
            return n in self.members
        return semigroup_membership(self.germ, n)

    def box_members(self):
        return sorted(self.members)

    def to_json(self):
        out = {"d": self.d, "delta": self.delta,
               "conductor": list(self.conductor),
               "box_members": [list(n) for n in self.box_members()]}
        if self.generators is not None:
            out["generators"] = self.generators
        return out

    def __eq__(self, other):
        return isinstance(other, ValueSemigroup) and self.d == other.d \
            and self.delta == other.delta \
            and self.conductor == other.conductor \
            and self.members == other.members

    def __repr__(self):
        return "ValueSemigroup(d=%d, delta=%d, conductor=%s)" \
            % (self.d, self.delta, self.conductor)


def _membership_from_jets(jet, n, d, field, mode):
    """Does some element have value exactly n, from jet dimensions."""
    q = field.characteristic
    if mode == "auto":
        mode = "dimension-drop" if q == 0 or d <= q else "point-count"
    if mode == "dimension-drop":
        if q != 0 and d > q:
            raise SmallFieldAmbiguity(
                "%d branches over F_%d: use point counts" % (d, q))
        base = jet.D(n)
        return all(jet.D(_bump(n, i)) < base for i in range(d))
    if mode == "point-count":
        if q == 0:
            raise ValueError("point counts need a finite base field")
        total = 0
        for mask in product((0, 1), repeat=d):
            shifted = tuple(ni + mi for ni, mi in zip(n, mask))
            total += (-1) ** sum(mask) * q ** jet.D(shifted)
        return total > 0
    raise ValueError("unknown membership mode %r" % mode)


def _bump(n, i):
    out = list(n)
    out[i] += 1
    return tuple(out)


def semigroup_membership(germ, n, mode="auto"):
    """Is n the value vector of some element of the local ring."""
    n = tuple(n)
    delta = delta_invariant(germ)
    d = branch_count(germ)
    M = tuple(ni + 2 * delta + 2 for ni in n)
    jet = _jet_model(germ, M)
    return _membership_from_jets(jet, n, d, germ.field, mode)


def value_semigroup(germ, mode="auto"):
    """Compute delta, the conductor, and the semigroup box."""
    if ("semigroup", mode) in germ._cache:
        return germ._cache[("semigroup", mode)]
    delta = delta_invariant(germ)
    d = branch_count(germ)
    field = germ.field
    B = 2 * delta + 1
    M = (B + 2 * delta + 3,) * d
    jet = _jet_model(germ, M)

    def is_conductor(c):
        return jet.D(c) == sum(M) - sum(c)

    c = [B] * d
    assert is_conductor(c), "conductor escaped its theoretical box"
    for i in range(d):
        while c[i] > 0:
            trial = list(c)
            trial[i] -= 1
            if is_conductor(trial):
                c[i] = trial[i]
            else:
                break
    conductor = tuple(c)
    assert sum(conductor) == 2 * delta, \
        "conductor norm %d does not match 2*delta=%d" % (sum(conductor),
                                                         2 * delta)
    box_bounds = tuple(ci + 1 for ci in conductor)
    members = set()
    for n in product(*[range(bi + 1) for bi in box_bounds]):
        if _membership_from_jets(jet, n, d, field, mode):
            members.add(n)
    generators = _numerical_generators(jet, conductor, members, field, mode) \
        if d == 1 else None
    vs = ValueSemigroup(germ, d, delta, conductor, generators, box_bounds,
                        members)
    germ._cache[("semigroup", mode)] = vs
    return vs


def _numerical_generators(jet, conductor, members, field, mode):
    """Minimal generators of a numerical value semigroup."""
    gamma = conductor[0]
    known = {n[0] for n in members}
    mult = min((s for s in known if s > 0), default=1)
    top = gamma + 2 * mult
    elements = {0}
    for s in range(1, top + 1):
        if s >= gamma or s in known:
            elements.add(s)
    gens = []
    for s in sorted(elements):
        if s == 0:
            continue
        if any(s - g in elements and s - g > 0 for g in gens):
            continue
        gens.append(s)
    return gens


def reduction_semigroup_scan(germ, primes, mode="auto"):
    """Compare the rational value semigroup with its reductions mod p."""
    from .resolution import ReductionScanReport, ScanEntry

    reference = value_semigroup(germ, mode)
    entries = []
    for p in primes:
        if not is_prime(p):
            continue
        try:
            vs_p = value_semigroup(reduce_germ(germ, p), mode)
        except BadDenominator:
            entries.append(ScanEntry(p, "BadSemigroup", "bad denominator"))
            continue
        except DegenerateReduction as ex:
            entries.append(ScanEntry(p, "BadSemigroup", "degenerate: %s" % ex))
            continue
        except (NotTotallyRational, WildFailure) as ex:
            entries.append(ScanEntry(p, "Wild", str(ex)))
            continue
        if vs_p.d == reference.d and vs_p.delta == reference.delta \
                and vs_p.conductor == reference.conductor \
                and vs_p.members == reference.members:
            entries.append(ScanEntry(p, "Good", ""))
        elif vs_p.d != reference.d or vs_p.delta != reference.delta:
            entries.append(ScanEntry(
                p, "BadSemigroup",
                "delta %d vs %d, %d branches vs %d"
                % (vs_p.delta, reference.delta, vs_p.d, reference.d)))
        elif vs_p.conductor != reference.conductor:
            entries.append(ScanEntry(
                p, "BadSemigroup", "conductor %s vs %s"
                % (list(vs_p.conductor), list(reference.conductor))))
        else:
            entries.append(ScanEntry(
                p, "BadSemigroup",
                "members differ inside the conductor box"))
    return ReductionScanReport(germ, reference, entries)
