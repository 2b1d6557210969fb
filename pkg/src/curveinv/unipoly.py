"""Dense univariate polynomial helpers over an exact field.

Polynomials are plain lists of coefficients, constant term first.  These
are working tools for edge polynomials, content computations and root
finding; they are not a public polynomial type.
"""

from __future__ import annotations

from fractions import Fraction


def trim(p, field):
    while p and field.is_zero(p[-1]):
        p.pop()
    return p


def degree(p):
    """Degree with the convention deg 0 = -1."""
    return len(p) - 1


def is_zero(p):
    return not p


def add(p, q, field):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else field.zero
        b = q[i] if i < len(q) else field.zero
        out.append(field.add(a, b))
    return trim(out, field)


def sub(p, q, field):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else field.zero
        b = q[i] if i < len(q) else field.zero
        out.append(field.sub(a, b))
    return trim(out, field)


def scale(p, c, field):
    if field.is_zero(c):
        return []
    return [field.mul(c, a) for a in p]


def mul(p, q, field):
    if not p or not q:
        return []
    out = [field.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if field.is_zero(a):
            continue
        for j, b in enumerate(q):
            if not field.is_zero(b):
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return trim(out, field)


def div_rem(p, q, field):
    """Quotient and remainder of p by q (q nonzero)."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [field.zero] * max(0, len(p) - len(q) + 1)
    inv_lead = field.inv(q[-1])
    while len(r) >= len(q):
        c = field.mul(r[-1], inv_lead)
        d = len(r) - len(q)
        quo[d] = c
        for i, b in enumerate(q):
            r[d + i] = field.sub(r[d + i], field.mul(c, b))
        r.pop()
        trim(r, field)
        if not r:
            break
    return trim(quo, field), r


def monic(p, field):
    if not p:
        return p
    inv = field.inv(p[-1])
    return [field.mul(inv, a) for a in p]


def gcd(p, q, field):
    """Monic gcd, with gcd(p, 0) = monic(p)."""
    a, b = list(p), list(q)
    while b:
        a, b = b, div_rem(a, b, field)[1]
    return monic(a, field)


def derivative(p, field):
    out = []
    for i in range(1, len(p)):
        out.append(field.mul(field.coerce(i), p[i]))
    return trim(out, field)


def evaluate(p, x, field):
    acc = field.zero
    for c in reversed(p):
        acc = field.add(field.mul(acc, x), c)
    return acc


def _int_divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_root_candidates(p):
    # Clear denominators, then p/q candidates from trailing and leading
    # integer coefficients.
    from math import lcm

    den = lcm(*[c.denominator for c in p]) if p else 1
    ints = [int(c * den) for c in p]
    lead = ints[-1]
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    trail = ints[k]
    cands = [Fraction(0)]
    for num in _int_divisors(trail):
        for d in _int_divisors(lead):
            cands.append(Fraction(num, d))
            cands.append(Fraction(-num, d))
    seen = set()
    out = []
    for c in cands:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def roots_with_multiplicity(p, field):
    """All roots of p lying in the field, with multiplicities.

    Returns (roots, leftover_degree) where roots is a list of (root, mult)
    sorted by the field sort key and leftover_degree is the degree of the
    factor with no root in the field.  Over QQ the candidates come from the
    rational root theorem; over F_p the search is exhaustive.
    """
    if not p:
        raise ZeroDivisionError("zero polynomial has every root")
    if field.characteristic == 0:
        candidates = _rational_root_candidates(p)
    else:
        candidates = list(field.elements())
    current = list(p)
    roots = []
    for r in candidates:
        if degree(current) < 1:
            break
        m = 0
        while degree(current) >= 1 and \
                field.is_zero(evaluate(current, r, field)):
            current, rem = div_rem(current, [field.neg(r), field.one], field)
            assert not rem
            m += 1
        if m:
            roots.append((r, m))
    roots.sort(key=lambda rm: field.sort_key(rm[0]))
    return roots, degree(current)
