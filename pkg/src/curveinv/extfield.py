"""Finite extension fields F_{p^m} with table-based arithmetic.

Elements are encoded as integers in [0, p^m): the base-p digits of the
code are the coefficients of the residue polynomial.  Multiplication goes
through discrete log tables on a fixed generator of the unit group, so
field operations inside point-counting loops cost O(1) table lookups plus
digit addition.
"""

from __future__ import annotations

from .errors import CurveInvError
from .fields import is_prime


def factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _poly_mul_mod(a, b, mod, p):
    """Product of coefficient lists modulo a monic poly, over F_p."""
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    dm = len(mod) - 1
    while len(out) > dm:
        lead = out.pop()
        if lead:
            off = len(out) - dm
            for i in range(dm):
                out[off + i] = (out[off + i] - lead * mod[i]) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_powmod(a, n, mod, p):
    result = [1]
    base = list(a)
    while n:
        if n & 1:
            result = _poly_mul_mod(result, base, mod, p)
        base = _poly_mul_mod(base, base, mod, p)
        n >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # a mod b
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b):
            c = r[-1] * inv % p
            off = len(r) - len(b)
            for i in range(len(b)):
                r[off + i] = (r[off + i] - c * b[i]) % p
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    return a


def _is_irreducible(f, p):
    """Rabin test for a monic polynomial over F_p."""
    m = len(f) - 1
    x = [0, 1]
    for ell in factorize(m):
        h = _poly_powmod(x, p ** (m // ell), f, p)
        h = [(c - d) % p for c, d in
             _zip_pad(h, x)]
        while h and h[-1] == 0:
            h.pop()
        g = _poly_gcd(f, h, p)
        if len(g) - 1 != 0:
            return False
    h = _poly_powmod(x, p ** m, f, p)
    h = [(c - d) % p for c, d in _zip_pad(h, x)]
    while h and h[-1] == 0:
        h.pop()
    return not h


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return zip(a, b)


def _find_irreducible(p, m):
    if m == 1:
        return [0, 1]
    # Scan constant-first encodings of monic degree-m polynomials.
    for code in range(p ** m):
        f = []
        c = code
        for _ in range(m):
            f.append(c % p)
            c //= p
        f.append(1)
        if f[0] == 0:
            continue
        if _is_irreducible(f, p):
            return f
    raise CurveInvError("no irreducible polynomial found")  # unreachable


class FqTable:
    """Arithmetic for F_q, q = p^m, on integer-encoded elements."""

    def __init__(self, p, m):
        if not is_prime(p):
            raise ValueError("p must be prime")
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = _find_irreducible(p, m)
        self._build_tables()
        self._squares = None

    def _encode(self, poly):
        code = 0
        for c in reversed(poly):
            code = code * self.p + c
        return code

    def _decode(self, code):
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        while out and out[-1] == 0:
            out.pop()
        return out

    def _build_tables(self):
        p, q = self.p, self.q
        order = q - 1
        if order == 1:
            self.exp = [1]
            self.log = [-1, 0]
            return
        factors = list(factorize(order))
        gen = None
        for cand in range(2, q):
            poly = self._decode(cand)
            ok = True
            for ell in factors:
                h = _poly_powmod(poly, order // ell, self.modulus, p)
                if h == [1]:
                    ok = False
                    break
            if ok:
                gen = poly
                break
        assert gen is not None
        exp = [0] * order
        log = [-1] * q
        cur = [1]
        for k in range(order):
            code = self._encode(cur)
            exp[k] = code
            log[code] = k
            cur = _poly_mul_mod(cur, gen, self.modulus, p)
        assert cur == [1]
        self.exp = exp
        self.log = log

    # -- element operations (codes are ints in [0, q)) --

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mul = 1
        while a or b:
            out += (a % p + b % p) % p * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a):
        if self.m == 1:
            return -a % self.p
        p = self.p
        out = 0
        mul = 1
        while a:
            out += (p - a % p) % p * mul
            a //= p
            mul *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return self.exp[-self.log[a] % (self.q - 1)]

    def pow(self, a, n):
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError
            return 0
        return self.exp[self.log[a] * n % (self.q - 1)]

    def embed(self, c):
        """Image of an F_p residue under the canonical embedding."""
        return c % self.p

    def elements(self):
        return range(self.q)

    def is_square(self, a):
        if self._squares is None:
            sq = bytearray(self.q)
            for z in range(self.q):
                sq[self.mul(z, z)] = 1
            self._squares = sq
        return bool(self._squares[a])

    def quadratic_character(self, a):
        """1 on nonzero squares, -1 on nonsquares, 0 at zero."""
        if a == 0:
            return 0
        return 1 if self.is_square(a) else -1

    def __repr__(self):
        return "FqTable(%d^%d)" % (self.p, self.m)


_tables = {}


def fq_table(p, m):
    key = (p, m)
    if key not in _tables:
        _tables[key] = FqTable(p, m)
    return _tables[key]
