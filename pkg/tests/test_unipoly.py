from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from curveinv import unipoly as up
from curveinv.fields import GF, QQ


def polys(field, max_deg=5):
    if field is QQ:
        entry = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    else:
        entry = st.integers(0, field.characteristic - 1)
    return st.lists(entry, min_size=0, max_size=max_deg + 1).map(
        lambda cs: up.trim(list(cs), field))


@given(polys(QQ), polys(QQ))
@settings(max_examples=60, deadline=None)
def test_div_rem_identity(p, q):
    if up.is_zero(q):
        return
    quo, rem = up.div_rem(p, q, QQ)
    assert up.sub(p, up.add(up.mul(quo, q, QQ), rem, QQ), QQ) == []
    assert up.degree(rem) < up.degree(q)


@given(polys(GF(5)), polys(GF(5)))
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(p, q):
    K = GF(5)
    g = up.gcd(p, q, K)
    if up.is_zero(g):
        assert up.is_zero(p) and up.is_zero(q)
        return
    assert g[-1] == K.one
    for f in (p, q):
        _, rem = up.div_rem(f, g, K)
        assert up.is_zero(rem)


def test_evaluate_horner():
    # 2 - x + 3x^2 at x = 2 is 12
    p = [Fraction(2), Fraction(-1), Fraction(3)]
    assert up.evaluate(p, Fraction(2), QQ) == 12
    K = GF(7)
    assert up.evaluate([2, 6, 3], 2, K) == (2 + 12 + 12) % 7


def test_derivative_product_rule():
    K = GF(5)
    p, q = [1, 2, 3], [4, 0, 1]
    lhs = up.derivative(up.mul(p, q, K), K)
    rhs = up.add(up.mul(up.derivative(p, K), q, K),
                 up.mul(p, up.derivative(q, K), K), K)
    assert lhs == rhs


def test_rational_roots_with_multiplicity():
    # (x - 1)^2 (2x + 3)
    fr = Fraction
    p = up.mul(up.mul([fr(-1), fr(1)], [fr(-1), fr(1)], QQ),
               [fr(3), fr(2)], QQ)
    roots, leftover = up.roots_with_multiplicity(p, QQ)
    assert dict(roots) == {fr(-3, 2): 1, fr(1): 2}
    assert leftover == 0


def test_roots_over_prime_field():
    # x^2 - 1 = (x-1)(x+1) mod 5
    roots, leftover = up.roots_with_multiplicity([4, 0, 1], GF(5))
    assert dict(roots) == {1: 1, 4: 1}
    assert leftover == 0
    # x^2 + 1 has no roots mod 3
    roots, leftover = up.roots_with_multiplicity([1, 0, 1], GF(3))
    assert roots == [] and leftover == 2


def test_monic_and_degree():
    K = GF(7)
    assert up.monic([2, 4], K) == [4, 1]
    assert up.degree([]) == -1
    assert up.degree([3, 0, 5]) == 2
