from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from curveinv.fields import GF, QQ
from curveinv.series import AbovePrecision, TruncSeries

PREC = 8


def ser(coeffs, field=QQ, precision=PREC):
    return TruncSeries(field, [field.coerce(c) for c in coeffs], precision)


def series_strategy():
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.lists(coeff, min_size=0, max_size=PREC).map(ser)


def naive_product(a, b):
    out = [Fraction(0)] * PREC
    for i in range(PREC):
        for j in range(PREC - i):
            out[i + j] += a.coefficient(i) * b.coefficient(j)
    return out


@given(series_strategy(), series_strategy())
@settings(max_examples=60, deadline=None)
def test_product_matches_naive_convolution(a, b):
    c = a * b
    expect = naive_product(a, b)
    for i in range(PREC):
        assert c.coefficient(i) == expect[i]


@given(series_strategy(), series_strategy())
@settings(max_examples=60, deadline=None)
def test_additive_group(a, b):
    assert (a + b) - b == a
    assert (a - a).is_zero_to_precision()
    assert (-a) + a == ser([])


def test_inverse_is_two_sided():
    s = ser([1, 2, 0, -1, Fraction(1, 3)])
    inv = s.inverse()
    one = ser([1])
    assert s * inv == one
    assert inv * s == one


def test_divide_round_trips():
    a = ser([0, 1, 1])
    b = ser([2, 0, 5])
    assert (a * b).divide(b) == a
    # division by higher order shifts the precision window down
    t2 = ser([0, 0, 3, 1])
    q = (a * t2).divide(t2)
    for i in range(q.precision):
        assert q.coefficient(i) == a.coefficient(i)


def test_order_and_shift():
    s = ser([0, 0, 4, 1])
    assert s.order() == 2
    assert s.shift(3).order() == 5
    assert ser([]).order() == AbovePrecision(PREC)
    assert ser([]).is_zero_to_precision()


def test_pow_matches_repeated_multiplication():
    s = ser([1, 1], GF(5))
    cube = s * s * s
    assert s ** 3 == cube
    assert s ** 0 == ser([1], GF(5))


def test_truncate_drops_tail():
    s = ser([1, 2, 3, 4, 5])
    t = s.truncate(3)
    assert t.precision == 3
    assert t.coefficient(2) == 3


def test_char_p_coefficients_wrap():
    s = ser([1, 1], GF(2))
    sq = s * s
    assert sq.coefficient(0) == 1
    assert sq.coefficient(1) == 0
    assert sq.coefficient(2) == 1
