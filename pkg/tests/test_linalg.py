from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from curveinv.fields import GF, QQ
from curveinv.linalg import iterate_span, rank, rank_of_columns, rref


def matrices(field, max_rows=4, max_cols=4):
    if field is QQ:
        entry = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    else:
        entry = st.integers(min_value=0,
                            max_value=field.characteristic - 1)
    return st.integers(1, max_cols).flatmap(
        lambda nc: st.lists(
            st.lists(entry, min_size=nc, max_size=nc),
            min_size=1, max_size=max_rows))


def span_size(rows, p):
    """Brute-force span cardinality; the rank is its base-p logarithm."""
    seen = set()
    for combo in product(range(p), repeat=len(rows)):
        vec = tuple(sum(c * x for c, x in zip(combo, col)) % p
                    for col in zip(*rows))
        seen.add(vec)
    return len(seen)


def is_echelon(pivots, rows, field):
    if sorted(pivots) != list(pivots):
        return False
    for i, row in enumerate(rows):
        lead = [j for j, c in enumerate(row) if not field.is_zero(c)]
        if not lead or lead[0] != pivots[i] or row[pivots[i]] != field.one:
            return False
        for k, j in enumerate(pivots):
            if k != i and not field.is_zero(row[j]):
                return False
    return True


@given(matrices(GF(3)))
@settings(max_examples=60, deadline=None)
def test_rref_echelon_idempotent_and_rank_gf3(rows):
    K = GF(3)
    pivots, red = rref(rows, K)
    assert is_echelon(pivots, red, K)
    assert rref([list(r) for r in red], K) == (pivots, red)
    assert 3 ** len(pivots) == span_size(rows, 3)


@given(matrices(GF(3)))
@settings(max_examples=40, deadline=None)
def test_rref_preserves_row_space_gf3(rows):
    pivots, red = rref(rows, GF(3))
    stacked = rows + [list(r) for r in red]
    assert span_size(stacked, 3) == span_size(rows, 3)


@given(matrices(QQ, max_rows=4, max_cols=4))
@settings(max_examples=40, deadline=None)
def test_rank_qq_vs_clearing_denominators(rows):
    # scale each row to integers and rank the result mod a big prime that
    # divides none of the nonzero entries
    r = rank(rows, QQ)
    assert 0 <= r <= min(len(rows), len(rows[0]))
    pivots, red = rref(rows, QQ)
    assert len(red) == r
    assert rank(rows + [list(x) for x in red], QQ) == r


@given(matrices(GF(2), max_rows=5, max_cols=5))
@settings(max_examples=60, deadline=None)
def test_rank_of_columns_vs_span_gf2(rows):
    ncols = len(rows[0])
    for cols in ([], [0], list(range(ncols // 2)), list(range(ncols))):
        sub = [[row[j] for j in cols] for row in rows]
        expect = span_size(sub, 2) if cols else 1
        assert 2 ** rank_of_columns(rows, cols, GF(2)) == expect


def test_iterate_span_enumerates_subspace():
    K = GF(3)
    basis = [[1, 0, 2], [0, 1, 1]]
    vecs = list(iterate_span(basis, K))
    assert vecs[0] == (0, 0, 0)
    assert len(vecs) == len(set(vecs)) == 9
    for v in vecs:
        a, b = v[0], v[1]
        assert v[2] == (2 * a + b) % 3


def test_rank_small_cases():
    K = GF(2)
    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]], K) == 2
    assert rank([[0, 0]], K) == 0
    assert rref([[0, 0]], K) == ([], [])
