"""Exact row reduction over a coefficient field.

Matrices are lists of row lists of field elements.  Reduced row echelon
form of a row space is canonical, so echelon bases computed from different
generating sets compare equal entrywise.
"""

from __future__ import annotations

from itertools import product


def rref(rows, field):
    """Reduced row echelon form.

    Returns (pivot_columns, reduced_rows); zero rows are dropped and rows
    are ordered by pivot column.
    """
    rows = [list(r) for r in rows if any(not field.is_zero(c) for c in r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    out = []
    for col in range(ncols):
        pivot_row = None
        for r in rows:
            if not field.is_zero(r[col]):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows.remove(pivot_row)
        inv = field.inv(pivot_row[col])
        pivot_row = [field.mul(inv, c) for c in pivot_row]
        rows = [_eliminate(r, pivot_row, col, field) for r in rows]
        rows = [r for r in rows if any(not field.is_zero(c) for c in r)]
        out = [_eliminate(r, pivot_row, col, field) for r in out]
        out.append(pivot_row)
        pivots.append(col)
        if not rows:
            break
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [pivots[i] for i in order], [out[i] for i in order]


def _eliminate(row, pivot_row, col, field):
    c = row[col]
    if field.is_zero(c):
        return row
    return [field.sub(a, field.mul(c, b)) for a, b in zip(row, pivot_row)]


def rank(rows, field):
    return len(rref(rows, field)[0])


def rank_of_columns(rows, cols, field):
    """Rank of the submatrix obtained by keeping the given columns."""
    if not cols:
        return 0
    sub = [[r[c] for c in cols] for r in rows]
    return rank(sub, field)


def iterate_span(basis, field):
    """Yield every vector in the F_p-span of `basis` as a tuple.

    The zero vector comes first; order is the lexicographic order of
    coefficient tuples.  Only meaningful over a finite prime field.
    """
    if not basis:
        yield ()
        return
    p = field.characteristic
    n = len(basis[0])
    scaled = [[[field.mul(c, x) for x in row] for c in range(p)]
              for row in basis]
    for combo in product(range(p), repeat=len(basis)):
        vec = [0] * n
        for ci, row_versions in zip(combo, scaled):
            if ci:
                row = row_versions[ci]
                for j in range(n):
                    vec[j] = field.add(vec[j], row[j])
        yield tuple(vec)
