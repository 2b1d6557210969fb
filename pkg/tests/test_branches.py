import pytest

from curveinv.branches import puiseux_branches, substitute_branch, value_of
from curveinv.curves import CurveGerm
from curveinv.errors import NotTotallyRational
from curveinv.fields import GF, QQ

from conftest import germ


def orders(b):
    ox, oy = b.orders()
    return (ox if b.x is not None else None,
            oy if b.y is not None else None)


def test_cusp_has_one_branch_t2_t3(cusp):
    bs = puiseux_branches(cusp, 8)
    assert len(bs) == 1
    b = bs[0]
    assert orders(b) == (2, 3)
    assert b.x.coeffs[2] == 1 and b.y.coeffs[3] == 1


def test_node_branches_are_the_axes(node):
    bs = puiseux_branches(node, 6)
    assert len(bs) == 2
    assert {(b.x is None, b.y is None) for b in bs} == {(False, True),
                                                       (True, False)}


def test_tacnode_branches(tacnode):
    bs = puiseux_branches(tacnode, 8)
    assert len(bs) == 2
    for b in bs:
        assert orders(b) == (1, 2)
    # the two second coefficients are +-1
    seconds = sorted(b.y.coeffs[2] for b in bs)
    assert seconds == [-1, 1]


def test_every_branch_satisfies_the_equation():
    for text in ("y^2 - x^3", "x*y", "y^2 - x^4", "y^3 - x^4",
                 "y^2 - x^2 - x^3", "(y^2 - x^3)^2 - x^5*y"):
        g = germ(text)
        for b in puiseux_branches(g, 12):
            assert substitute_branch(g.f, b).is_zero_to_precision()


def test_branch_count_drops_mod_two():
    # y^2 - x^2 - x^3 has two branches over Q but is irreducible mod 2:
    # a square root of 1 + x would need odd-degree terms under Frobenius
    assert len(puiseux_branches(germ("y^2 - x^2 - x^3"), 10)) == 2
    assert len(puiseux_branches(germ("y^2 - x^2 - x^3", GF(2)), 10)) == 1
    assert len(puiseux_branches(germ("y^2 - x^2 - x^3", GF(3)), 10)) == 2


def test_conjugate_tangents_rejected():
    # y^2 = 2x^2 needs sqrt(2), not in GF(3)
    with pytest.raises(NotTotallyRational):
        puiseux_branches(germ("y^2 - 2*x^2", GF(3)), 8)


def test_ordering_is_deterministic():
    g = germ("x*y*(x + y)")
    first = [b.to_json() for b in puiseux_branches(g, 6)]
    second = [b.to_json() for b in puiseux_branches(g, 6)]
    assert first == second
    assert len(first) == 3


def test_value_of_polynomials_on_cusp(cusp):
    from curveinv.curves import parse_curve
    bs = cusp.branches(10)
    assert value_of(parse_curve("y - x"), bs) == (2,)
    assert value_of(parse_curve("x^2 + y^3"), bs) == (4,)
    assert value_of(parse_curve("y^2"), bs) == (6,)


def test_branch_cache_recomputes_at_higher_precision(cusp):
    low = cusp.branches(4)
    high = cusp.branches(9)
    assert high[0].precision >= 9
    assert cusp.branches(6)[0].precision >= 9  # cached best is reused
    assert low[0].x.coeffs[2] == high[0].x.coeffs[2]
