from fractions import Fraction

import pytest

from curveinv.curves import CurveGerm, GlobalCurve
from curveinv.errors import (CurveSyntaxError, InvalidGerm,
                             NotTotallyRational, ZeroPolynomial)
from curveinv.fields import GF, QQ

from conftest import germ


def test_germ_validation():
    with pytest.raises(ZeroPolynomial):
        CurveGerm.from_string("x - x")
    with pytest.raises(InvalidGerm):
        CurveGerm.from_string("x*y + 1")  # unit
    with pytest.raises(InvalidGerm):
        CurveGerm.from_string("x + 2")  # does not pass through the origin
    with pytest.raises(InvalidGerm):
        CurveGerm.from_string("(y - x^2)^2")  # repeated factor
    with pytest.raises(CurveSyntaxError):
        CurveGerm.from_string("y^^2")


def test_germ_equality_and_field():
    a = germ("y^2 - x^3")
    b = germ("y^2 - x^3")
    assert a == b and hash(a) == hash(b)
    assert a.field is QQ
    assert germ("y^2 - x^3", GF(5)).field is GF(5)


def test_nodal_cubic_global():
    X = GlobalCurve.from_string("y^2*z - x^3 - x^2*z", 3)
    assert X.q == 3
    assert X.r == 1
    sp = X.singular[0]
    assert sp.point_str() == "(0:0:1)"
    assert sp.germ.f.multiplicity_at_origin() == 2
    assert X.genus_smooth_model() == 0


def test_cuspidal_cubic_global():
    X = GlobalCurve.from_string("y^2*z - x^3", 2)
    assert X.r == 1
    assert X.genus_smooth_model() == 0
    # delta of the cusp germ accounts for the full genus drop
    assert X.singular[0].germ.f.degree() >= 2


def test_smooth_conic_global():
    X = GlobalCurve.from_string("x^2 + y^2 - z^2", 5)
    assert X.r == 0
    assert X.genus_smooth_model() == 0


def test_fermat_cubic_smooth_over_f2():
    X = GlobalCurve.from_string("x^3 + y^3 + z^3", 2)
    assert X.r == 0
    assert X.genus_smooth_model() == 1


def test_singular_point_away_from_origin():
    # nodal cubic with x replaced by x - z: the node moves to (1:0:1)
    X = GlobalCurve.from_string(
        "y^2*z - (x - z)^3 - (x - z)^2*z", 7)
    assert X.r == 1
    sp = X.singular[0]
    assert sp.point_str() == "(1:0:1)"
    assert sp.germ.f.multiplicity_at_origin() == 2


def test_conjugate_singular_branches_rejected():
    # the singular point itself is rational, so construction succeeds;
    # the branch computation then needs sqrt(2), missing from GF(3)
    X = GlobalCurve.from_string("y^2*z - 2*x^2*z - x^3", 3)
    assert X.r == 1
    with pytest.raises(NotTotallyRational):
        X.singular[0].germ.branches(8)


def test_singular_point_over_extension_rejected():
    # line z = 0 meets the conic x^2 + y^2 = 0 only at (i:1:0) with
    # i^2 = -1, which lies in GF(9) but not GF(3)
    with pytest.raises(NotTotallyRational):
        GlobalCurve.from_string("(x^2 + y^2)*z", 3)


def test_nonreduced_projective_curve_rejected():
    with pytest.raises(InvalidGerm):
        GlobalCurve.from_string("x^2*z - 2*x*y*z + y^2*z", 5)
