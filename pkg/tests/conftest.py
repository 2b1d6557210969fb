import pytest

from curveinv.curves import CurveGerm
from curveinv.fields import GF, QQ


def germ(text, field=QQ):
    return CurveGerm.from_string(text, field)


@pytest.fixture
def cusp():
    return germ("y^2 - x^3")


@pytest.fixture
def node():
    return germ("x*y")


@pytest.fixture
def tacnode():
    return germ("y^2 - x^4")


@pytest.fixture
def e6():
    return germ("y^3 - x^4")
