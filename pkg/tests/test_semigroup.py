from itertools import product

import pytest

from curveinv.errors import SmallFieldAmbiguity
from curveinv.fields import GF, QQ
from curveinv.semigroup import (delta_invariant, reduction_semigroup_scan,
                                semigroup_membership, value_semigroup)

from conftest import germ


DELTAS = [
    ("x*y", 1),
    ("y^2 - x^3", 1),
    ("y^2 - x^4", 2),
    ("y^2 - x^5", 2),
    ("y^3 - x^4", 3),
    ("y^3 - x^5", 4),
    ("y^2 - x^2 - x^3", 1),
    ("x*y*(x + y)", 3),
    ("(y^2 - x^3)^2 - x^5*y", 8),
]


@pytest.mark.parametrize("text,delta", DELTAS)
def test_delta_invariants(text, delta):
    assert delta_invariant(germ(text)) == delta


def test_delta_gap_count_oracle():
    # for one branch, delta equals the number of gaps of the numerical
    # semigroup; count gaps directly from membership queries
    for text in ("y^2 - x^3", "y^3 - x^4", "y^2 - x^5"):
        g = germ(text)
        vs = value_semigroup(g)
        gaps = sum(1 for s in range(2 * vs.delta + 1)
                   if not vs.contains((s,)))
        assert gaps == vs.delta


NUMERICAL = [
    ("y^2 - x^3", [2, 3]),
    ("y^2 - x^5", [2, 5]),
    ("y^3 - x^4", [3, 4]),
    ("y^3 - x^5", [3, 5]),
    ("y^4 - x^5", [4, 5]),
    ("(y^2 - x^3)^2 - x^5*y", [4, 6, 13]),
]


@pytest.mark.parametrize("text,gens", NUMERICAL)
def test_numerical_generators(text, gens):
    assert value_semigroup(germ(text)).generators == gens


@pytest.mark.parametrize("text,gens", NUMERICAL)
def test_membership_matches_integer_combinations(text, gens):
    # dual route: jet-model membership against plain integer arithmetic
    vs = value_semigroup(germ(text))
    top = vs.conductor[0] + 5
    combos = {0}
    for g in gens:
        combos |= {s + k * g for s in combos for k in range(top // g + 1)}
    for s in range(top):
        assert vs.contains((s,)) == (s in combos)


def test_conductors_and_gorenstein():
    for text, gamma in (("x*y", (1, 1)), ("y^2 - x^3", (2,)),
                        ("y^2 - x^4", (2, 2)), ("x*y*(x + y)", (2, 2, 2)),
                        ("(y^2 - x^3)^2 - x^5*y", (16,))):
        vs = value_semigroup(germ(text))
        assert vs.conductor == gamma
        assert sum(gamma) == 2 * vs.delta
        # everything at or beyond the conductor is in the semigroup
        for off in product(range(2), repeat=vs.d):
            n = tuple(c + o for c, o in zip(gamma, off))
            assert vs.contains(n)
        # the conductor is minimal in every coordinate
        for i in range(vs.d):
            below = tuple(c - (j == i) for j, c in enumerate(gamma))
            if all(b >= 0 for b in below):
                assert not all(
                    vs.contains(tuple(b + o for b, o in
                                      zip(below, off)))
                    for off in product(range(2), repeat=vs.d))


def test_node_semigroup_box():
    vs = value_semigroup(germ("x*y"))
    assert vs.d == 2
    assert vs.delta == 1
    assert vs.conductor == (1, 1)
    # S = {(0,0)} + everything >= (1,1), within the inspection box
    for n in product(range(3), repeat=2):
        expect = n == (0, 0) or (n[0] >= 1 and n[1] >= 1)
        assert vs.contains(n) == expect


def test_tacnode_semigroup_box():
    vs = value_semigroup(germ("y^2 - x^4"))
    members = vs.box_members()
    assert (0, 0) in members
    assert (1, 1) in members
    assert (2, 2) in members
    assert (1, 0) not in members
    assert (2, 1) not in members


def test_membership_modes_agree():
    for text, q in (("y^2 - x^3", 2), ("y^2 - x^3", 3), ("x*y", 3),
                    ("y^2 - x^4", 3)):
        g = germ(text, GF(q))
        vs = value_semigroup(g)
        top = tuple(c + 2 for c in vs.conductor)
        for n in product(*(range(t) for t in top)):
            drop = semigroup_membership(g, n, mode="dimension-drop")
            count = semigroup_membership(g, n, mode="point-count")
            assert drop == count == vs.contains(n)


def test_dimension_drop_needs_enough_scalars():
    g = germ("x*y*(x + y)", GF(2))  # 3 branches, 2 field elements
    with pytest.raises(SmallFieldAmbiguity):
        semigroup_membership(g, (1, 1, 1), mode="dimension-drop")
    # the point-count route works regardless.  Note (1,1,1) is genuinely
    # missing over GF(2): z = a*x + b*y + ... needs a, b and a - b all
    # nonzero, impossible with just two scalars
    assert not semigroup_membership(g, (1, 1, 1), mode="point-count")
    assert semigroup_membership(g, (1, 1, 2), mode="point-count")
    assert not semigroup_membership(g, (1, 0, 0), mode="point-count")


def test_triple_point_semigroup_depends_on_the_field():
    over_q = value_semigroup(germ("x*y*(x + y)"))
    over_3 = value_semigroup(germ("x*y*(x + y)", GF(3)))
    over_2 = value_semigroup(germ("x*y*(x + y)", GF(2)))
    assert (1, 1, 1) in over_q.box_members()
    assert (1, 1, 1) in over_3.box_members()
    assert (1, 1, 1) not in over_2.box_members()
    # delta and the conductor are insensitive to this
    assert over_q.delta == over_3.delta == over_2.delta == 3
    assert over_q.conductor == over_3.conductor == over_2.conductor


def test_semigroup_stable_under_good_reduction():
    ref = value_semigroup(germ("y^2 - x^3 - x^2"))
    for p in (3, 5, 7):
        red = value_semigroup(germ("y^2 - x^3 - x^2", GF(p)))
        assert (red.d, red.delta, red.conductor) == \
            (ref.d, ref.delta, ref.conductor)
        assert red.box_members() == ref.box_members()


def test_reduction_semigroup_scan():
    report = reduction_semigroup_scan(germ("y^2 - x^3 - x^2"),
                                      range(2, 14))
    assert report.bad_primes == [2]
    report = reduction_semigroup_scan(germ("y^2 - x^3"), range(2, 14))
    assert report.bad_primes == []


def test_scan_reports_bad_denominator():
    report = reduction_semigroup_scan(germ("y^2 - 1/5*x^3"), [3, 5])
    assert report.bad_primes == [5]


def test_semigroup_json_shape():
    j = value_semigroup(germ("y^2 - x^3")).to_json()
    assert j["d"] == 1
    assert j["delta"] == 1
    assert j["conductor"] == [2]
    assert j["generators"] == [2, 3]
    assert [0] in j["box_members"]
