from fractions import Fraction

import pytest

from liecone.acs import is_compatible_with, is_tamed_by, matched_orientation, random_acs
from liecone.catalog import catalog_get, family_j
from liecone.exterior import KForm, Subspace, evaluate, wedge
from liecone.hodge import NotUnimodularError, Orientation, phi_zeta
from liecone.lie import LieAlgebra, boundaries, cocycles
from liecone.tameness import (NotTamedError, OrientationMismatchError, TamedError,
                              certify_obstruction, class_coordinates, classify,
                              cone_membership, construct_compatible_form,
                              construct_taming_form, feasibility_oracle, j_cohomology,
                              obstruction_vector)


def f(key, c=1):
    return KForm(4, 2, {key: c})


@pytest.fixture
def std_j():
    return family_j("nil3xR", "standard")


def test_standard_j_report(nil3, std, std_j):
    r = j_cohomology(nil3, std, std_j)
    assert (r.h_plus, r.h_minus, r.b2, r.b_plus) == (3, 1, 4, 2)
    assert r.plus_representatives == (f("12"), f("34"), f("14") - f("23"))
    assert r.minus_representatives == (f("14") + f("23"),)


def test_standard_j_classification(nil3, std, std_j):
    cl = classify(nil3, std, std_j)
    assert cl.tamed and cl.almost_kahler and not cl.integrable
    w = cl.witness
    assert is_compatible_with(nil3, std_j, w)
    assert phi_zeta(std, w, f("12") + f("34")) > 0


def test_abelian_any_j(std):
    g = catalog_get("R4").algebra
    for s in range(5):
        r = j_cohomology(g, std, random_acs(std, s))
        assert (r.h_plus, r.h_minus) == (4, 2)


def test_j_ab_not_tamed(nil3, jab):
    J = jab(1, 0)
    o = matched_orientation(J)
    cl = classify(nil3, o, J)
    assert not cl.tamed and cl.integrable
    assert cl.report.h_minus == cl.report.b_plus == 2
    with pytest.raises(NotTamedError):
        construct_compatible_form(nil3, o, J)
    v = obstruction_vector(nil3, o, J)
    assert certify_obstruction(nil3, J, v)


def test_j_t_obstruction(nil4, std):
    J = family_j("nil4", "J_t", 0)
    v = obstruction_vector(nil4, std, J)
    u = wedge(v, J(v))
    assert u in boundaries(nil4, 2)
    assert all(evaluate(u, z) == 0 for z in cocycles(nil4, 2).basis)


def test_obstruction_on_tamed_raises(nil3, std, std_j):
    with pytest.raises(TamedError):
        obstruction_vector(nil3, std, std_j)


def test_taming_forms(nil3, std, std_j):
    base = construct_compatible_form(nil3, std, std_j)
    for t in (-3, 1, 7):
        beta = t * (f("14") + f("23"))
        w = construct_taming_form(nil3, std, std_j, beta)
        assert w == base + beta and is_tamed_by(nil3, std_j, w)
    assert construct_taming_form(nil3, std, std_j, f("12") * 0) == base
    with pytest.raises(ValueError):
        construct_taming_form(nil3, std, std_j, f("12"))
    with pytest.raises(ValueError):
        construct_taming_form(nil3, std, std_j, f("24") - f("13"))  # anti-invariant, not closed


@pytest.mark.parametrize("coords,expected", [
    ((1, 1, 0), True), ((1, 1, 1), False), ((-1, -1, 0), False), ((2, 3, 2), True),
    ((1, 2, Fraction(-7, 5)), True), ((0, 5, 0), False)])
def test_cone_points(nil3, std, std_j, coords, expected):
    v = cone_membership(nil3, std, std_j, coords)
    assert v.in_compatible_cone == v.in_tamed_cone == expected


def test_cone_with_minus_part(nil3, std, std_j):
    v = cone_membership(nil3, std, std_j, [1, 1, 0], [5])
    assert v.in_tamed_cone and v.minus_part == 5 * (f("14") + f("23"))
    with pytest.raises(ValueError):
        cone_membership(nil3, std, std_j, [1, 1])


def test_cone_not_tamed(nil3, jab):
    J = jab(0, 1)
    v = cone_membership(nil3, matched_orientation(J), J, [1, 0])
    assert not v.in_compatible_cone and not v.in_tamed_cone and "NotTamed" in v.note


def test_class_coordinates(nil3, std, std_j):
    r = j_cohomology(nil3, std, std_j)
    plus, minus = class_coordinates(nil3, r, f("12") + f("13", 9) + f("14") + f("23"))
    assert plus == [1, 0, 0] and minus == [1]


def test_feasibility_oracle(nil3, std, std_j, jab):
    assert feasibility_oracle(nil3, std, std_j)
    J = jab(1, 1)
    assert feasibility_oracle(nil3, matched_orientation(J), J) is False
    g = catalog_get("R4").algebra
    assert all(feasibility_oracle(g, std, random_acs(std, s), trials=10) for s in range(5))


def test_errors(nil3, std, jab):
    bad = LieAlgebra(4, {(1, 2): {2: 1}})
    with pytest.raises(NotUnimodularError):
        classify(bad, std, family_j("nil3xR", "standard"))
    with pytest.raises(OrientationMismatchError):
        classify(nil3, std, jab(1, 0))
    h5 = LieAlgebra(5, {(1, 2): {5: 1}})
    with pytest.raises(ValueError):
        j_cohomology(h5, Orientation.standard(5), family_j("nil3xR", "standard"))


def test_sweep_invariants(std):
    for name in ("nil3xR", "nil4", "sol3xR", "r'30xR"):
        g = catalog_get(name).algebra
        for s in range(20):
            J = random_acs(std, s, sparse=bool(s % 2))
            cl = classify(g, std, J)
            r = cl.report
            assert r.h_plus + r.h_minus == r.b2
            if cl.tamed:
                assert is_compatible_with(g, J, cl.witness)
            else:
                assert certify_obstruction(g, J, cl.witness)
