from fractions import Fraction

import pytest

from liecone.exterior import ExteriorError, KForm, KVector, Subspace, evaluate
from liecone.lie import (JacobiError, LieAlgebra, LieAlgebraError, betti, betti_numbers,
                         boundary, ce_d, check_jacobi, coboundaries, cocycles, cycles,
                         homology_betti, is_unimodular)


def f(key, c=1, n=4):
    return KForm(n, len(key), {key: c})


def test_nil3_differential(nil3):
    assert ce_d(nil3, f("2")) == -f("13")
    assert ce_d(nil3, f("1")) == 0
    assert cocycles(nil3, 2) == Subspace.span([f("12"), f("13"), f("14"), f("23"), f("34")])
    assert coboundaries(nil3, 2) == Subspace.span([f("13")])


def test_nil3_boundary(nil3):
    assert boundary(nil3, KVector(4, 2, {"13": 1})) == KVector(4, 1, {"2": 1})


def test_nil4(nil4):
    assert ce_d(nil4, f("1")) == f("24")
    assert boundary(nil4, KVector(4, 2, {"24": 1})) == -KVector(4, 1, {"1": 1})
    assert cocycles(nil4, 2) == Subspace.span([f("14"), f("23"), f("24"), f("34")])
    assert betti_numbers(nil4) == (1, 2, 2, 2, 1)


def test_betti(nil3):
    assert betti_numbers(nil3) == (1, 3, 4, 3, 1)
    assert betti_numbers(LieAlgebra.abelian(4)) == (1, 4, 6, 4, 1)
    for k in range(5):
        assert homology_betti(nil3, k) == betti(nil3, k)


def test_jacobi_violation_reported():
    with pytest.raises(JacobiError) as exc:
        LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    assert exc.value.triple == (1, 2, 3)
    bad = LieAlgebra.unchecked(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    assert not check_jacobi(bad)


def test_from_brackets_orders_and_duplicates():
    g = LieAlgebra.from_brackets(4, [((4, 2), {1: 1})])
    assert g.constant(2, 4, 1) == -1 and g.constant(4, 2, 1) == 1
    with pytest.raises(LieAlgebraError):
        LieAlgebra.from_brackets(4, [((1, 2), {3: 1}), ((2, 1), {3: 1})])
    with pytest.raises(LieAlgebraError):
        LieAlgebra.from_brackets(4, [((2, 2), {3: 1})])
    with pytest.raises(LieAlgebraError):
        LieAlgebra(4, {(2, 1): {3: 1}})


def test_unimodularity():
    assert not is_unimodular(LieAlgebra(4, {(1, 2): {2: 1}}))
    assert is_unimodular(LieAlgebra.from_brackets(4, [((4, 1), {1: 1}), ((2, 4), {2: 1})]))


def test_d_squared_and_adjointness_on_h5():
    g = LieAlgebra(5, {(1, 2): {5: 1}, (3, 4): {5: 1}})
    a = KForm(5, 1, {"5": 1})
    assert ce_d(g, a) == -KForm(5, 2, {"12": 1, "34": 1})
    assert ce_d(g, ce_d(g, a)) == 0
    w = KVector(5, 2, {"12": 3, "35": 1})
    assert evaluate(boundary(g, w), a) == -evaluate(w, ce_d(g, a))  # sign (-1)^(k+1), k = 2


def test_grade_errors(nil3):
    with pytest.raises(ExteriorError):
        ce_d(nil3, f("1234"))
    with pytest.raises(ExteriorError):
        cocycles(nil3, 5)
