from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liecone.exterior import (ExteriorError, KForm, KVector, Subspace, basis_indices,
                              covector, evaluate, factor_simple, is_simple, vector,
                              wedge, wedge_all)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def forms(n, k, cls=KForm):
    return st.lists(small, min_size=len(basis_indices(n, k)),
                    max_size=len(basis_indices(n, k))).map(lambda c: cls.from_coords(n, k, c))


def test_wedge_of_coframe():
    f1, f2 = KForm.basis(4, (1,)), KForm.basis(4, (2,))
    assert wedge(f1, f2) == KForm(4, 2, {"12": 1})
    assert wedge(f2, f1) == KForm(4, 2, {"12": -1})


def test_symplectic_square():
    w = KForm(4, 2, {"12": 1, "34": 1})
    assert wedge(w, w) == KForm(4, 4, {"1234": 2})


def test_unsorted_keys_pick_up_sign():
    assert KForm(4, 2, {"21": 3}) == KForm(4, 2, {"12": -3})
    assert KForm(4, 2, {"11": 1}) == 0


def test_grade_overflow_and_mixing_rejected():
    with pytest.raises(ExteriorError):
        wedge(KForm.basis(4, (1, 2, 3)), KForm.basis(4, (1, 4)))
    with pytest.raises(ExteriorError):
        wedge(KForm.basis(4, (1,)), KVector.basis(4, (2,)))
    with pytest.raises(ExteriorError):
        wedge(KForm.basis(4, (1,)), KForm.basis(3, (2,)))


def test_floats_rejected():
    with pytest.raises((ExteriorError, TypeError)):
        KForm(4, 1, {"1": 0.5})


def test_evaluate_is_determinant():
    a = KForm.basis(3, (1, 2, 3))
    u = wedge_all([vector([1, 2, 0]), vector([0, 1, 0]), vector([3, 1, 2])])
    assert evaluate(u, a) == 2


def test_form_call_matches_evaluate():
    a = KForm(4, 2, {"12": 1, "34": 2})
    x, y = vector([1, 0, 1, 0]), vector([0, 1, 0, 1])
    assert a(x, y) == evaluate(wedge(x, y), a) == 3


@settings(max_examples=60, deadline=None)
@given(forms(4, 1), forms(4, 2), forms(4, 1))
def test_graded_commutativity_and_associativity(a, b, c):
    assert wedge(a, b) == wedge(b, a)
    assert wedge(a, c) == -wedge(c, a)
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@settings(max_examples=60, deadline=None)
@given(forms(4, 2, KVector))
def test_is_simple_matches_square(u):
    assert is_simple(u) == (not wedge(u, u))


@settings(max_examples=60, deadline=None)
@given(forms(5, 1, KVector), forms(5, 1, KVector))
def test_factor_simple_roundtrip(x, y):
    u = wedge(x, y)
    if u:
        v, w = factor_simple(u)
        assert wedge(v, w) == u


def test_factor_simple_example():
    v, w = factor_simple(KVector(4, 2, {"12": 1, "13": 1}))
    assert v == vector([1, 0, 0, 0])
    assert w == vector([0, 1, 1, 0])


def test_factor_non_simple_raises():
    with pytest.raises(ExteriorError):
        factor_simple(KVector(4, 2, {"12": 1, "34": 1}))


def test_subspace_operations():
    a = Subspace.span([KForm(4, 2, {"12": 1}), KForm(4, 2, {"34": 1})])
    b = Subspace.span([KForm(4, 2, {"12": 1, "34": 1}), KForm(4, 2, {"13": 1})])
    cap = a & b
    assert cap.dim == 1 and KForm(4, 2, {"12": 2, "34": 2}) in cap
    assert (a + b).dim == 3
    assert a == Subspace.span([KForm(4, 2, {"12": 1, "34": 1}), KForm(4, 2, {"12": 1})])
    assert a.coordinates(KForm(4, 2, {"13": 1})) is None
    assert Subspace.full(KForm, 4, 2).dim == 6
    assert Subspace.zero(KForm, 4, 2).dim == 0


def test_covector_and_repr():
    assert repr(KForm(4, 2, {"12": 1, "34": 2})) == "f^12 + 2 f^34"
    assert covector([0, 1, 0]) == KForm.basis(3, (2,))
    assert isinstance(KForm(4, 1, {"1": Fraction(1, 3)})[(1,)], Fraction)
