from fractions import Fraction

import pytest

from liecone.acs import AlmostComplexStructure
from liecone.catalog import CatalogError, catalog_get, catalog_list, family_j
from liecone.lie import betti, check_jacobi, is_unimodular


def test_names():
    assert catalog_list() == ["R4", "nil3xR", "nil4", "sol3xR", "r'30xR"]


def test_brackets_verbatim():
    assert catalog_get("nil3xR").algebra.structure == {(1, 3): {2: 1}}
    g = catalog_get("nil4").algebra
    assert g.constant(4, 2, 1) == 1 and g.constant(4, 3, 2) == 1
    s = catalog_get("sol3xR").algebra
    assert s.constant(4, 1, 1) == 1 and s.constant(2, 4, 2) == 1
    r = catalog_get("r'30xR").algebra
    assert r.constant(1, 3, 2) == 1 and r.constant(2, 1, 3) == 1


def test_expectations_recompute():
    from liecone.hodge import Orientation, b_plus
    for name in catalog_list():
        e = catalog_get(name)
        assert check_jacobi(e.algebra) and is_unimodular(e.algebra) == e.expected.unimodular
        assert b_plus(e.algebra, Orientation.standard(4)) == e.expected.b_plus
        assert betti(e.algebra, 2) == e.expected.b2


def test_families():
    J = family_j("nil3xR", "J_ab", 1, 0)
    assert J.matrix[1] == (1, 0, 0, -1)
    assert family_j("nil4", "J_t", 0) == AlmostComplexStructure(
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    assert family_j("nil4", "J_t", "1/2").matrix[0][2] == Fraction(4, 5)


def test_family_constraints():
    with pytest.raises(ValueError):
        family_j("nil3xR", "J_ab", 0, 0)
    with pytest.raises(ValueError):
        family_j("nil4", "J_t", 1)
    with pytest.raises(CatalogError):
        family_j("nil4", "J_ab", 1, 1)
    with pytest.raises(CatalogError):
        catalog_get("sl2")
