import pytest

from liecone.acs import AlmostComplexStructure
from liecone.catalog import catalog_get, family_j
from liecone.hodge import Orientation


@pytest.fixture
def nil3():
    return catalog_get("nil3xR").algebra


@pytest.fixture
def nil4():
    return catalog_get("nil4").algebra


@pytest.fixture
def std():
    return Orientation.standard(4, 1)


@pytest.fixture
def j0():
    return AlmostComplexStructure.standard(4)


@pytest.fixture
def jab():
    return lambda a, b: family_j("nil3xR", "J_ab", a, b)
