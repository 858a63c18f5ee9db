"""Built-in fixtures: unimodular symplectic 4-dimensional Lie algebras and J families."""

from dataclasses import dataclass, field
from fractions import Fraction

from .acs import AlmostComplexStructure, NotAlmostComplexError
from .exterior import KForm, scalar
from .lie import LieAlgebra


class CatalogError(KeyError):
    def __str__(self):
        return self.args[0] if self.args else "catalog error"


@dataclass(frozen=True)
class Expected:
    b_plus: int
    b2: int
    unimodular: bool = True
    derived: bool = False   # value computed here rather than quoted


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    expected: Expected
    families: dict = field(default_factory=dict)
    description: str = ""

    def family(self, name, *params):
        return family_j(self, name, *params)


def _j_ab(a, b):
    a, b = scalar(a), scalar(b)
    if a * a + b * b == 0:
        raise ValueError("J_ab needs a^2 + b^2 != 0")
    return [[0, 0, -1, 0],
            [a, 0, -b, -1],
            [1, 0, 0, 0],
            [-b, 1, -a, 0]]


def _j_standard():
    return AlmostComplexStructure.standard(4).matrix


def _j_t(t):
    t = scalar(t)
    if not -1 < t < 1:
        raise ValueError("J_t needs |t| < 1")
    s = 1 / (1 + t * t)
    m = [[0, t * t - 1, 2 * t, 0],
         [1 - t * t, 0, 0, -2 * t],
         [-2 * t, 0, 0, t * t - 1],
         [0, 2 * t, 1 - t * t, 0]]
    return [[s * x for x in row] for row in m]


def _build():
    b = LieAlgebra.from_brackets
    entries = [
        CatalogEntry("R4", LieAlgebra.abelian(4, name="R4"), Expected(3, 6, derived=True),
                     description="abelian"),
        CatalogEntry("nil3xR", b(4, [((1, 3), {2: 1})], name="nil3xR"), Expected(2, 4),
                     families={"J_ab": _j_ab, "standard": _j_standard},
                     description="Heisenberg times a line"),
        CatalogEntry("nil4", b(4, [((4, 2), {1: 1}), ((4, 3), {2: 1})], name="nil4"),
                     Expected(1, 2), families={"J_t": _j_t},
                     description="filiform nilpotent"),
        CatalogEntry("sol3xR", b(4, [((4, 1), {1: 1}), ((2, 4), {2: 1})], name="sol3xR"),
                     Expected(1, 2, derived=True), description="solvable, real eigenvalues"),
        CatalogEntry("r'30xR", b(4, [((1, 3), {2: 1}), ((2, 1), {3: 1})], name="r'30xR"),
                     Expected(1, 2, derived=True), description="Euclidean motions times a line"),
    ]
    return {e.name: e for e in entries}


_CATALOG = _build()

# symplectic form compatible with the standard structure
STANDARD_FORM = KForm(4, 2, {"12": 1, "34": 1})


def catalog_list():
    return list(_CATALOG)


def catalog_get(name):
    try:
        return _CATALOG[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}; known: "
                           + ", ".join(_CATALOG)) from None


def family_j(entry, name, *params):
    """Member of a named J family; checks J^2 = -id on the result."""
    if isinstance(entry, str):
        entry = catalog_get(entry)
    try:
        ctor = entry.families[name]
    except KeyError:
        raise CatalogError(f"{entry.name} has no family {name!r}") from None
    params = [Fraction(p) if isinstance(p, str) else p for p in params]
    try:
        return AlmostComplexStructure(ctor(*params))
    except NotAlmostComplexError as exc:
        raise AssertionError(f"family {name} does not square to -id") from exc
