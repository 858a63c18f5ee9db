"""Almost complex structures: actions on Λ², splittings, Nijenhuis tensor, taming."""

import random
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exterior import (ExteriorError, KForm, KVector, Subspace, antisymmetric_matrix,
                       basis_indices, evaluate, from_antisymmetric, scalar, vector,
                       wedge, wedge_all)
from .hodge import InnerProduct, Orientation
from .lie import ce_d, cocycles


class NotAlmostComplexError(ValueError):
    pass


class ChartError(ValueError):
    """The coordinate 2-plane of the chart is J-invariant."""


class AlmostComplexStructure:
    """Endomorphism J with J^2 = -id, stored by its matrix A.

    Column convention: ``J f_k = sum_h A[h][k] f_h`` (0-based storage).
    """

    __slots__ = ("matrix", "n")

    def __init__(self, matrix):
        a = tuple(tuple(scalar(x) for x in row) for row in matrix)
        n = len(a)
        if n == 0 or n % 2 or any(len(r) != n for r in a):
            raise NotAlmostComplexError("J must be a square matrix of even size")
        sq = linalg.matmul(a, a)
        if any(sq[i][j] != (-1 if i == j else 0) for i in range(n) for j in range(n)):
            raise NotAlmostComplexError("J^2 != -id")
        self.matrix = a
        self.n = n

    @classmethod
    def standard(cls, n=4):
        """J0 f_{2i-1} = f_{2i}, J0 f_{2i} = -f_{2i-1}."""
        m = [[0] * n for _ in range(n)]
        for i in range(0, n, 2):
            m[i + 1][i] = 1
            m[i][i + 1] = -1
        return cls(m)

    @classmethod
    def from_images(cls, images):
        """Build from the list of images J f_1, ..., J f_n (coordinate lists)."""
        return cls(linalg.transpose([list(v) for v in images]))

    def __call__(self, v):
        """J applied to a 1-vector."""
        if v.k != 1 or v.n != self.n:
            raise ExteriorError("J acts on vectors of the algebra")
        return vector(linalg.matvec(self.matrix, v.coords()))

    def image(self, k):
        """J f_k as a vector (1-based k)."""
        return vector([row[k - 1] for row in self.matrix])

    def conjugate(self, p):
        """P J P^{-1}."""
        return AlmostComplexStructure(
            linalg.matmul(linalg.matmul(p, self.matrix), linalg.inverse(p)))

    def __neg__(self):
        return AlmostComplexStructure([[-x for x in row] for row in self.matrix])

    def __eq__(self, other):
        return isinstance(other, AlmostComplexStructure) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.matrix)
        return f"AlmostComplexStructure([{rows}])"


def orientation_sign(orient, J):
    """Sign of eta(v1 ^ Jv1 ^ v2 ^ Jv2 ...) for basis vectors chosen greedily."""
    n = J.n
    chosen = []
    for i in range(1, n + 1):
        v = KVector.basis(n, (i,))
        trial = chosen + [v, J(v)]
        if linalg.rank([x.coords() for x in trial], n) == len(trial):
            chosen = trial
        if len(chosen) == n:
            break
    if len(chosen) != n:
        raise RuntimeError("no J-adapted basis found; J is not a complex structure")
    val = evaluate(wedge_all(chosen), orient.eta)
    return 1 if val > 0 else -1


def matched_orientation(J):
    """The standard orientation (zeta = +-f_{1..n}) induced by J."""
    o = Orientation.standard(J.n)
    return o if orientation_sign(o, J) == 1 else o.negated()


def act_on_2forms(J, alpha):
    """alpha(., .) -> alpha(J., J.), i.e. A^T M A on the coefficient matrix."""
    if not isinstance(alpha, KForm) or alpha.k != 2:
        raise ExteriorError("expected a 2-form")
    a = [list(r) for r in J.matrix]
    m = antisymmetric_matrix(alpha)
    return from_antisymmetric(KForm, linalg.matmul(linalg.transpose(a),
                                                   linalg.matmul(m, a)))


def act_on_2vectors(J, u):
    """u ^ v -> Ju ^ Jv, i.e. A U A^T on the coefficient matrix."""
    if not isinstance(u, KVector) or u.k != 2:
        raise ExteriorError("expected a 2-vector")
    a = [list(r) for r in J.matrix]
    m = antisymmetric_matrix(u)
    return from_antisymmetric(KVector, linalg.matmul(a, linalg.matmul(m, linalg.transpose(a))))


def action_matrix(J, cls=KForm):
    """Matrix of the J action on Λ² (columns are images of basis elements).

    Entries are 2x2 minors of A: rows (i, j), columns (h, k) for forms,
    and the transposed choice for vectors.
    """
    a = J.matrix
    idx = basis_indices(J.n, 2)
    if cls is KForm:
        def entry(out, src):
            (h, k), (i, j) = out, src
            return a[i - 1][h - 1] * a[j - 1][k - 1] - a[j - 1][h - 1] * a[i - 1][k - 1]
    else:
        def entry(out, src):
            (h, k), (i, j) = out, src
            return a[h - 1][i - 1] * a[k - 1][j - 1] - a[h - 1][j - 1] * a[k - 1][i - 1]
    return [[entry(r, c) for c in idx] for r in idx]


def projector(J, sign, cls=KForm):
    """(id + sign * action) / 2 on Λ²."""
    m = action_matrix(J, cls)
    size = len(m)
    return [[(Fraction(int(i == j)) + sign * m[i][j]) / 2 for j in range(size)]
            for i in range(size)]


@lru_cache(maxsize=2048)
def _eigenspace(J, sign, cls):
    p = projector(J, sign, cls)
    rows = linalg.row_basis(linalg.transpose(p), len(p))
    return Subspace._from_rows(cls, J.n, 2, rows)


def lambda_plus(J):
    """J-invariant 2-forms."""
    return _eigenspace(J, 1, KForm)


def lambda_minus(J):
    """J-anti-invariant 2-forms."""
    return _eigenspace(J, -1, KForm)


def lambda_plus_vectors(J):
    return _eigenspace(J, 1, KVector)


def lambda_minus_vectors(J):
    return _eigenspace(J, -1, KVector)


@dataclass(frozen=True)
class ChartData:
    chart: tuple
    plucker: dict


def chart_is_valid(J, chart):
    i, j = chart
    vecs = [KVector.basis(J.n, (i,)), J.image(i), KVector.basis(J.n, (j,)), J.image(j)]
    return linalg.rank([v.coords() for v in vecs], J.n) == 4


def _chart_permutation(chart):
    """sigma with sigma(1), sigma(3) = chart and sigma(2) < sigma(4) the rest."""
    i, j = chart
    rest = [x for x in range(1, 5) if x not in (i, j)]
    return {1: i, 3: j, 2: rest[0], 4: rest[1]}


def chart_data(J, chart=(1, 3)):
    if J.n != 4:
        raise ExteriorError("charts are defined for 4-dimensional algebras")
    i, j = chart
    if not (1 <= i < j <= 4):
        raise ChartError(f"invalid chart {chart}")
    if not chart_is_valid(J, chart):
        raise ChartError(f"span(f{i}, f{j}) is J-invariant; chart {chart} is invalid")
    s = _chart_permutation(chart)
    a = {(h, k): J.matrix[s[h] - 1][s[k] - 1] for h in range(1, 5) for k in range(1, 5)}
    p = {(h, k): a[2, h] * a[4, k] - a[2, k] * a[4, h]
         for h in range(1, 5) for k in range(h + 1, 5)}
    return ChartData(chart, p), a, s


def lambda_minus_plucker(J, chart=(1, 3)):
    """Anti-invariant 2-forms from the Plucker coordinates of rows 2 and 4 of J.

    Written for the chart (1, 3); other charts relabel the frame so that
    (1, 3) goes to the chart and (2, 4) to the complementary pair.
    """
    data, a, s = chart_data(J, chart)
    p = data.plucker

    def relabel(coeffs):
        return KForm(4, 2, {(s[h], s[k]): c for (h, k), c in coeffs.items()})

    first = {(2, 4): Fraction(1)}
    for key, c in p.items():
        first[key] = first.get(key, 0) - c
    second = {}
    for h in range(1, 5):
        if h != 4:
            second[(4, h)] = second.get((4, h), 0) + a[2, h]
        if h != 2:
            second[(2, h)] = second.get((2, h), 0) - a[4, h]
    return Subspace(KForm, 4, 2, [relabel(first), relabel(second)])


def nijenhuis(g, J, u, v):
    """N_J(u, v) = [u, v] + J[Ju, v] + J[u, Jv] - [Ju, Jv]."""
    ju, jv = J(u), J(v)
    return (g.bracket(u, v) + J(g.bracket(ju, v)) + J(g.bracket(u, jv))
            - g.bracket(ju, jv))


def is_integrable(g, J):
    n = g.n
    f = [KVector.basis(n, (i,)) for i in range(1, n + 1)]
    return all(not nijenhuis(g, J, f[i], f[j]) for i in range(n) for j in range(i + 1, n))


def integrable_sufficient(g, J):
    """True when every anti-invariant 2-form is closed (implies integrability)."""
    if g.n != 4:
        raise ExteriorError("criterion is specific to dimension 4")
    return cocycles(g, 2).contains(lambda_minus(J))


@dataclass(frozen=True)
class HermitianData:
    metric: InnerProduct
    fundamental_form: KForm


def hermitian_data(J, h):
    """Symmetrize h to be J-invariant; phi(u, v) = h~(Ju, v)."""
    a = [list(r) for r in J.matrix]
    hm = [list(r) for r in h.gram]
    pulled = linalg.matmul(linalg.transpose(a), linalg.matmul(hm, a))
    sym = [[(x + y) / 2 for x, y in zip(r, s)] for r, s in zip(hm, pulled)]
    metric = InnerProduct(sym)
    phi = linalg.matmul(linalg.transpose(a), sym)
    return HermitianData(metric, from_antisymmetric(KForm, phi))


def taming_gram(J, omega):
    """G(u, v) = (omega(u, Jv) + omega(v, Ju)) / 2, so G(v, v) = omega(v, Jv)."""
    w = antisymmetric_matrix(omega)
    wa = linalg.matmul(w, [list(r) for r in J.matrix])
    n = J.n
    return [[(wa[i][j] + wa[j][i]) / 2 for j in range(n)] for i in range(n)]


def is_tamed_by(g, J, omega):
    """omega closed and omega(v, Jv) > 0 for every v != 0 (Sylvester test)."""
    if g.n != 4:
        raise ExteriorError("taming test is implemented for dimension 4")
    if ce_d(g, omega):
        return False
    return linalg.is_positive_definite(taming_gram(J, omega))


def is_compatible_with(g, J, omega):
    return act_on_2forms(J, omega) == omega and is_tamed_by(g, J, omega)


def _random_matrix(rng, n, sign, sparse=False):
    while True:
        if sparse:
            m = [[Fraction(rng.choice((-1, 0, 0, 0, 1))) for _ in range(n)] for _ in range(n)]
        else:
            m = [[Fraction(rng.randint(-3, 3), rng.choice((1, 1, 1, 2))) for _ in range(n)]
                 for _ in range(n)]
        d = linalg.det(m)
        if d == 0:
            continue
        if (d > 0) != (sign > 0):
            m[0] = [-x for x in m[0]]
        return m


def random_acs(orient, seed, conjugator=None, sparse=False):
    """P J0 P^{-1} for a random rational P oriented to match ``orient``.

    ``sparse`` draws P with entries in {-1, 0, 1}, mostly zero; such J
    hit the non-generic (integrable, non-tamed) strata far more often.
    """
    n = orient.n
    j0 = AlmostComplexStructure.standard(n)
    sign = orient.sign
    if conjugator is None:
        p = _random_matrix(random.Random(seed), n, sign, sparse)
    else:
        p = [[scalar(x) for x in row] for row in conjugator]
    J = j0.conjugate(p)
    if orientation_sign(orient, J) != 1:
        raise ValueError("conjugator reverses the orientation")
    return J
