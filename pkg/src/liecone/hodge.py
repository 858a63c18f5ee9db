"""Volume pairings, the G-isomorphisms, signatures and Hodge theory."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from . import linalg
from .exterior import (ExteriorError, KForm, KVector, Subspace, basis_indices,
                       complement, evaluate, scalar, sort_sign, wedge)
from .lie import betti, cocycles, coboundaries, d_matrix, is_unimodular


class MetricError(ValueError):
    """Inner product is invalid or unusable for exact Hodge theory."""


class NotUnimodularError(ValueError):
    pass


@dataclass(frozen=True)
class Orientation:
    """A top-degree vector zeta and the volume form eta with eta(zeta) = 1."""

    zeta: KVector
    eta: KForm

    def __post_init__(self):
        if self.zeta.k != self.zeta.n or not self.zeta:
            raise ExteriorError("zeta must be a nonzero top-degree vector")
        if evaluate(self.zeta, self.eta) != 1:
            raise ExteriorError("orientation requires eta(zeta) = 1")

    @classmethod
    def standard(cls, n, sign=1):
        return cls.from_zeta(KVector(n, n, {tuple(range(1, n + 1)): sign}))

    @classmethod
    def from_zeta(cls, zeta):
        n = zeta.n
        top = tuple(range(1, n + 1))
        c = zeta[top]
        return cls(zeta, KForm(n, n, {top: 1 / c}))

    @property
    def n(self):
        return self.zeta.n

    @property
    def sign(self):
        return 1 if self.zeta[tuple(range(1, self.n + 1))] > 0 else -1

    @property
    def volume_coefficient(self):
        """Coefficient of f^{1..n} in eta."""
        return self.eta[tuple(range(1, self.n + 1))]

    def negated(self):
        return Orientation(-self.zeta, -self.eta)


@dataclass(frozen=True)
class SignatureReport:
    positive: int
    negative: int
    null: int

    def __iter__(self):
        return iter((self.positive, self.negative, self.null))

    @property
    def dim(self):
        return self.positive + self.negative + self.null


def phi_zeta(orient, alpha, beta):
    """(alpha ^ beta)(zeta) for forms of complementary grades."""
    if alpha.k + beta.k != orient.n:
        raise ExteriorError("phi_zeta needs complementary grades")
    return evaluate(orient.zeta, wedge(alpha, beta))


def phi_eta(orient, u, w):
    """eta(u ^ w) for multivectors of complementary grades."""
    if u.k + w.k != orient.n:
        raise ExteriorError("phi_eta needs complementary grades")
    return evaluate(wedge(u, w), orient.eta)


def g_eta(orient, u):
    """The form G(u) with G(u)(w) = eta(u ^ w)."""
    n = orient.n
    c = {}
    for idx in basis_indices(n, n - u.k):
        v = phi_eta(orient, u, KVector.basis(n, idx))
        if v:
            c[idx] = v
    return KForm(n, n - u.k, c)


def g_zeta(orient, alpha):
    """The multivector G(alpha) with beta(G(alpha)) = zeta(beta ^ alpha).

    This ordering makes ``g_zeta`` the inverse of ``g_eta`` in every grade.
    """
    n = orient.n
    c = {}
    for idx in basis_indices(n, n - alpha.k):
        v = evaluate(orient.zeta, wedge(KForm.basis(n, idx), alpha))
        if v:
            c[idx] = v
    return KVector(n, n - alpha.k, c)


def pairing_matrix(orient, elements):
    """Gram matrix of the middle-degree wedge pairing on the given elements."""
    elements = list(elements)
    pair = phi_zeta if elements and isinstance(elements[0], KForm) else phi_eta
    return [[pair(orient, a, b) for b in elements] for a in elements]


def signature(orient, space):
    """Inertia of the wedge pairing restricted to a middle-degree subspace."""
    if space.k * 2 != space.n or space.k % 2:
        raise ExteriorError("signature needs an even middle-degree subspace")
    if not space.basis:
        return SignatureReport(0, 0, 0)
    return SignatureReport(*linalg.signature(pairing_matrix(orient, space.basis)))


def b_plus(g, orient):
    """Positive index of the wedge pairing on closed 2-forms."""
    if g.n != 4:
        raise ExteriorError("b_plus is defined here for 4-dimensional algebras")
    if not is_unimodular(g):
        raise NotUnimodularError("b_plus requires a unimodular algebra")
    z = cocycles(g, 2)
    bp = signature(orient, z).positive
    assert z.dim == bp + 3, "dim Z = b+ + 3 violated"
    assert coboundaries(g, 2).dim == 3 - bp, "dim B = 3 - b+ violated"
    return bp


def _rational_sqrt(x):
    x = Fraction(x)
    if x < 0:
        return None
    p, q = isqrt(x.numerator), isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


class InnerProduct:
    """A positive definite symmetric Gram matrix h(f_i, f_j)."""

    __slots__ = ("gram", "_inv")

    def __init__(self, gram):
        gram = tuple(tuple(scalar(x) for x in row) for row in gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise MetricError("Gram matrix must be square")
        if not linalg.is_symmetric(gram):
            raise MetricError("Gram matrix must be symmetric")
        if not linalg.is_positive_definite(gram):
            raise MetricError("Gram matrix must be positive definite")
        self.gram = gram
        self._inv = tuple(tuple(r) for r in linalg.inverse([list(r) for r in gram]))

    @classmethod
    def euclidean(cls, n):
        return cls(linalg.identity(n))

    @property
    def n(self):
        return len(self.gram)

    def __call__(self, u, v):
        a, b = u.coords(), v.coords()
        return sum((a[i] * self.gram[i][j] * b[j]
                    for i in range(self.n) for j in range(self.n)), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, InnerProduct) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def volume_scale(self):
        """sqrt(det h), the coefficient of Vol_h on f^{1..n}; must be rational."""
        s = _rational_sqrt(linalg.det(self.gram))
        if s is None:
            raise MetricError("det(h) is not a rational square; Vol_h is irrational")
        return s

    def form_gram(self, k):
        """<f^I, f^J> = det of the (I, J) minor of h^{-1}."""
        return _form_gram(self._inv, k)

    def inner(self, alpha, beta):
        """Induced inner product on k-forms."""
        if alpha.k != beta.k:
            raise ExteriorError("inner product needs equal grades")
        m = self.form_gram(alpha.k)
        a, b = alpha.coords(), beta.coords()
        return sum((a[i] * m[i][j] * b[j] for i in range(len(a)) for j in range(len(b))
                    if a[i] and b[j]), Fraction(0))

    def volume_form(self, orient):
        return KForm(self.n, self.n, {tuple(range(1, self.n + 1)):
                                      orient.sign * self.volume_scale()})

    def adapted_orientation(self, sign=1):
        """The orientation of the given sign with eta = Vol_h."""
        s = self.volume_scale()
        top = tuple(range(1, self.n + 1))
        return Orientation.from_zeta(KVector(self.n, self.n, {top: sign / s}))


@lru_cache(maxsize=256)
def _form_gram(inv, k):
    n = len(inv)
    idx = basis_indices(n, k)
    return tuple(tuple(linalg.det([[inv[i - 1][j - 1] for j in J] for i in I])
                       for J in idx) for I in idx)


def _check_pair(h, orient):
    if h.n != orient.n:
        raise MetricError("metric and orientation dimensions differ")
    if orient.volume_coefficient ** 2 != linalg.det(h.gram):
        raise MetricError("orientation volume form is not Vol_h; "
                          "use InnerProduct.adapted_orientation")


@lru_cache(maxsize=256)
def _star_matrix(h, eta_c, k):
    n = h.n
    m = h.form_gram(k)
    src = basis_indices(n, k)
    dst = {idx: r for r, idx in enumerate(basis_indices(n, n - k))}
    out = [[Fraction(0)] * len(src) for _ in dst]
    # (*beta)_{I^c} = sign(I, I^c) <f^I, beta> eta_c
    for a, I in enumerate(src):
        Ic = complement(I, n)
        s, _ = sort_sign(I + Ic)
        for col in range(len(src)):
            if m[a][col]:
                out[dst[Ic]][col] += s * m[a][col] * eta_c
    return tuple(tuple(r) for r in out)


def star_matrix(h, orient, k):
    _check_pair(h, orient)
    return [list(r) for r in _star_matrix(h, orient.volume_coefficient, k)]


def hodge_star(h, orient, alpha):
    """alpha ^ *beta = <alpha, beta> Vol_h."""
    if not isinstance(alpha, KForm):
        raise ExteriorError("hodge_star acts on forms")
    m = star_matrix(h, orient, alpha.k)
    return KForm.from_coords(h.n, h.n - alpha.k, linalg.matvec(m, alpha.coords()))


def codifferential_matrix(h, orient, g, p):
    """Matrix of delta on p-forms: (-1)^(n(p+1)+1) * d *, n = dim g."""
    n = g.n
    if p == 0:
        return []
    sign = -1 if (n * (p + 1) + 1) % 2 else 1
    s1 = star_matrix(h, orient, p)
    d = d_matrix(g, n - p)
    s2 = star_matrix(h, orient, n - p + 1)
    m = linalg.matmul(s2, linalg.matmul(d, s1))
    return [[sign * x for x in row] for row in m]


def codifferential(h, orient, g, alpha):
    if alpha.k == 0:
        raise ExteriorError("codifferential of a function is zero-dimensional")
    m = codifferential_matrix(h, orient, g, alpha.k)
    return KForm.from_coords(g.n, alpha.k - 1, linalg.matvec(m, alpha.coords()))


def laplacian_matrix(h, orient, g, p):
    n = g.n
    size = len(basis_indices(n, p))
    out = [[Fraction(0)] * size for _ in range(size)]
    if p >= 1:
        out = _madd(out, linalg.matmul(d_matrix(g, p - 1),
                                       codifferential_matrix(h, orient, g, p)))
    if p < n:
        out = _madd(out, linalg.matmul(codifferential_matrix(h, orient, g, p + 1),
                                       d_matrix(g, p)))
    return out


def _madd(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def laplacian(h, orient, g, alpha):
    m = laplacian_matrix(h, orient, g, alpha.k)
    return KForm.from_coords(g.n, alpha.k, linalg.matvec(m, alpha.coords()))


def harmonic_space(h, orient, g, p):
    m = laplacian_matrix(h, orient, g, p)
    size = len(basis_indices(g.n, p))
    return Subspace._from_rows(KForm, g.n, p, linalg.nullspace(m, size))


@dataclass(frozen=True)
class HodgeDecomposition:
    """alpha = harmonic + d(primitive) + delta(coprimitive)."""

    harmonic: KForm
    exact: KForm
    coexact: KForm
    primitive: KForm
    coprimitive: KForm


def _preimage(m, target, n, k_src):
    """Some x of grade k_src with m x = target."""
    size = len(basis_indices(n, k_src))
    x = linalg.solve(m, target.coords(), size)
    assert x is not None, "target is not in the image"
    return KForm.from_coords(n, k_src, x)


def hodge_decompose(h, orient, g, alpha):
    """Orthogonal splitting into harmonic, exact and coexact parts."""
    if not is_unimodular(g):
        raise NotUnimodularError("Hodge decomposition requires a unimodular algebra")
    n, p = g.n, alpha.k
    size = len(basis_indices(n, p))
    harm = harmonic_space(h, orient, g, p).basis
    dm = d_matrix(g, p - 1) if p >= 1 else []
    cm = codifferential_matrix(h, orient, g, p + 1) if p < n else []
    exact_basis = linalg.row_basis(linalg.transpose(dm), size) if dm and dm[0] else []
    coexact_basis = linalg.row_basis(linalg.transpose(cm), size) if cm and cm[0] else []
    cols = [b.coords() for b in harm] + exact_basis + coexact_basis
    coeff = linalg.solve(linalg.transpose(cols), alpha.coords(), len(cols)) if cols else []
    assert coeff is not None and len(cols) == size, "Hodge decomposition is not direct"
    parts = []
    start = 0
    for block in (len(harm), len(exact_basis), len(coexact_basis)):
        vec = [Fraction(0)] * size
        for t, c in zip(coeff[start:start + block], cols[start:start + block]):
            for i, x in enumerate(c):
                vec[i] += t * x
        parts.append(KForm.from_coords(n, p, vec))
        start += block
    harmonic, exact, coexact = parts
    if p >= 1:
        primitive = _preimage(dm, exact, n, p - 1) if exact else KForm.zero(n, p - 1)
    else:
        primitive = KForm.zero(n, 0)
    if p < n:
        coprimitive = _preimage(cm, coexact, n, p + 1) if coexact else KForm.zero(n, p + 1)
    else:
        coprimitive = KForm.zero(n, n)
    return HodgeDecomposition(harmonic, exact, coexact, primitive, coprimitive)


def sd_asd_split(h, orient, alpha):
    """(self-dual, anti-self-dual) parts of a 2-form in dimension 4."""
    if alpha.n != 4 or alpha.k != 2:
        raise ExteriorError("self-dual splitting needs a 2-form in dimension 4")
    s = hodge_star(h, orient, alpha)
    return (alpha + s) / 2, (alpha - s) / 2
