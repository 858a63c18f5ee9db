"""Lie algebras by structure constants and their Chevalley-Eilenberg (co)homology."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .exterior import (ExteriorError, KForm, KVector, Subspace, basis_indices,
                       scalar, sort_sign)


class LieAlgebraError(ValueError):
    pass


class JacobiError(LieAlgebraError):
    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = residual
        super().__init__(f"Jacobi identity fails at {triple}: residual {residual!r}")


@dataclass(frozen=True)
class JacobiCheck:
    ok: bool
    triple: tuple = None
    residual: KVector = None

    def __bool__(self):
        return self.ok


class LieAlgebra:
    """A Lie algebra on the basis ``f_1..f_n``.

    ``structure`` maps pairs ``(i, j)`` with ``i < j`` to ``{k: c}``,
    meaning ``[f_i, f_j] = sum_k c f_k``.  The Jacobi identity is checked
    on construction unless ``check=False``.
    """

    def __init__(self, n, structure=None, *, name=None, check=True):
        self.n = n
        self.name = name
        consts = {}
        for (i, j), image in (structure or {}).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise LieAlgebraError(f"bracket index ({i}, {j}) out of range")
            if i >= j:
                raise LieAlgebraError(f"structure constants need i < j, got ({i}, {j})")
            row = {}
            for k, c in image.items():
                if not 1 <= k <= n:
                    raise LieAlgebraError(f"image index {k} out of range")
                c = scalar(c)
                if c:
                    row[k] = c
            if row:
                consts[(i, j)] = row
        self._c = consts
        self._dcache = {}
        if check:
            res = check_jacobi(self)
            if not res:
                raise JacobiError(res.triple, res.residual)

    @classmethod
    def from_brackets(cls, n, brackets, *, name=None, check=True):
        """Build from ``[((i, j), {k: c}), ...]`` allowing either order of i, j.

        Each unordered pair may appear once; ``i == j`` is rejected.
        """
        consts = {}
        for (i, j), image in brackets:
            if i == j:
                raise LieAlgebraError(f"bracket [f{i}, f{i}] is identically zero")
            sign = 1 if i < j else -1
            key = (min(i, j), max(i, j))
            if key in consts:
                raise LieAlgebraError(f"duplicate bracket for pair {key}")
            consts[key] = {k: sign * scalar(c) for k, c in image.items()}
        return cls(n, consts, name=name, check=check)

    @classmethod
    def unchecked(cls, n, structure, *, name=None):
        return cls(n, structure, name=name, check=False)

    @classmethod
    def abelian(cls, n, name=None):
        return cls(n, {}, name=name)

    @property
    def structure(self):
        return {key: dict(v) for key, v in self._c.items()}

    def constant(self, i, j, k):
        """c^k_{ij} for any ordering of i, j."""
        if i == j:
            return Fraction(0)
        if i < j:
            return self._c.get((i, j), {}).get(k, Fraction(0))
        return -self._c.get((j, i), {}).get(k, Fraction(0))

    def bracket(self, u, v):
        """[u, v] of two 1-vectors."""
        if u.k != 1 or v.k != 1 or u.n != self.n or v.n != self.n:
            raise ExteriorError("bracket expects two vectors of the algebra")
        out = {}
        for (i,), x in u.items():
            for (j,), y in v.items():
                if i == j:
                    continue
                for k, c in self._bracket_basis(i, j).items():
                    out[k] = out.get(k, 0) + x * y * c
        return KVector(self.n, 1, {(k,): c for k, c in out.items() if c})

    def _bracket_basis(self, i, j):
        if i < j:
            return self._c.get((i, j), {})
        return {k: -c for k, c in self._c.get((j, i), {}).items()}

    def basis_bracket(self, i, j):
        return KVector(self.n, 1, {(k,): c for k, c in self._bracket_basis(i, j).items()})

    def ad_matrix(self, i):
        """Matrix of ad_{f_i} with columns the images of f_1..f_n."""
        n = self.n
        m = [[Fraction(0)] * n for _ in range(n)]
        for j in range(1, n + 1):
            for k, c in self._bracket_basis(i, j).items() if i != j else ():
                m[k - 1][j - 1] = c
        return m

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.n == other.n and self._c == other._c

    def __hash__(self):
        return hash((self.n, frozenset((k, frozenset(v.items())) for k, v in self._c.items())))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        br = ", ".join(f"[f{i},f{j}]={KVector(self.n, 1, {(k,): c for k, c in img.items()})!r}"
                       for (i, j), img in sorted(self._c.items()))
        return f"<LieAlgebra{label} n={self.n} {br or 'abelian'}>"


def check_jacobi(g):
    """Verify [[f_i,f_j],f_k] + cyclic = 0 on all i < j < k."""
    n = g.n
    f = [KVector.basis(n, (i,)) for i in range(1, n + 1)]
    for i, j, k in combinations(range(1, n + 1), 3):
        a, b, c = f[i - 1], f[j - 1], f[k - 1]
        res = (g.bracket(g.bracket(a, b), c) + g.bracket(g.bracket(b, c), a)
               + g.bracket(g.bracket(c, a), b))
        if res:
            return JacobiCheck(False, (i, j, k), res)
    return JacobiCheck(True)


def is_unimodular(g):
    """tr(ad_{f_i}) = sum_j c^j_{ij} vanishes for every i."""
    return all(sum((g.constant(i, j, j) for j in range(1, g.n + 1)), Fraction(0)) == 0
               for i in range(1, g.n + 1))


def _d_basis_1form(g, m):
    """d f^m = -sum_{i<j} c^m_{ij} f^{ij}, as a dict."""
    return {(i, j): -img[m] for (i, j), img in g._c.items() if m in img}


def d_matrix(g, k):
    """Matrix of d: grade k -> grade k+1 on the monomial bases (columns = images)."""
    key = ("d", k)
    if key in g._dcache:
        return g._dcache[key]
    n = g.n
    if k >= n:
        m = []
    else:
        rows = basis_indices(n, k + 1)
        pos = {idx: r for r, idx in enumerate(rows)}
        cols = basis_indices(n, k)
        d1 = {m_: _d_basis_1form(g, m_) for m_ in range(1, n + 1)}
        m = [[Fraction(0)] * len(cols) for _ in rows]
        for col, idx in enumerate(cols):
            for s, i in enumerate(idx):
                sgn = -1 if s % 2 else 1
                for pair, c in d1[i].items():
                    t, out = sort_sign(idx[:s] + pair + idx[s + 1:])
                    if t:
                        m[pos[out]][col] += sgn * t * c
    g._dcache[key] = m
    return m


def ce_d(g, alpha):
    """Chevalley-Eilenberg differential of a k-form."""
    if not isinstance(alpha, KForm) or alpha.n != g.n:
        raise ExteriorError("ce_d expects a form on the algebra")
    if alpha.k >= g.n:
        raise ExteriorError(f"d of a grade {alpha.k} form overflows dimension {g.n}")
    m = d_matrix(g, alpha.k)
    return KForm.from_coords(g.n, alpha.k + 1, linalg.matvec(m, alpha.coords()))


def boundary_matrix(g, k):
    """Matrix of the boundary: grade k -> grade k-1, the signed transpose of d."""
    key = ("b", k)
    if key in g._dcache:
        return g._dcache[key]
    sign = -1 if (k + 1) % 2 else 1
    d = d_matrix(g, k - 1)
    m = [[sign * x for x in col] for col in linalg.transpose(d)] if d else []
    g._dcache[key] = m
    return m


def boundary(g, w):
    """Boundary of a k-vector, defined by <bw, phi> = (-1)^(k+1) <w, d phi>."""
    if not isinstance(w, KVector) or w.n != g.n:
        raise ExteriorError("boundary expects a multivector on the algebra")
    if w.k < 1:
        raise ExteriorError("boundary of a grade 0 element is undefined")
    m = boundary_matrix(g, w.k)
    return KVector.from_coords(g.n, w.k - 1, linalg.matvec(m, w.coords()))


def _kernel(cls, n, k, m, ncols):
    if not m:
        return Subspace.full(cls, n, k)
    return Subspace._from_rows(cls, n, k, linalg.nullspace(m, ncols))


def _image(cls, n, k, m):
    if not m:
        return Subspace.zero(cls, n, k)
    return Subspace._from_rows(cls, n, k, linalg.row_basis(linalg.transpose(m), len(m)))


def _check_grade(g, k):
    if not 0 <= k <= g.n:
        raise ExteriorError(f"grade {k} out of range for dimension {g.n}")


def cocycles(g, k):
    _check_grade(g, k)
    key = ("Z", k)
    if key not in g._dcache:
        m = d_matrix(g, k) if k < g.n else []
        g._dcache[key] = _kernel(KForm, g.n, k, m, len(basis_indices(g.n, k)))
    return g._dcache[key]


def coboundaries(g, k):
    _check_grade(g, k)
    key = ("B", k)
    if key not in g._dcache:
        m = d_matrix(g, k - 1) if k >= 1 else []
        g._dcache[key] = _image(KForm, g.n, k, m)
    return g._dcache[key]


def cycles(g, k):
    _check_grade(g, k)
    key = ("Zh", k)
    if key not in g._dcache:
        m = boundary_matrix(g, k) if k >= 1 else []
        g._dcache[key] = _kernel(KVector, g.n, k, m, len(basis_indices(g.n, k)))
    return g._dcache[key]


def boundaries(g, k):
    _check_grade(g, k)
    key = ("Bh", k)
    if key not in g._dcache:
        m = boundary_matrix(g, k + 1) if k < g.n else []
        g._dcache[key] = _image(KVector, g.n, k, m)
    return g._dcache[key]


def betti(g, k):
    return cocycles(g, k).dim - coboundaries(g, k).dim


def homology_betti(g, k):
    return cycles(g, k).dim - boundaries(g, k).dim


def betti_numbers(g):
    return tuple(betti(g, k) for k in range(g.n + 1))
