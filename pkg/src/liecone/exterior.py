"""Exterior algebra over Q^n: k-vectors, k-forms, wedge and evaluation.

Basis elements are indexed by strictly increasing tuples of 1-based
indices.  ``KVector`` lives in the exterior powers of the space itself,
``KForm`` in those of its dual; ``evaluate`` is the pairing for which the
two monomial bases are dual, so ``f^{12}(f_1, f_2) = 1``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg


class ExteriorError(ValueError):
    """Raised for grade, dimension or kind mismatches."""


def scalar(x):
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point scalars are not accepted")
    return Fraction(x)


def sort_sign(idx):
    """Sort a tuple of indices; return ``(sign, sorted)``, sign 0 on repeats."""
    idx = list(idx)
    sign = 1
    # insertion sort counting transpositions; tuples are tiny
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and idx[j - 1] == idx[j]:
            return 0, None
    return sign, tuple(idx)


@lru_cache(maxsize=None)
def basis_indices(n, k):
    """Multi-indices of grade k in lexicographic order."""
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def _position(n, k):
    return {idx: i for i, idx in enumerate(basis_indices(n, k))}


def complement(idx, n):
    return tuple(i for i in range(1, n + 1) if i not in idx)


def _parse_key(key):
    if isinstance(key, int):
        return (key,)
    if isinstance(key, str):
        key = key.replace(",", "").strip()
        return tuple(int(ch) for ch in key)
    return tuple(key)


class _Graded:
    """Sparse homogeneous element of an exterior power.

    ``coeffs`` maps multi-indices (tuples, or digit strings such as
    ``"13"``) to scalars; unsorted indices are normalized with the
    permutation sign.  Instances are immutable.
    """

    __slots__ = ("n", "k", "_c", "_hash")
    _symbol = "?"

    def __init__(self, n, k, coeffs=()):
        if n < 0 or not 0 <= k:
            raise ExteriorError(f"invalid shape n={n}, k={k}")
        if k > n:
            raise ExteriorError(f"grade {k} exceeds dimension {n}")
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        c = {}
        for key, val in items:
            idx = _parse_key(key)
            if len(idx) != k:
                raise ExteriorError(f"index {idx} does not have grade {k}")
            if any(not 1 <= i <= n for i in idx):
                raise ExteriorError(f"index {idx} out of range for n={n}")
            s, idx = sort_sign(idx)
            if s == 0:
                continue
            c[idx] = c.get(idx, 0) + s * scalar(val)
        self.n = n
        self.k = k
        self._c = {i: v for i, v in c.items() if v != 0}
        self._hash = None

    @classmethod
    def _raw(cls, n, k, c):
        obj = cls.__new__(cls)
        obj.n, obj.k, obj._c, obj._hash = n, k, c, None
        return obj

    @classmethod
    def basis(cls, n, idx):
        return cls(n, len(_parse_key(idx)), {idx: 1})

    @classmethod
    def zero(cls, n, k):
        return cls._raw(n, k, {})

    @classmethod
    def from_coords(cls, n, k, coords):
        c = {}
        for idx, v in zip(basis_indices(n, k), coords):
            if v != 0:
                c[idx] = scalar(v)
        return cls._raw(n, k, c)

    def coords(self):
        """Dense coordinates in the lexicographic monomial basis."""
        z = Fraction(0)
        return [self._c.get(idx, z) for idx in basis_indices(self.n, self.k)]

    @property
    def coeffs(self):
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, key):
        s, idx = sort_sign(_parse_key(key))
        if s == 0:
            return Fraction(0)
        return s * self._c.get(idx, Fraction(0))

    def _check(self, other):
        if type(other) is not type(self):
            raise ExteriorError(f"cannot combine {type(self).__name__} "
                                f"with {type(other).__name__}")
        if other.n != self.n or other.k != self.k:
            raise ExteriorError("dimension or grade mismatch")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        c = dict(self._c)
        for idx, v in other._c.items():
            w = c.get(idx, 0) + v
            if w:
                c[idx] = w
            else:
                c.pop(idx, None)
        return self._raw(self.n, self.k, c)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.n, self.k, {i: -v for i, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, t):
        if isinstance(t, _Graded):
            return NotImplemented
        t = scalar(t)
        if t == 0:
            return self.zero(self.n, self.k)
        return self._raw(self.n, self.k, {i: t * v for i, v in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, t):
        return self * (1 / scalar(t))

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._c
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.n, self.k,
                               frozenset(self._c.items())))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        if not self._c:
            return f"0 ({type(self).__name__} n={self.n} k={self.k})"
        parts = []
        for idx in sorted(self._c):
            v = self._c[idx]
            name = self._symbol + "".join(map(str, idx)) if idx else "1"
            mag = abs(v)
            sign = "-" if v < 0 else "+"
            term = name if mag == 1 else f"{mag} {name}"
            parts.append((sign, term))
        first = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([first] + [f"{s} {t}" for s, t in parts[1:]])


class KVector(_Graded):
    """Element of the k-th exterior power of the space (k-vector)."""
    __slots__ = ()
    _symbol = "f_"


class KForm(_Graded):
    """Element of the k-th exterior power of the dual space (k-form)."""
    __slots__ = ()
    _symbol = "f^"

    def __call__(self, *vectors):
        """Evaluate on k vectors: ``alpha(v1, ..., vk)``."""
        if len(vectors) != self.k:
            raise ExteriorError(f"expected {self.k} vectors")
        if not vectors:
            return self[()]
        acc = vectors[0]
        for v in vectors[1:]:
            acc = wedge(acc, v)
        return evaluate(acc, self)


def vector(coords):
    """A 1-vector from its coordinates in ``f_1, ..., f_n``."""
    coords = list(coords)
    return KVector.from_coords(len(coords), 1, [scalar(x) for x in coords])


def covector(coords):
    coords = list(coords)
    return KForm.from_coords(len(coords), 1, [scalar(x) for x in coords])


def wedge(a, b):
    """Exterior product of homogeneous elements of the same kind."""
    if type(a) is not type(b):
        raise ExteriorError("wedge needs two elements of the same kind")
    if a.n != b.n:
        raise ExteriorError(f"dimension mismatch {a.n} != {b.n}")
    k = a.k + b.k
    if k > a.n:
        raise ExteriorError(f"grade {k} exceeds dimension {a.n}")
    c = {}
    for i, x in a._c.items():
        for j, y in b._c.items():
            s, idx = sort_sign(i + j)
            if s:
                w = c.get(idx, 0) + s * x * y
                if w:
                    c[idx] = w
                else:
                    c.pop(idx, None)
    return type(a)._raw(a.n, k, c)


def wedge_all(items):
    items = list(items)
    acc = items[0]
    for x in items[1:]:
        acc = wedge(acc, x)
    return acc


def evaluate(u, alpha):
    """The pairing alpha(u) of a k-vector with a k-form."""
    if not isinstance(u, KVector) or not isinstance(alpha, KForm):
        raise ExteriorError("evaluate expects (KVector, KForm)")
    if u.n != alpha.n or u.k != alpha.k:
        raise ExteriorError("grade or dimension mismatch in evaluate")
    small, big = (u._c, alpha._c) if len(u._c) <= len(alpha._c) else (alpha._c, u._c)
    z = Fraction(0)
    return sum((v * big[i] for i, v in small.items() if i in big), z)


def antisymmetric_matrix(u):
    """The n x n matrix U with U[i][j] = coefficient of index (i+1, j+1)."""
    if u.k != 2:
        raise ExteriorError("grade 2 required")
    n = u.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), v in u._c.items():
        m[i - 1][j - 1] = v
        m[j - 1][i - 1] = -v
    return m


def from_antisymmetric(cls, m):
    n = len(m)
    return cls(n, 2, {(i + 1, j + 1): m[i][j]
                      for i in range(n) for j in range(i + 1, n) if m[i][j]})


def is_simple(u):
    """True iff the bivector u factors as v ^ w (equivalently u ^ u = 0)."""
    if u.k != 2:
        raise ExteriorError("is_simple is defined for grade 2")
    if u.n < 4:
        return True
    return not wedge(u, u)


def factor_simple(u):
    """Vectors (v, w) with v ^ w == u for a nonzero simple bivector u.

    With U the antisymmetric coefficient matrix and U[i][j] the first
    nonzero entry, v is column j and w is minus column i over U[i][j].
    """
    if u.k != 2:
        raise ExteriorError("factor_simple is defined for grade 2")
    if not u:
        raise ExteriorError("cannot factor the zero bivector")
    m = antisymmetric_matrix(u)
    i, j = min(u._c)
    i, j = i - 1, j - 1
    piv = m[i][j]
    cls = type(u)
    v = cls.from_coords(u.n, 1, [m[r][j] for r in range(u.n)])
    w = cls.from_coords(u.n, 1, [-m[r][i] / piv for r in range(u.n)])
    if wedge(v, w) != u:
        raise ExteriorError("bivector is not simple")
    return v, w


class Subspace:
    """Subspace of a homogeneous exterior power, kept with an exact basis.

    ``basis`` keeps the independent elements given at construction (in
    order, dependent ones dropped); ``canonical`` is the RREF basis used
    for comparisons.
    """

    __slots__ = ("cls", "n", "k", "basis", "_rref", "_pivots")

    def __init__(self, cls, n, k, elements=()):
        self.cls, self.n, self.k = cls, n, k
        elements = list(elements)
        for e in elements:
            if type(e) is not cls or e.n != n or e.k != k:
                raise ExteriorError("element does not live in the ambient space")
        rows = [e.coords() for e in elements]
        keep = linalg.independent_subset(rows, self.ambient_dim) if rows else []
        self.basis = tuple(elements[i] for i in keep)
        if self.basis:
            self._rref, self._pivots = linalg.rref([rows[i] for i in keep],
                                                   self.ambient_dim)
        else:
            self._rref, self._pivots = [], []

    @classmethod
    def span(cls_, elements, like=None):
        elements = list(elements)
        ref = like if like is not None else elements[0]
        return cls_(type(ref), ref.n, ref.k, elements)

    @classmethod
    def full(cls_, cls, n, k):
        return cls_(cls, n, k, [cls.basis(n, idx) for idx in basis_indices(n, k)])

    @classmethod
    def zero(cls_, cls, n, k):
        return cls_(cls, n, k, [])

    @classmethod
    def _from_rows(cls_, cls, n, k, rows):
        return cls_(cls, n, k, [cls.from_coords(n, k, r) for r in rows])

    @property
    def ambient_dim(self):
        return len(basis_indices(self.n, self.k))

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    @property
    def canonical(self):
        return tuple(self.cls.from_coords(self.n, self.k, r) for r in self._rref)

    def _same_ambient(self, other):
        if (other.cls, other.n, other.k) != (self.cls, self.n, self.k):
            raise ExteriorError("subspaces live in different ambient spaces")

    def coordinates(self, x):
        """Coefficients of x in ``basis``, or None if x is not in the span."""
        if type(x) is not self.cls or x.n != self.n or x.k != self.k:
            raise ExteriorError("element does not live in the ambient space")
        if not self.basis:
            return [] if not x else None
        cols = [b.coords() for b in self.basis]
        a = linalg.transpose(cols)
        return linalg.solve(a, x.coords(), len(cols))

    def __contains__(self, x):
        if isinstance(x, Subspace):
            return self.contains(x)
        return self.coordinates(x) is not None

    def contains(self, other):
        if isinstance(other, Subspace):
            self._same_ambient(other)
            return all(b in self for b in other.basis)
        return other in self

    def __add__(self, other):
        self._same_ambient(other)
        return Subspace(self.cls, self.n, self.k, list(self.basis) + list(other.basis))

    def intersection(self, other):
        self._same_ambient(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.cls, self.n, self.k)
        # a.u = b.w  <=>  [U^T | -W^T](a, b) = 0
        cols = [b.coords() for b in self.basis] + \
               [[-x for x in b.coords()] for b in other.basis]
        a = linalg.transpose(cols)
        ker = linalg.nullspace(a, len(cols))
        m = len(self.basis)
        out = []
        for x in ker:
            vec = self.cls.zero(self.n, self.k)
            for t, b in zip(x[:m], self.basis):
                if t:
                    vec = vec + t * b
            out.append(vec)
        return Subspace(self.cls, self.n, self.k, out)

    __and__ = intersection

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return ((self.cls, self.n, self.k) == (other.cls, other.n, other.k)
                and self._rref == other._rref)

    def __hash__(self):
        return hash((self.cls.__name__, self.n, self.k,
                     tuple(tuple(r) for r in self._rref)))

    def __repr__(self):
        body = ", ".join(repr(b) for b in self.basis)
        return f"Subspace(dim={self.dim}, [{body}])"
