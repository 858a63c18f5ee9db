"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Every rank,
kernel and image computation goes through :func:`echelon_int`, which uses
the compiled kernel when it is importable and falls back to pure Python
otherwise (or when int64 overflows).
"""

import os
from fractions import Fraction
from math import lcm

from . import _echelon

try:
    if os.environ.get("LIECONE_PURE_PYTHON"):
        raise ImportError("pure-Python kernel requested")
    from ._kernels import echelon as _echelon_compiled
except ImportError:
    _echelon_compiled = None

KERNEL = "cython" if _echelon_compiled is not None else "python"


def echelon_int(rows, ncols):
    """Primitive reduced echelon form of an integer matrix."""
    if _echelon_compiled is not None:
        try:
            return _echelon_compiled(rows, ncols)
        except OverflowError:
            pass
    return _echelon.echelon(rows, ncols)


def _integer_row(row):
    den = 1
    for x in row:
        if x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [x.numerator for x in row]
    return [x.numerator * (den // x.denominator) for x in row]


def rref(rows, ncols=None):
    """Reduced row echelon form; returns ``(rows, pivots)`` with pivots 1."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    irows = [_integer_row([Fraction(x) for x in r]) for r in rows]
    red, pivots = echelon_int(irows, ncols)
    out = []
    for row, c in zip(red, pivots):
        p = row[c]
        out.append([Fraction(x, p) for x in row])
    return out, pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` for ``A`` given by its rows."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, c in zip(red, pivots):
            x[c] = -row[f]
        basis.append(x)
    return basis


def row_basis(rows, ncols):
    """Canonical (RREF) basis of the row space."""
    if not rows:
        return []
    return rref(rows, ncols)[0]


def independent_subset(rows, ncols):
    """Indices of a maximal independent subset, chosen greedily in order."""
    keep = []
    current = 0
    for i in range(len(rows)):
        trial = [rows[j] for j in keep] + [rows[i]]
        r = rank(trial, ncols)
        if r > current:
            keep.append(i)
            current = r
    return keep


def solve(rows, rhs, ncols):
    """One solution ``x`` of ``A x = b``, or ``None`` if inconsistent."""
    aug = [list(r) + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1) if aug else ([], [])
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return x


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt]
            for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(m):
    n = len(m)
    aug = [list(map(Fraction, row)) + e for row, e in zip(m, identity(n))]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red[:n]]


def det(m):
    """Determinant by Bareiss elimination (exact)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [list(map(Fraction, row)) for row in m]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_minors(m):
    return [det([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


def is_positive_definite(m):
    """Sylvester's criterion: every leading principal minor is positive."""
    if not is_symmetric(m):
        return False
    return all(d > 0 for d in leading_minors(m))


def is_symmetric(m):
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def congruence_diagonalize(m):
    """Symmetric congruence diagonalization ``P^T M P = D``.

    Returns ``(diag, P)``.  Zero diagonals are handled by folding a
    partner row/column with a nonzero off-diagonal entry into the pivot,
    which is the same as pivoting on the 2x2 hyperbolic block.
    """
    n = len(m)
    a = [list(map(Fraction, row)) for row in m]
    if not is_symmetric(a):
        raise ValueError("matrix is not symmetric")
    p = identity(n)
    for i in range(n):
        if a[i][i] == 0:
            k = next((k for k in range(i + 1, n) if a[k][k] != 0), None)
            if k is not None:
                _swap(a, p, i, k)
            else:
                k = next((k for k in range(i + 1, n) if a[i][k] != 0), None)
                if k is None:
                    continue
                # e_i <- e_i + e_k makes the pivot 2 a_ik
                _add(a, p, i, k, Fraction(1))
        piv = a[i][i]
        for j in range(i + 1, n):
            if a[i][j] != 0:
                _add(a, p, j, i, -a[i][j] / piv)
    return [a[i][i] for i in range(n)], p


def _swap(a, p, i, k):
    a[i], a[k] = a[k], a[i]
    for row in a:
        row[i], row[k] = row[k], row[i]
    for row in p:
        row[i], row[k] = row[k], row[i]


def _add(a, p, i, k, t):
    """Basis change e_i <- e_i + t e_k applied by congruence."""
    n = len(a)
    for j in range(n):
        a[i][j] += t * a[k][j]
    for j in range(n):
        a[j][i] += t * a[j][k]
    for row in p:
        row[i] += t * row[k]


def signature(m):
    """``(positive, negative, null)`` inertia of a symmetric matrix."""
    diag, _ = congruence_diagonalize(m)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg
