# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 version of ``_echelon.echelon``.

Raises OverflowError whenever an input or intermediate value leaves the
int64 range; the caller then reruns the pure-Python kernel.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static int lc_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int lc_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int lc_mul_ovf(long long a, long long b, long long *r) nogil
    int lc_sub_ovf(long long a, long long b, long long *r) nogil

# keeps negation and abs() safe
cdef long long LIMIT = 4611686018427387904  # 2**62


cdef inline long long _abs(long long x) nogil:
    return -x if x < 0 else x


cdef inline long long _gcd(long long a, long long b) nogil:
    a = _abs(a)
    b = _abs(b)
    while b:
        a, b = b, a % b
    return a


cdef void _make_primitive(long long *row, int ncols) nogil:
    cdef long long g = 0
    cdef int j
    for j in range(ncols):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] = row[j] // g


cdef int _reduce(long long *m, int nrows, int ncols, int *pivots) nogil:
    """Returns the rank, or -1 on overflow."""
    cdef int r = 0, c, i, j, p
    cdef long long x, ax, best, a0, b0, g, a, b, t1, t2, t3
    cdef long long *prow
    cdef long long *row
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        best = 0
        for i in range(r, nrows):
            x = m[i * ncols + c]
            if x:
                ax = _abs(x)
                if p < 0 or ax < best:
                    p = i
                    best = ax
                    if ax == 1:
                        break
        if p < 0:
            continue
        if p != r:
            for j in range(ncols):
                x = m[r * ncols + j]
                m[r * ncols + j] = m[p * ncols + j]
                m[p * ncols + j] = x
        prow = m + r * ncols
        if prow[c] < 0:
            for j in range(ncols):
                prow[j] = -prow[j]
        _make_primitive(prow, ncols)
        a0 = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m + i * ncols
            b0 = row[c]
            if not b0:
                continue
            g = _gcd(a0, b0)
            a = a0 // g
            b = b0 // g
            for j in range(ncols):
                if lc_mul_ovf(a, row[j], &t1):
                    return -1
                if lc_mul_ovf(b, prow[j], &t2):
                    return -1
                if lc_sub_ovf(t1, t2, &t3):
                    return -1
                if t3 >= LIMIT or t3 <= -LIMIT:
                    return -1
                row[j] = t3
            _make_primitive(row, ncols)
        pivots[r] = c
        r += 1
    return r


def echelon(rows, int ncols):
    """Same contract as ``liecone._echelon.echelon``."""
    cdef int nrows = len(rows)
    cdef int i, j, rank
    cdef long long v
    if nrows == 0 or ncols == 0:
        return [], []
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    cdef int *pivots = <int *> malloc(ncols * sizeof(int))
    if m == NULL or pivots == NULL:
        free(m)
        free(pivots)
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                pv = row[j]
                if pv >= LIMIT or pv <= -LIMIT:
                    raise OverflowError("entry exceeds int64 kernel range")
                m[i * ncols + j] = pv
        with nogil:
            rank = _reduce(m, nrows, ncols, pivots)
        if rank < 0:
            raise OverflowError("int64 overflow during elimination")
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(rank)]
        piv = [pivots[i] for i in range(rank)]
        return out, piv
    finally:
        free(m)
        free(pivots)
