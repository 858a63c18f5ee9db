"""Pure-Python fraction-free row reduction over the integers.

Reference implementation of the hot kernel; the compiled ``_kernels``
extension implements the same algorithm on int64 and defers to this one
on overflow.
"""

from math import gcd


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def echelon(rows, ncols):
    """Reduce an integer matrix to primitive reduced echelon form.

    Returns ``(rows, pivots)``: the nonzero rows, each divided by the gcd
    of its entries with a positive pivot, and zero in every other row's
    pivot column.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        best = 0
        for i in range(r, nrows):
            x = m[i][c]
            if x:
                ax = -x if x < 0 else x
                if p < 0 or ax < best:
                    p, best = i, ax
                    if ax == 1:
                        break
        if p < 0:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        if prow[c] < 0:
            prow = [-x for x in prow]
        prow = _primitive(prow)
        m[r] = prow
        a0 = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            b0 = row[c]
            if not b0:
                continue
            g = gcd(a0, b0)
            a, b = a0 // g, b0 // g
            m[i] = _primitive([a * x - b * y for x, y in zip(row, prow)])
        pivots.append(c)
        r += 1
    return m[:r], pivots
