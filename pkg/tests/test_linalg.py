import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liecone import _echelon, linalg

try:
    from liecone._kernels import echelon as compiled
except ImportError:
    compiled = None

ints = st.integers(min_value=-6, max_value=6)


def mats(rows, cols):
    return st.lists(st.lists(ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.data())
def test_kernels_agree(r, c, data):
    if compiled is None:
        pytest.skip("compiled kernel not built")
    m = data.draw(mats(r, c))
    try:
        got = compiled(m, c)
    except OverflowError:
        return
    assert got == _echelon.echelon(m, c)


def test_compiled_overflow_falls_back():
    big = [[2 ** 61, 3], [5, 2 ** 61 - 1]]
    out = linalg.echelon_int(big, 2)
    assert out == _echelon.echelon(big, 2)
    if compiled is not None:
        with pytest.raises(OverflowError):
            compiled([[2 ** 63, 1]], 2)


def test_pure_python_selected_by_env():
    code = "from liecone.linalg import KERNEL; print(KERNEL)"
    env = dict(os.environ, LIECONE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.strip()
    assert out == "python"


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_nullspace_and_rank(r, c, data):
    m = [[Fraction(x) for x in row] for row in data.draw(mats(r, c))]
    ns = linalg.nullspace(m, c)
    assert linalg.rank(m, c) + len(ns) == c
    for v in ns:
        assert all(x == 0 for x in linalg.matvec(m, v))


def test_det_and_inverse():
    m = [[Fraction(2), 1, 0], [1, 3, 1], [0, 1, 4]]
    assert linalg.det(m) == 18
    inv = linalg.inverse(m)
    assert linalg.matmul(m, inv) == linalg.identity(3)


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3], 2) is None
    assert linalg.solve([[1, 1], [0, 1]], [3, 1], 2) == [2, 1]


def test_sylvester_and_signature():
    assert linalg.is_positive_definite([[2, 1], [1, 2]])
    assert not linalg.is_positive_definite([[1, 2], [2, 1]])
    assert not linalg.is_positive_definite([[0, 0], [0, 1]])
    assert linalg.signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert linalg.signature([[0, 0], [0, 0]]) == (0, 0, 2)
    assert linalg.signature([[1, 0, 0], [0, -2, 0], [0, 0, 0]]) == (1, 1, 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.data())
def test_congruence_diagonalization(n, data):
    a = data.draw(mats(n, n))
    s = [[Fraction(a[i][j] + a[j][i]) for j in range(n)] for i in range(n)]
    diag, p = linalg.congruence_diagonalize(s)
    d = linalg.matmul(linalg.transpose(p), linalg.matmul(s, p))
    assert all(d[i][j] == (diag[i] if i == j else 0) for i in range(n) for j in range(n))
    assert linalg.det(p) != 0
    pos, neg, null = linalg.signature(s)
    if pos == n:
        assert linalg.is_positive_definite(s)
