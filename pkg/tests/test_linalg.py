from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from modring.linalg import (DEFAULT_PRIME, SECOND_PRIME, ModularEchelon, _matmul_mod,
                            bareiss_echelon, rank, rank_and_kernel, rank_mod_p, to_residues)


def naive_rank(M):
    """Textbook Gaussian elimination over Q (the oracle)."""
    A = [[Fraction(x) for x in row] for row in M]
    r = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
    return r


def matrices(max_rows=7, max_cols=7, entries=st.integers(-9, 9)):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols)).flatmap(
        lambda s: st.lists(st.lists(entries, min_size=s[1], max_size=s[1]),
                           min_size=s[0], max_size=s[0]))


def low_rank(draw_rows, draw_cols, r):
    rng = np.random.default_rng(r * 7919 + draw_rows)
    A = rng.integers(-4, 5, size=(draw_rows, r))
    B = rng.integers(-4, 5, size=(r, draw_cols))
    return (A @ B).tolist()


def test_rank_examples():
    I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rank_and_kernel(I3) == (3, [])
    r, ker = rank_and_kernel([[1, 2], [2, 4]])
    assert r == 1 and len(ker) == 1
    v = ker[0]
    assert v[0] / v[1] == Fraction(-2)   # spanned by (2, -1)
    assert rank([]) == 0


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_bareiss_matches_naive(M):
    assert rank(M) == naive_rank(M)


@settings(max_examples=100, deadline=None)
@given(matrices(entries=st.fractions(-3, 3, max_denominator=5)))
def test_bareiss_rational_input(M):
    assert rank(M) == naive_rank(M)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_left_kernel(M):
    r, ker = rank_and_kernel(M)
    assert r + len(ker) == len(M)
    for v in ker:
        assert all(isinstance(x, Fraction) for x in v)
        for j in range(len(M[0])):
            assert sum(v[i] * M[i][j] for i in range(len(M))) == 0
    if ker:
        assert naive_rank(ker) == len(ker)


@settings(max_examples=200, deadline=None)
@given(matrices(9, 9))
def test_rank_mod_p_matches(M):
    assert rank_mod_p(M) == rank(M)
    assert rank_mod_p(M, SECOND_PRIME) == rank(M)


@pytest.mark.parametrize("rows,cols,r", [(12, 10, 3), (30, 25, 17), (80, 60, 41)])
def test_rank_mod_p_low_rank(rows, cols, r):
    M = low_rank(rows, cols, r)
    assert rank_mod_p(M) == rank(M) == r


def test_rank_can_drop_mod_p():
    p = 101
    M = [[1, 0], [0, p]]
    assert rank(M) == 2 and rank_mod_p(M, p) == 1


def test_bareiss_pivots_first_nonzero():
    E, piv = bareiss_echelon([[0, 0, 1], [0, 2, 4], [3, 1, 1]])
    assert piv == [0, 1, 2]
    assert E[0] == [3, 1, 1]


def test_residues():
    x = to_residues([Fraction(1, 2), -1, 0], 7)
    assert list(x) == [4, 6, 0]
    with pytest.raises(ZeroDivisionError):
        to_residues([Fraction(1, 7)], 7)


def test_matmul_mod_exact_over_blocks():
    p = DEFAULT_PRIME
    rng = np.random.default_rng(1)
    A = rng.integers(0, p, size=(5, 4500))
    B = rng.integers(0, p, size=(4500, 3))
    expected = [[sum(int(A[i, k]) * int(B[k, j]) for k in range(4500)) % p
                 for j in range(3)] for i in range(5)]
    assert _matmul_mod(A, B, p).tolist() == expected


def test_modular_echelon_incremental():
    rng = np.random.default_rng(5)
    p = 10007
    X = rng.integers(0, p, size=(300, 90))
    E = ModularEchelon(90, p)
    for s in range(0, 300, 37):
        E.add(X[s:s + 37], block=16)
    assert E.rank == 90
    assert not E.free_columns()
    assert not np.any(E.reduce(X))


def test_modular_echelon_rejects_large_prime():
    with pytest.raises(ValueError):
        ModularEchelon(3, 1 << 21 | 1)
