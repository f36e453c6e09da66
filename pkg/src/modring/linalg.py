"""Exact and modular linear algebra for the presentation checks.

Exact work uses fraction-free (Bareiss) elimination on integer matrices;
rational input is cleared of denominators row by row first, which does not
change rank or the row space. The modular routines work over F_p with
p < 2^21, so that products of residues and sums of up to 2^11 of them are
exact in float64 and the heavy reductions can go through BLAS.

Kernels are left kernels, ``{v : v M = 0}``: rows of an evaluation matrix
are monomials, so a left kernel vector is a linear relation among them.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

__all__ = [
    "DEFAULT_PRIME",
    "ModularEchelon",
    "bareiss_echelon",
    "rank",
    "rank_and_kernel",
    "rank_mod_p",
    "to_residues",
]

# Largest prime below 2^21.
DEFAULT_PRIME = 2097143
SECOND_PRIME = 2097133

_BLOCK = 2048  # inner dimension bound for exact float64 products mod p


def _integer_rows(M: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in M:
        row = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def bareiss_echelon(M: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of ``M`` and its pivot columns.

    Pivoting takes the first row with a nonzero entry in the current column.
    All intermediate divisions are exact.
    """
    A = _integer_rows(M)
    rows = len(A)
    cols = len(A[0]) if A else 0
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        pr = A[r]
        for i in range(r + 1, rows):
            ai = A[i]
            f = ai[c]
            if f:
                A[i] = [(piv * ai[j] - f * pr[j]) // prev for j in range(cols)]
            else:
                A[i] = [(piv * ai[j]) // prev for j in range(cols)]
        prev = piv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M: Sequence[Sequence]) -> int:
    return len(bareiss_echelon(M)[1])


def rank_and_kernel(M: Sequence[Sequence]) -> tuple[int, list[list[Fraction]]]:
    """Exact rank of ``M`` and a basis of its left kernel ``{v : v M = 0}``."""
    rows = len(M)
    if rows == 0:
        return 0, []
    cols = len(M[0])
    T = [[M[i][j] for i in range(rows)] for j in range(cols)]
    E, pivots = bareiss_echelon(T) if cols else ([], [])
    r = len(pivots)
    # back substitution on the echelon form of M^T
    free = [j for j in range(rows) if j not in set(pivots)]
    kernel = []
    for f in free:
        v = [Fraction(0)] * rows
        v[f] = Fraction(1)
        for i in range(r - 1, -1, -1):
            c = pivots[i]
            s = sum((E[i][j] * v[j] for j in range(c + 1, rows) if E[i][j]), Fraction(0))
            v[c] = -s / E[i][c]
        kernel.append(v)
    return r, kernel


# -- modular ---------------------------------------------------------------------

def to_residues(values: Sequence, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Reduce rationals mod ``p``; a denominator divisible by ``p`` is an error."""
    out = np.empty(len(values), dtype=np.int64)
    for i, x in enumerate(values):
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"denominator of {x} is divisible by {p}")
        out[i] = x.numerator % p * pow(x.denominator, -1, p) % p
    return out


def _matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """``A @ B mod p`` for residue matrices, exact via float64 blocks."""
    n = A.shape[1]
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.float64)
    for s in range(0, n, _BLOCK):
        prod = A[:, s:s + _BLOCK].astype(np.float64) @ B[s:s + _BLOCK].astype(np.float64)
        out = np.fmod(out + np.fmod(prod, p), p)
    return out.astype(np.int64)


def _rref_rows(B: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced echelon form of a small block of residue rows."""
    rows: list[np.ndarray] = []
    piv: list[int] = []
    for row in B:
        for c, r in zip(piv, rows):
            if row[c]:
                row = (row - row[c] * r) % p
        nz = np.flatnonzero(row)
        if not nz.size:
            continue
        c = int(nz[0])
        row = row * pow(int(row[c]), -1, p) % p
        for i, r in enumerate(rows):
            if r[c]:
                rows[i] = (r - r[c] * row) % p
        rows.append(row)
        piv.append(c)
    if not rows:
        return np.zeros((0, B.shape[1]), dtype=np.int64), []
    return np.array(rows, dtype=np.int64), piv


class ModularEchelon:
    """Reduced row echelon basis over F_p, grown by adding rows in batches."""

    def __init__(self, ncols: int, p: int = DEFAULT_PRIME):
        if p >= 1 << 21:
            raise ValueError("prime must be below 2^21")
        self.p = p
        self.ncols = ncols
        self.rows = np.zeros((0, ncols), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, X: np.ndarray) -> np.ndarray:
        """Remainders of the rows of ``X`` modulo the current row space."""
        X = np.asarray(X, dtype=np.int64) % self.p
        if not self.pivots or X.size == 0:
            return X
        coeff = X[:, self.pivots]
        return (X - _matmul_mod(coeff, self.rows, self.p)) % self.p

    def add(self, X: np.ndarray, block: int = 64) -> int:
        """Add the rows of ``X`` to the span; returns the rank increase."""
        p = self.p
        R = self.reduce(X)
        R = R[np.any(R != 0, axis=1)]
        gained = 0
        while R.shape[0]:
            B, R = R[:block], R[block:]
            N, piv = _rref_rows(B, p)
            if not piv:
                continue
            self._append(N, piv)
            gained += len(piv)
            if R.shape[0]:
                R = (R - _matmul_mod(R[:, piv], N, p)) % p
                R = R[np.any(R != 0, axis=1)]
        return gained

    def _append(self, N: np.ndarray, piv: list[int]) -> None:
        if self.pivots:
            # clear the new pivot columns from the old rows
            self.rows = (self.rows - _matmul_mod(self.rows[:, piv], N, self.p)) % self.p
            self.rows = np.vstack([self.rows, N])
        else:
            self.rows = N
        self.pivots += piv

    def add_in_chunks(self, X: np.ndarray, chunk: int = 4096) -> int:
        gained = 0
        for s in range(0, X.shape[0], chunk):
            gained += self.add(X[s:s + chunk])
            if self.rank == self.ncols:
                break
        return gained

    def free_columns(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ncols) if c not in piv]


def rank_mod_p(M, p: int = DEFAULT_PRIME) -> int:
    """Rank over F_p of an integer or rational matrix."""
    M = list(M)
    if not M:
        return 0
    A = np.array([to_residues(row, p) for row in M], dtype=np.int64)
    E = ModularEchelon(A.shape[1], p)
    E.add_in_chunks(A)
    return E.rank
