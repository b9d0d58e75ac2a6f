"""Exact integer linear algebra: row echelon lattices and Smith normal form.

Elimination always moves the entry of least absolute value into the pivot
position and reduces the rest of the line modulo it, so no extended gcd
bookkeeping is needed. Matrices start as int64 and are promoted to Python
ints (object dtype) as soon as an entry grows past a safe bound.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd

import numpy as np

from artin_homology.logging import get_logger

logger = get_logger("oracle.smith")

# Entries above this are promoted to object dtype before the next update.
_INT64_GUARD = 2 ** 31


def as_int_matrix(M, ncols: int | None = None) -> np.ndarray:
    """2-D integer array from nested lists or an array; empty input needs ncols."""
    if isinstance(M, np.ndarray) and M.dtype != object:
        A = M.astype(np.int64)
    else:
        A = np.array(M, dtype=object)
    if A.size == 0:
        width = A.shape[1] if A.ndim == 2 and ncols is None else (ncols or 0)
        return np.zeros((A.shape[0] if A.ndim == 2 else 0, width), dtype=np.int64)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {A.shape}")
    if A.dtype == object:
        try:
            A = A.astype(np.int64)
        except OverflowError:
            return A
    return _guard(A)


def _guard(A: np.ndarray) -> np.ndarray:
    if A.dtype != object and A.size and np.abs(A).max() >= _INT64_GUARD:
        logger.debug(f"promoting {A.shape} matrix to arbitrary precision")
        return A.astype(object)
    return A


@dataclass
class Echelon:
    """Row echelon basis of the row lattice of a matrix.

    ``rows[k]`` is zero left of ``pivots[k]``; pivots strictly increase.
    """
    rows: np.ndarray
    pivots: tuple[int, ...]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, v) -> bool:
        """Membership of the integer vector v in the row lattice."""
        r = np.array(v, dtype=object)
        if r.shape != (self.ncols,):
            raise ValueError(f"vector of length {r.shape} against {self.ncols} columns")
        for row, c in zip(self.rows, self.pivots):
            if r[c] == 0:
                continue
            q, rem = divmod(int(r[c]), int(row[c]))
            if rem:
                return False
            r = r - q * row.astype(object)
        return not r.any()


def row_echelon(M, ncols: int | None = None) -> Echelon:
    """Echelon form by unimodular row operations; the row lattice is unchanged."""
    A = as_int_matrix(M, ncols).copy()
    nrows, ncols = A.shape
    top = 0
    pivots = []
    for c in range(ncols):
        if top == nrows:
            break
        nz = np.flatnonzero(A[top:, c]) + top
        while len(nz) > 1:
            p = nz[np.argmin(np.abs(A[nz, c]))]
            others = nz[nz != p]
            q = A[others, c] // A[p, c]
            A[others, c:] -= np.outer(q, A[p, c:])
            A = _guard(A)
            nz = others[A[others, c] != 0]
            nz = np.append(nz, p)
        if len(nz) == 1:
            p = nz[0]
            if p != top:
                A[[top, p]] = A[[p, top]]
            if A[top, c] < 0:
                A[top] = -A[top]
            pivots.append(c)
            top += 1
    return Echelon(A[:top].copy(), tuple(pivots), ncols)


def _diagonalize(A: np.ndarray) -> list[int]:
    """Diagonal of a matrix equivalent to A, without the divisibility chain."""
    A = A.copy()
    nrows, ncols = A.shape
    diagonal = []
    for t in range(min(nrows, ncols)):
        block = A[t:, t:]
        nz = np.argwhere(block != 0)
        if len(nz) == 0:
            break
        i, j = nz[np.argmin(np.abs(block[nz[:, 0], nz[:, 1]]))] + t
        A[[t, i]] = A[[i, t]]
        A[:, [t, j]] = A[:, [j, t]]
        while True:
            col = np.flatnonzero(A[t + 1:, t]) + t + 1
            row = np.flatnonzero(A[t, t + 1:]) + t + 1
            if len(col) == 0 and len(row) == 0:
                break
            if len(col):
                A[col, t:] -= np.outer(A[col, t] // A[t, t], A[t, t:])
            if len(row):
                A[t:, row] -= np.outer(A[t:, t], A[t, row] // A[t, t])
            A = _guard(A)
            # a nonzero remainder is smaller than the pivot: swap it in
            rem_col = np.flatnonzero(A[t + 1:, t]) + t + 1
            rem_row = np.flatnonzero(A[t, t + 1:]) + t + 1
            if len(rem_col):
                k = rem_col[np.argmin(np.abs(A[rem_col, t]))]
                A[[t, k]] = A[[k, t]]
            elif len(rem_row):
                k = rem_row[np.argmin(np.abs(A[t, rem_row]))]
                A[:, [t, k]] = A[:, [k, t]]
        diagonal.append(abs(int(A[t, t])))
    return diagonal


def _divisibility_chain(diagonal: list[int]) -> tuple[int, ...]:
    d = sorted(diagonal)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return tuple(sorted(d))


def snf(M, ncols: int | None = None) -> tuple[int, ...]:
    """Nonzero invariant factors d_1 | d_2 | ... of M, units included."""
    echelon = row_echelon(M, ncols)
    if echelon.rank == 0:
        return ()
    logger.debug(f"snf: rank {echelon.rank} echelon of {echelon.rows.shape}")
    return _divisibility_chain(_diagonalize(echelon.rows))


def rank(M, ncols: int | None = None) -> int:
    return row_echelon(M, ncols).rank


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ..., every t_i > 1."""
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = ["Z"] if self.free_rank == 1 else []
        if self.free_rank > 1:
            parts = [f"Z^{self.free_rank}"]
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "0"

    @property
    def is_elementary_2(self) -> bool:
        return self.free_rank == 0 and all(t == 2 for t in self.torsion)

    def f2_rank(self) -> int:
        """Dimension of the group tensored with Z/2."""
        return self.free_rank + sum(1 for t in self.torsion if t % 2 == 0)

    def to_record(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


def cokernel_invariants(relations, ncols: int) -> AbelianInvariants:
    """Z^ncols modulo the row lattice of ``relations``."""
    factors = snf(relations, ncols)
    return AbelianInvariants(ncols - len(factors), tuple(d for d in factors if d > 1))


def int_det(M) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def minor_gcd_factors(M) -> tuple[int, ...]:
    """Invariant factors from gcds of k x k minors; brute force, small matrices only."""
    A = [[int(x) for x in row] for row in M]
    if not A or not A[0]:
        return ()
    nrows, ncols = len(A), len(A[0])
    factors = []
    previous = 1
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for rows in combinations(range(nrows), k):
            for cols in combinations(range(ncols), k):
                g = gcd(g, int_det([[A[r][c] for c in cols] for r in rows]))
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return tuple(factors)
