"""Dense linear algebra over a Field, on numpy index matrices."""

from __future__ import annotations

import numpy as np

from .gf import Field


def matmul(F: Field, A, B):
    """Matrix product over F; A is (m, k), B is (k, n)."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    B = np.atleast_2d(np.asarray(B, dtype=np.int64))
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch: {A.shape} @ {B.shape}")
    if A.shape[0] == 0 or B.shape[1] == 0 or A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    prod = F.vmul(A[:, :, None], B[None, :, :])
    return F.vsum(prod, axis=1)


def matvec(F: Field, A, v):
    return matmul(F, A, np.asarray(v, dtype=np.int64).reshape(-1, 1))[:, 0]


def rref(F: Field, A):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = np.atleast_2d(np.asarray(A, dtype=np.int64)).copy()
    m, n = R.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if len(nz) == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = F.vscale(F.inv(int(R[row, col])), R[row])
        for i in range(m):
            if i != row and R[i, col] != 0:
                R[i] = F.vsub(R[i], F.vscale(int(R[i, col]), R[row]))
        pivots.append(col)
        row += 1
    return R, pivots


def rank(F: Field, A) -> int:
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    if A.size == 0:
        return 0
    _, pivots = rref(F, A)
    return len(pivots)


def row_basis(F: Field, A):
    """Canonical (rref) basis of the row space, zero rows stripped."""
    R, pivots = rref(F, A)
    return R[: len(pivots)]


def right_nullspace(F: Field, A):
    """Basis of {v : A v^T = 0}, as rows of an (n - rank, n) matrix."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    n = A.shape[1]
    R, pivots = rref(F, A)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for row_idx, pc in enumerate(pivots):
            basis[k, pc] = F.neg(int(R[row_idx, fc]))
    return basis


def row_space_equal(F: Field, A, B) -> bool:
    RA = row_basis(F, A)
    RB = row_basis(F, B)
    return RA.shape == RB.shape and bool(np.array_equal(RA, RB))


def in_row_space(F: Field, A, v) -> bool:
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    stacked = np.vstack([A, np.asarray(v, dtype=np.int64).reshape(1, -1)])
    return rank(F, stacked) == rank(F, A)


class GreedyRowFilter:
    """Incrementally keeps rows that enlarge the row space.

    Rows are offered in order; `offer` returns True when the row was
    independent of everything kept so far.  Used to turn an ordered
    candidate list into a deterministic basis.
    """

    def __init__(self, F: Field, ncols: int):
        self.F = F
        self.ncols = ncols
        self._rows = np.zeros((0, ncols), dtype=np.int64)
        self._pivots: list[int] = []

    def offer(self, v) -> bool:
        F = self.F
        v = np.asarray(v, dtype=np.int64).copy()
        for row, pc in zip(self._rows, self._pivots):
            if v[pc] != 0:
                v = F.vsub(v, F.vscale(int(v[pc]), row))
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return False
        pc = int(nz[0])
        v = F.vscale(F.inv(int(v[pc])), v)
        self._rows = np.vstack([self._rows, v.reshape(1, -1)])
        self._pivots.append(pc)
        return True

    @property
    def rank(self) -> int:
        return len(self._pivots)
