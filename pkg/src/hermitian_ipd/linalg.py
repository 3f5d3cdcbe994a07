"""Dense linear algebra over F_{q^2}: reduced echelon form, solving, kernels.

Matrices are 2-D ``uint8`` arrays of field elements. Elimination is
Gauss-Jordan with the first nonzero entry as pivot, processed left to right,
so results are deterministic and depend on the column order the caller picks.
"""

from __future__ import annotations

import numpy as np

from .galois import DTYPE, Field


def _eliminate(field: Field, A: np.ndarray, ncols: int, stop=None) -> list[int]:
    """In-place Gauss-Jordan on ``A``, pivoting only in the first ``ncols`` columns.

    ``stop(c, is_pivot)`` may return True to end the sweep early, right after
    column ``c`` has been processed.
    """
    mul, sub, inv = field.mul_table, field.sub_table, field.inv_table
    nrows = A.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r < nrows:
            nz = np.flatnonzero(A[r:, c])
        else:
            nz = ()
        if len(nz):
            k = r + int(nz[0])
            if k != r:
                A[[r, k]] = A[[k, r]]
            lead = A[r, c]
            if lead != 1:
                A[r, c:] = mul[A[r, c:], inv[lead]]
            col = A[:, c]
            others = np.flatnonzero(col)
            others = others[others != r]
            if others.size:
                prow = A[r, c:]
                A[others, c:] = sub[A[others, c:], mul[col[others][:, None], prow[None, :]]]
            pivots.append(c)
            r += 1
            if stop is not None and stop(c, True):
                break
        elif stop is not None and stop(c, False):
            break
    return pivots


def rref(field: Field, M: np.ndarray, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` and its pivot columns."""
    A = np.array(M, dtype=DTYPE, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    pivots = _eliminate(field, A, A.shape[1] if ncols is None else ncols)
    return A, pivots


def rank(field: Field, M: np.ndarray) -> int:
    return len(rref(field, M)[1])


def kernel_vector(field: Field, R: np.ndarray, pivots: list[int], free: int) -> np.ndarray:
    """The kernel vector of an RREF matrix attached to free column ``free``.

    It has a 1 at ``free``, zeros at the other free columns, and is supported
    on columns ``<= free``.
    """
    ncols = R.shape[1]
    v = np.zeros(ncols, dtype=DTYPE)
    v[free] = 1
    for row, c in enumerate(pivots):
        if c > free:
            break
        v[c] = field.neg_table[R[row, free]]
    return v


def nullspace(field: Field, M: np.ndarray) -> np.ndarray:
    """Basis of the right kernel, one vector per row, ordered by free column."""
    M = np.asarray(M, dtype=DTYPE)
    R, pivots = rref(field, M)
    pivset = set(pivots)
    free = [c for c in range(M.shape[1]) if c not in pivset]
    if not free:
        return np.zeros((0, M.shape[1]), dtype=DTYPE)
    return np.array([kernel_vector(field, R, pivots, f) for f in free], dtype=DTYPE)


def solve(field: Field, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """A solution of ``A x = b`` with free variables set to zero, or None."""
    A = np.asarray(A, dtype=DTYPE)
    b = np.asarray(b, dtype=DTYPE).reshape(-1, 1)
    if A.shape[0] != b.shape[0]:
        raise ValueError("dimension mismatch")
    R, pivots = rref(field, np.hstack([A, b]), ncols=A.shape[1])
    if np.any(R[len(pivots):, -1]):
        return None
    x = np.zeros(A.shape[1], dtype=DTYPE)
    x[pivots] = R[: len(pivots), -1]
    return x


class LinearSolver:
    """Factorization of a fixed matrix ``A`` for repeated right-hand sides.

    Stores the row transform ``E`` with ``E @ A = rref(A)``; each solve is then
    a matrix-vector product. Solutions are the pivot solutions (free
    variables zero), hence linear in the right-hand side.
    """

    def __init__(self, field: Field, A: np.ndarray):
        A = np.asarray(A, dtype=DTYPE)
        self.field = field
        self.shape = A.shape
        aug = np.hstack([A, np.eye(A.shape[0], dtype=DTYPE)])
        R, pivots = rref(field, aug, ncols=A.shape[1])
        self.pivots = np.array(pivots, dtype=np.int64)
        self.rank = len(pivots)
        self.transform = R[:, A.shape[1]:]

    def solve(self, b: np.ndarray) -> np.ndarray | None:
        y = self.field.matvec(self.transform, np.asarray(b, dtype=DTYPE))
        if np.any(y[self.rank:]):
            return None
        x = np.zeros(self.shape[1], dtype=DTYPE)
        x[self.pivots] = y[: self.rank]
        return x
