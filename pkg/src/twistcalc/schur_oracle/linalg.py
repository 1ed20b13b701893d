"""Dense exact linear algebra over GF(q).  Vectors are rows."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import GF


def _as2d(M: np.ndarray, ncols: int | None = None) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1) if M.size or ncols is None else M.reshape(0, ncols)
    return M


def rref(F: GF, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    A = _as2d(M).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = A[r, c]
        if lead != 1:
            A[r] = F.mul(A[r], F.inv(lead))
        col = A[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            A[hit] = F.sub(A[hit], F.mul(col[hit, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: GF, M: np.ndarray) -> int:
    M = _as2d(M)
    if M.size == 0:
        return 0
    # reduce along the shorter side
    if M.shape[0] > M.shape[1]:
        M = M.T
    return len(rref(F, M)[1])


def row_basis(F: GF, M: np.ndarray, ncols: int | None = None) -> np.ndarray:
    M = _as2d(M, ncols)
    if M.shape[0] == 0:
        return M.reshape(0, M.shape[1])
    return rref(F, M)[0]


def nullspace(F: GF, M: np.ndarray, ncols: int | None = None) -> np.ndarray:
    """Rows x with M @ x == 0."""
    M = _as2d(M, ncols)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, M)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, pc in enumerate(piv):
            out[k, pc] = F.neg(R[i, f])
    return out


def left_kernel(F: GF, M: np.ndarray) -> np.ndarray:
    """Rows x with x @ M == 0."""
    M = _as2d(M)
    return nullspace(F, M.T, ncols=M.shape[0])


def inverse(F: GF, M: np.ndarray) -> np.ndarray:
    M = _as2d(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, piv = rref(F, np.hstack([M, np.eye(n, dtype=np.int64)]))
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return R[:n, n:]


@dataclass
class Coordinates:
    """Fast coordinates with respect to a row basis of full rank."""

    F: GF
    basis: np.ndarray
    pivots: list[int]
    inv: np.ndarray

    @classmethod
    def of(cls, F: GF, basis: np.ndarray) -> Coordinates:
        basis = _as2d(basis)
        if basis.shape[0] == 0:
            return cls(F, basis, [], np.zeros((0, 0), dtype=np.int64))
        _, piv = rref(F, basis)
        if len(piv) != basis.shape[0]:
            raise ValueError("basis rows are dependent")
        return cls(F, basis, piv, inverse(F, basis[:, piv]))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __call__(self, vectors: np.ndarray, check: bool = True) -> np.ndarray:
        V = _as2d(vectors, self.basis.shape[1])
        if self.dim == 0:
            if check and np.any(V):
                raise ValueError("vector outside the span")
            return np.zeros((V.shape[0], 0), dtype=np.int64)
        C = self.F.matmul(V[:, self.pivots], self.inv)
        if check and not np.array_equal(self.F.matmul(C, self.basis), V):
            raise ValueError("vector outside the span")
        return C


def complement(F: GF, sub: np.ndarray, ambient: np.ndarray, ncols: int) -> np.ndarray:
    """Rows spanning ``ambient`` modulo ``sub``, reduced against ``sub``'s echelon form."""
    sub = row_basis(F, sub, ncols)
    ambient = _as2d(ambient, ncols)
    if ambient.shape[0] == 0:
        return ambient.reshape(0, ncols)
    reduced = ambient.copy()
    if sub.shape[0]:
        _, piv = rref(F, sub)
        for i, c in enumerate(piv):
            col = reduced[:, c].copy()
            hit = np.nonzero(col)[0]
            if hit.size:
                reduced[hit] = F.sub(reduced[hit], F.mul(col[hit, None], sub[i][None, :]))
    return row_basis(F, reduced, ncols)


def column_space(F: GF, M: np.ndarray) -> np.ndarray:
    """Row basis of the span of the columns of M."""
    M = _as2d(M)
    return row_basis(F, M.T, ncols=M.shape[0])
