"""Dense linear algebra over F_p on numpy int64 arrays (p < 2^31)."""
from __future__ import annotations

from typing import List, Tuple

import numpy as np


def _as_array(A, p: int) -> np.ndarray:
    return np.array(A, dtype=np.int64, copy=True).reshape(np.shape(A)) % p


def rref_mod_p(A, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns."""
    M = _as_array(A, p)
    if M.ndim != 2:
        raise ValueError("expected a 2-d array")
    m, n = M.shape
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = M[r] * inv % p
        col = M[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            M[rows] = (M[rows] - np.outer(col[rows], M[r])) % p
        pivots.append(c)
        r += 1
    return M, pivots


def rank_mod_p(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    M = _as_array(A, p)
    m, n = M.shape
    if m > n:
        M = M.T.copy()
        m, n = n, m
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = M[r] * inv % p
        below = M[r + 1:, c]
        rows = np.nonzero(below)[0] + r + 1
        if rows.size:
            M[rows] = (M[rows] - np.outer(M[rows, c], M[r])) % p
        r += 1
    return r


def nullspace_mod_p(A, p: int) -> np.ndarray:
    """Basis of the right kernel of ``A``, one vector per column."""
    A = np.asarray(A)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref_mod_p(A, p)
    free = [j for j in range(n) if j not in set(piv)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, j in enumerate(free):
        basis[j, k] = 1
        for row, pc in enumerate(piv):
            basis[pc, k] = (-R[row, j]) % p
    return basis


def solve_mod_p(A, b, p: int):
    """One solution of ``A x = b`` or ``None`` if the system is inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    n = A.shape[1]
    R, piv = rref_mod_p(np.hstack([A, b]), p)
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for row, pc in enumerate(piv):
        x[pc] = R[row, n]
    return x


def inverse_mod_p(A, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    R, piv = rref_mod_p(np.hstack([A % p, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular mod p")
    return R[:, n:]
