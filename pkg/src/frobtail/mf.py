"""Matrix factorizations from 2-periodic resolution tails, and their alternating form."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (CorrectionNotInvertible, NoInvertibleSolution, OddSize, PeriodicityNotDetected,
                     PrefixTooShort, SingularInput)
from .linalg import inverse_mod_p, nullspace_mod_p
from .matrix import GradedMatrix
from .poly import Monomial, Polynomial
from .resolution import ResolutionPrefix, detect_periodicity

DEFAULT_TRIES = 64


@dataclass
class MatrixFactorization:
    """``D3 · D4 = f · Id = D4 · D3`` over ``P``; ``D3: F3 -> F2`` and ``D4: F2(-|f|) -> F3``."""

    D3: GradedMatrix
    D4: GradedMatrix
    f: Polynomial

    @property
    def size(self) -> int:
        return self.D3.nrows


@dataclass
class AlternatingPair:
    Phi: GradedMatrix
    Psi: GradedMatrix
    epsilon: GradedMatrix
    f: Polynomial

    @property
    def size(self) -> int:
        return self.Phi.nrows


@dataclass
class MFCheck:
    ok: bool
    witness: Optional[Tuple[str, int, int, str, str]] = None

    def __bool__(self):
        return self.ok


def _constant(e: Polynomial) -> int:
    return e.coefficient((0,) * e.ring.nvars) if e else 0


def invert_graded_automorphism(M: GradedMatrix) -> GradedMatrix:
    """Inverse of a degree-preserving square matrix whose constant part is invertible.

    ``M = D (Id + N)`` with ``D`` the constant part and ``N`` nilpotent, so
    ``M^-1 = sum_k (-N)^k D^-1``.
    """
    n = M.nrows
    if M.ncols != n:
        raise CorrectionNotInvertible("matrix is not square")
    p = M.ring.p
    D = np.array([[_constant(e) if e and e.degree == 0 else 0 for e in row] for row in M.entries],
                 dtype=np.int64)
    try:
        Dinv = inverse_mod_p(D, p)
    except ZeroDivisionError:
        raise CorrectionNotInvertible("constant part is singular") from None
    ring = M.ring
    Dm = GradedMatrix(ring, [[ring.constant(int(Dinv[i, j])) for j in range(n)] for i in range(n)],
                      M.col_twists, M.row_twists)
    negN = (Dm @ M).map_entries(lambda e: -e)
    for i in range(n):
        negN.entries[i][i] = negN.entries[i][i] + 1
    total = GradedMatrix.identity(ring, M.col_twists)
    power = GradedMatrix.identity(ring, M.col_twists)
    for _ in range(n + 1):
        power = power @ negN
        if power.is_zero():
            break
        total = total + power
    else:
        raise CorrectionNotInvertible("correction is not unipotent modulo its constant part")
    inv = total @ Dm
    return inv.with_twists(M.col_twists, M.row_twists)


def _pair_order(r2: Sequence[int], r3: Sequence[int], target: int) -> Optional[Tuple[List[int], List[int]]]:
    """Orders of F2 and F3 summands so that paired twists add up to ``target``."""
    rows = sorted(range(len(r2)), key=lambda i: r2[i])
    free = sorted(range(len(r3)), key=lambda j: -r3[j])
    cols = []
    for i in rows:
        hit = next((j for j in free if r3[j] == target - r2[i]), None)
        if hit is None:
            return None
        free.remove(hit)
        cols.append(hit)
    return rows, cols


def extract_mf(res: ResolutionPrefix, f: Polynomial) -> MatrixFactorization:
    """Lift ``d3, d4`` to ``P`` and correct ``d4`` so both products are ``f · Id``."""
    try:
        i0 = detect_periodicity(res, f.degree)
    except PrefixTooShort as exc:
        raise PeriodicityNotDetected(str(exc)) from None
    if i0 is None or i0 > 2 or res.length < 4:
        raise PeriodicityNotDetected(f"periodicity from position 2 not seen (got {i0})")
    d3, d4 = res.d(3), res.d(4)
    if d3.nrows != d3.ncols:
        raise PeriodicityNotDetected("d3 is not square")
    # order F2 by twist and F3 so that paired twists sum to a constant (when possible)
    r2, r3 = d3.row_twists, d3.col_twists
    target = min(r2) + max(r3)
    order = _pair_order(r2, r3, target)
    rows, cols = order if order else (sorted(range(len(r2)), key=lambda i: r2[i]),
                                       sorted(range(len(r3)), key=lambda j: r3[j]))
    D3 = d3.permute(rows, cols)
    # columns of d4 ordered to match F2(-|f|)
    want = [t + f.degree for t in D3.row_twists]
    free = list(range(d4.ncols))
    c4 = []
    for t in want:
        j = next((j for j in free if d4.col_twists[j] == t), None)
        if j is None:
            raise PeriodicityNotDetected("F4 is not F2 shifted by |f|")
        free.remove(j)
        c4.append(j)
    D4 = d4.permute(cols, c4)
    prod = D3 @ D4
    C = GradedMatrix(f.ring, [[e.exact_div(f) if e else e for e in row] for row in prod.entries],
                     D3.row_twists, D3.row_twists)
    D4 = (D4 @ invert_graded_automorphism(C).with_twists(D4.col_twists, D4.col_twists))
    mf = MatrixFactorization(D3, D4, f)
    if not verify_mf(mf):
        raise CorrectionNotInvertible("corrected products are not f times the identity")
    return mf


def verify_mf(mf: MatrixFactorization) -> MFCheck:
    """Exact check of ``D3 D4 = f Id`` and ``D4 D3 = f Id``; witness = first bad entry."""
    f = mf.f
    zero = f.ring.zero()
    for name, A, B in (("D3*D4", mf.D3, mf.D4), ("D4*D3", mf.D4, mf.D3)):
        if A.ncols != B.nrows or A.nrows != B.ncols:
            return MFCheck(False, (name, -1, -1, "shape", f"{A.shape} x {B.shape}"))
        prod = A @ B
        for i in range(prod.nrows):
            for j in range(prod.ncols):
                want = f if i == j else zero
                if prod.entries[i][j] != want:
                    return MFCheck(False, (name, i + 1, j + 1, str(prod.entries[i][j]), str(want)))
    return MFCheck(True)


# ---------------------------------------------------------------------------
# Alternating normalization
# ---------------------------------------------------------------------------


def _unknowns(ring, twists: Sequence[int]):
    """Monomial slots ``(k, j, m)`` of a degree-0 endomorphism of ``⊕ P(-twists)``."""
    slots = []
    for k, tk in enumerate(twists):
        for j, tj in enumerate(twists):
            for m in ring.monomials_of_degree(tj - tk):
                slots.append((k, j, m))
    return slots


def _epsilon_from(ring, twists, slots, vec, p) -> GradedMatrix:
    n = len(twists)
    acc: List[List[Dict]] = [[{} for _ in range(n)] for _ in range(n)]
    for (k, j, m), c in zip(slots, vec):
        c = int(c) % p
        if c:
            acc[k][j][m] = c
    return GradedMatrix(ring, [[Polynomial(ring, acc[k][j]) for j in range(n)] for k in range(n)],
                        twists, twists)


def alternating_system(D3: GradedMatrix):
    """Linear conditions on ``E`` making ``D3 · E`` skew with zero diagonal.

    Returns ``(slots, matrix)``; the kernel of ``matrix`` parametrizes the
    admissible ``E`` (``E`` plays the role of the transposed change of basis).
    """
    ring = D3.ring
    p = ring.p
    n = D3.nrows
    tw = D3.col_twists
    slots = _unknowns(ring, tw)
    eqs: Dict[tuple, Dict[int, int]] = {}

    def add(i, j, u, poly):
        for m, c in poly.items():
            row = eqs.setdefault((i, j, m), {})
            row[u] = (row.get(u, 0) + c) % p

    for u, (k, j, m) in enumerate(slots):
        for i in range(n):
            a = D3.entries[i][k]
            if not a:
                continue
            term = a.mul_monomial(m)
            # (D3 E)_{ij} gets D3_{ik} * m; it enters the (i, j) skew equation
            # as is and the (j, i) one through the transpose
            if i == j:
                add(i, i, u, term)
            elif i < j:
                add(i, j, u, term)
            else:
                add(j, i, u, term)
    keys = sorted(eqs, key=lambda t: (t[0], t[1], tuple(t[2])))
    A = np.zeros((len(keys), len(slots)), dtype=np.int64)
    for r, key in enumerate(keys):
        for u, c in eqs[key].items():
            A[r, u] = c
    return slots, A


def alternating_normalize(mf: MatrixFactorization, seed: int = 0,
                          tries: int = DEFAULT_TRIES) -> AlternatingPair:
    """Find an invertible ``E`` with ``Phi = D3 E`` alternating; ``Psi = E^-1 D4``."""
    D3, D4 = mf.D3, mf.D4
    n = D3.nrows
    if n % 2:
        raise OddSize(f"size {n} is odd")
    ring = D3.ring
    p = ring.p
    slots, A = alternating_system(D3)
    basis = nullspace_mod_p(A, p) if A.shape[0] else np.eye(len(slots), dtype=np.int64)
    if basis.shape[1] == 0:
        raise NoInvertibleSolution("no matrix makes the factorization alternating")
    rng = random.Random(seed)
    tw = D3.col_twists
    candidates = []
    ident = np.zeros(len(slots), dtype=np.int64)
    for u, (k, j, m) in enumerate(slots):
        if k == j:
            ident[u] = 1
    if _in_span(basis, ident, p):
        candidates.append(ident)
    for _ in range(tries):
        coeffs = np.array([rng.randrange(p) for _ in range(basis.shape[1])], dtype=np.int64)
        candidates.append(basis @ coeffs % p)
    for vec in candidates:
        E = _epsilon_from(ring, tw, slots, vec, p)
        try:
            Einv = invert_graded_automorphism(E)
        except CorrectionNotInvertible:
            continue
        Phi = D3 @ E
        Psi = Einv @ D4
        pair = AlternatingPair(Phi, Psi, E, mf.f)
        if _pair_ok(pair):
            return pair
    raise NoInvertibleSolution(f"no invertible solution in {tries} samples")


def _in_span(basis: np.ndarray, v: np.ndarray, p: int) -> bool:
    from .linalg import rank_mod_p

    return rank_mod_p(np.hstack([basis, v.reshape(-1, 1)]), p) == rank_mod_p(basis, p)


def _pair_ok(pair: AlternatingPair) -> bool:
    f = pair.f
    n = pair.size
    if not (pair.Phi.is_alternating() and pair.Psi.is_alternating()):
        return False
    zero = f.ring.zero()
    for A, B in ((pair.Phi, pair.Psi), (pair.Psi, pair.Phi)):
        prod = A @ B
        for i in range(n):
            for j in range(n):
                if prod.entries[i][j] != (f if i == j else zero):
                    return False
    return True


# ---------------------------------------------------------------------------
# Determinants and adjoints
# ---------------------------------------------------------------------------


def _minor_det(entries, rows: Tuple[int, ...], cols: Tuple[int, ...], memo, zero):
    """Determinant of the submatrix on ``rows`` x ``cols`` by expansion along the first row."""
    if not rows:
        return zero.ring.one()
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    r, rest = rows[0], rows[1:]
    acc = zero
    for idx, c in enumerate(cols):
        a = entries[r][c]
        if not a:
            continue
        sub = _minor_det(entries, rest, cols[:idx] + cols[idx + 1:], memo, zero)
        if sub:
            term = a * sub
            acc = acc - term if idx % 2 else acc + term
    memo[key] = acc
    return acc


def determinant(M: GradedMatrix) -> Polynomial:
    n = M.nrows
    if M.ncols != n:
        raise ValueError("determinant of a non-square matrix")
    return _minor_det(M.entries, tuple(range(n)), tuple(range(n)), {}, M.ring.zero())


def classical_adjoint(M: GradedMatrix) -> GradedMatrix:
    """``adj(M)`` with ``adj(M)_{ij} = (-1)^{i+j} det M[without row j, col i]``."""
    n = M.nrows
    zero = M.ring.zero()
    memo: dict = {}
    rows_all = tuple(range(n))
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = rows_all[:j] + rows_all[j + 1:]
            cols = rows_all[:i] + rows_all[i + 1:]
            d = _minor_det(M.entries, rows, cols, memo, zero)
            out[i][j] = -d if (i + j) % 2 else d
    delta = sum(M.col_twists) - sum(M.row_twists)
    return GradedMatrix(M.ring, out, M.col_twists, [t + delta for t in M.row_twists])


def adjoint_alternating_check(Phi: GradedMatrix) -> bool:
    if Phi.nrows != Phi.ncols:
        raise ValueError("matrix is not square")
    if determinant(Phi).is_zero():
        raise SingularInput("determinant is zero")
    adj = classical_adjoint(Phi)
    n = adj.nrows
    for i in range(n):
        if adj.entries[i][i]:
            return False
        for j in range(i + 1, n):
            if adj.entries[i][j] != -adj.entries[j][i]:
                return False
    return True
