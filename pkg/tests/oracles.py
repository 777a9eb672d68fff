"""Dense linear-algebra oracles, independent of the Gröbner engine.

Everything here works one degree at a time on coefficient vectors over the
monomial basis of P_d, with a self-contained Gaussian elimination.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from frobtail.poly import Monomial


@lru_cache(maxsize=None)
def monomials(n: int, d: int):
    if d < 0:
        return ()
    if n == 1:
        return ((d,),)
    return tuple((e,) + rest for e in range(d, -1, -1) for rest in monomials(n - 1, d - e))


def index(n: int, d: int):
    return {m: i for i, m in enumerate(monomials(n, d))}


def vector(g, d: int) -> np.ndarray:
    n = g.ring.nvars
    idx = index(n, d)
    v = np.zeros(len(idx), dtype=np.int64)
    for m, c in g.items():
        v[idx[tuple(m)]] = c
    return v


def rref(A: np.ndarray, p: int):
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape if A.ndim == 2 else (0, 0)
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if not len(nz):
            continue
        k = r + nz[0]
        A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if len(others):
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        piv.append(c)
        r += 1
    return A[:r], piv


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {v : A v = 0}."""
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, piv = rref(A, p)
    free = [c for c in range(ncols) if c not in piv]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        out[i, fc] = 1
        for r, pc in enumerate(piv):
            out[i, pc] = (-R[r, fc]) % p
    return out


def ideal_span(gens, d: int) -> np.ndarray:
    """Rows spanning I_d (all m * g with deg m + deg g = d)."""
    n = gens[0].ring.nvars
    rows = []
    for g in gens:
        if g.is_zero() or g.degree > d:
            continue
        for m in monomials(n, d - g.degree):
            rows.append(vector(g.mul_monomial(m), d))
    if not rows:
        return np.zeros((0, len(monomials(n, d))), dtype=np.int64)
    return np.array(rows)


def ideal_dim(gens, d: int) -> int:
    return rank(ideal_span(gens, d), gens[0].ring.p)


def in_span(gens, g) -> bool:
    if g.is_zero():
        return True
    d = g.degree
    p = g.ring.p
    S = ideal_span(gens, d)
    return rank(S, p) == rank(np.vstack([S, vector(g, d)[None, :]]), p)


def quotient_dim(gens, d: int) -> int:
    n = gens[0].ring.nvars
    return len(monomials(n, d)) - ideal_dim(gens, d)


def _shift_matrix(var: int, n: int, d: int) -> np.ndarray:
    """Matrix (rows = P_d basis) of multiplication by x_var into P_{d+1}."""
    src, tgt = monomials(n, d), index(n, d + 1)
    M = np.zeros((len(src), len(tgt)), dtype=np.int64)
    for i, m in enumerate(src):
        e = list(m)
        e[var] += 1
        M[i, tgt[tuple(e)]] = 1
    return M


def _induced_rank(images: np.ndarray, target_sub: np.ndarray, p: int) -> int:
    """Rank of the map whose lifted images are ``images`` into P/target_sub."""
    base = rank(target_sub, p)
    if images.shape[0] == 0:
        return 0
    stack = np.vstack([target_sub, images]) if target_sub.shape[0] else images
    return rank(stack, p) - base


def koszul_betti(gens, i: int, j: int) -> int:
    """dim Tor_i^P(P/I, k)_j through the Koszul complex on the variables."""
    ring = gens[0].ring
    n, p = ring.nvars, ring.p

    def block(k, deg):
        # basis of wedge^k ⊗ P_deg, as (subset, monomial index)
        return list(combinations(range(n), k)), len(monomials(n, deg))

    def diff_images(k):
        # lifted images of the basis of wedge^k ⊗ P_{j-k} in wedge^{k-1} ⊗ P_{j-k+1}
        subs_src, nsrc = block(k, j - k)
        subs_tgt, ntgt = block(k - 1, j - k + 1)
        if k == 0 or j - k < 0:
            return np.zeros((0, len(subs_tgt) * max(ntgt, 0)), dtype=np.int64)
        pos = {s: t for t, s in enumerate(subs_tgt)}
        rows = []
        shifts = {v: _shift_matrix(v, n, j - k) for v in range(n)}
        for s in subs_src:
            for a in range(nsrc):
                row = np.zeros(len(subs_tgt) * ntgt, dtype=np.int64)
                for t, v in enumerate(s):
                    sub = s[:t] + s[t + 1:]
                    sign = 1 if t % 2 == 0 else p - 1
                    o = pos[sub] * ntgt
                    row[o:o + ntgt] = (row[o:o + ntgt] + sign * shifts[v][a]) % p
                rows.append(row)
        return np.array(rows) if rows else np.zeros((0, len(subs_tgt) * ntgt), dtype=np.int64)

    def sub_of(k):
        # wedge^k ⊗ I_{j-k}
        subs, nb = block(k, j - k)
        if j - k < 0 or not subs:
            return np.zeros((0, max(len(subs) * max(nb, 0), 0)), dtype=np.int64)
        S = ideal_span(gens, j - k)
        blocks = []
        for t in range(len(subs)):
            Z = np.zeros((S.shape[0], len(subs) * nb), dtype=np.int64)
            Z[:, t * nb:(t + 1) * nb] = S
            blocks.append(Z)
        return np.vstack(blocks)

    def qdim(k):
        subs, nb = block(k, j - k)
        if j - k < 0:
            return 0
        return len(subs) * nb - rank(sub_of(k), p)

    def drank(k):
        if k <= 0 or k > n or j - k < 0:
            return 0
        return _induced_rank(diff_images(k), sub_of(k - 1), p)

    if i < 0 or i > n:
        return 0
    return qdim(i) - drank(i) - drank(i + 1)


def socle_dims(f, J, d_max: int):
    """{d: dim soc(P/(J+f))_d} computed from kernels of the multiplication maps."""
    ring = f.ring
    n, p = ring.nvars, ring.p
    K = list(J) + [f]
    out = {}
    for d in range(d_max + 1):
        q = quotient_dim(K, d)
        if q == 0:
            continue
        # lift of (P/K)_d basis is all of P_d; image in (P/K)_{d+1}^n
        Sd = ideal_span(K, d)
        S1 = ideal_span(K, d + 1)
        N1 = len(monomials(n, d + 1))
        imgs = np.hstack([_shift_matrix(v, n, d) for v in range(n)])
        sub = np.zeros((S1.shape[0] * n, N1 * n), dtype=np.int64)
        for v in range(n):
            sub[v * S1.shape[0]:(v + 1) * S1.shape[0], v * N1:(v + 1) * N1] = S1
        # kernel of P_d -> ⊕ P_{d+1}/K_{d+1}, then mod K_d
        stack = np.vstack([sub, imgs]) if sub.shape[0] else imgs
        r_all = rank(stack, p)
        r_sub = rank(sub, p)
        ker_lift = len(monomials(n, d)) - (r_all - r_sub)
        s = ker_lift - rank(Sd, p)
        if s:
            out[d] = s
    return out


def colon_generator_degrees(I, f, d_max: int):
    """Minimal generator degrees of (I : f)/I, by per-degree kernels."""
    ring = f.ring
    n, p = ring.nvars, ring.p
    out = []
    prev = None  # rows spanning (I:f)_{d-1}
    for d in range(d_max + 1):
        N = len(monomials(n, d))
        S = ideal_span(I, d + f.degree)
        mult = np.array([vector(f.mul_monomial(m), d + f.degree) for m in monomials(n, d)])
        # v in (I:f)_d iff v·mult in rowspan S
        if S.shape[0]:
            Sb = rref(S, p)[0]
            # kernel of v -> v·mult modulo S: solve [v, w] with v·mult = w·Sb
            A = np.vstack([mult, (-Sb) % p])
            ker = nullspace(A.T, p)[:, :N]
        else:
            ker = nullspace(mult.T, p)
        colon_d = ker if ker.size else np.zeros((0, N), dtype=np.int64)
        base = ideal_span(I, d)
        if prev is not None and prev.shape[0]:
            lifted = np.vstack([prev @ _shift_matrix(v, n, d - 1) % p for v in range(n)])
            base = np.vstack([base, lifted]) if base.shape[0] else lifted
        full = np.vstack([base, colon_d]) if base.shape[0] else colon_d
        extra = rank(full, p) - rank(base, p) if full.shape[0] else 0
        out += [d] * extra
        prev = colon_d
    return out


def graded_homology_over_R(f, mats, J, t_max: int):
    """Homology dims of ⊕R(-c) --d--> ⊕R(-r) complexes degree by degree.

    ``mats`` are the resolution matrices d_1..d_N (entries in P, read mod f).
    Returns {(k, t): dim H_k in degree t} for the nonzero entries, where
    H_0 is compared against R/J.  Empty means exact (and resolving R/J).
    """
    ring = f.ring
    n, p = ring.nvars, ring.p

    def space(twists, t):
        # rows spanning the (f)-multiples inside ⊕ P_{t - tw}
        sizes = [len(monomials(n, t - tw)) for tw in twists]
        offs = np.cumsum([0] + sizes)
        blocks = []
        for b, tw in enumerate(twists):
            Sf = ideal_span([f], t - tw) if t - tw >= 0 else np.zeros((0, 0), dtype=np.int64)
            if Sf.shape[0]:
                Z = np.zeros((Sf.shape[0], offs[-1]), dtype=np.int64)
                Z[:, offs[b]:offs[b + 1]] = Sf
                blocks.append(Z)
        sub = np.vstack(blocks) if blocks else np.zeros((0, offs[-1]), dtype=np.int64)
        return sizes, offs, sub

    def images(A, t):
        # lifted images of the P-basis of F_src(t) under A
        _, toff, _ = space(A.row_twists, t)
        rows = []
        for j, c in enumerate(A.col_twists):
            for m in monomials(n, t - c):
                row = np.zeros(toff[-1], dtype=np.int64)
                for i, r in enumerate(A.row_twists):
                    e = A.entries[i][j]
                    if e and t - r >= 0:
                        row[toff[i]:toff[i + 1]] = vector(e.mul_monomial(m), t - r)
                rows.append(row)
        return np.array(rows) if rows else np.zeros((0, toff[-1]), dtype=np.int64)

    def qdim(twists, t):
        sizes, _, sub = space(twists, t)
        return sum(sizes) - rank(sub, p)

    def rk(A, t):
        _, _, sub = space(A.row_twists, t)
        return _induced_rank(images(A, t), sub, p)

    out = {}
    for t in range(t_max + 1):
        # position 0: coker d_1 should be R/J
        want0 = quotient_dim(list(J) + [f], t)
        h0 = qdim([0], t) - rk(mats[0], t)
        if h0 != want0:
            out[(0, t)] = h0 - want0
        for k in range(1, len(mats)):
            A, B = mats[k - 1], mats[k]
            h = qdim(A.col_twists, t) - rk(A, t) - rk(B, t)
            if h:
                out[(k, t)] = h
    return out


def colon_quotient_dim(I, f, d: int) -> int:
    """dim ((I : f)/I)_d from the kernel of multiplication by f into P/I."""
    n, p = f.ring.nvars, f.ring.p
    N = len(monomials(n, d))
    e = d + f.degree
    S = ideal_span(I, e)
    mult = np.array([vector(f.mul_monomial(m), e) for m in monomials(n, d)])
    img = rank(np.vstack([S, mult]), p) - rank(S, p) if S.shape[0] else rank(mult, p)
    return N - img - ideal_dim(I, d)


def hypersurface_dim(f, d: int) -> int:
    return quotient_dim([f], d) if d >= 0 else 0
