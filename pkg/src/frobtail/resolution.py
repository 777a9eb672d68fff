"""Minimal graded free resolutions over P and over hypersurface rings P/(f)."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import NonHomogeneousInput, PrefixTooShort
from .groebner import PrincipalReducer, _kernel, minimal_generators
from .matrix import GradedMatrix
from .poly import Polynomial

DEFAULT_MAX_POSITION = 4


@dataclass
class BettiTable:
    """Per homological position, the multiset of twists as ``{twist: multiplicity}``."""

    positions: Dict[int, Dict[int, int]] = field(default_factory=dict)

    @classmethod
    def from_twists(cls, twists_by_position: Dict[int, Iterable[int]]) -> "BettiTable":
        out = {}
        for k, tw in twists_by_position.items():
            c = Counter(tw)
            if c:
                out[k] = dict(sorted(c.items()))
        return cls(out)

    def __post_init__(self):
        self.positions = {int(k): {int(t): int(m) for t, m in sorted(v.items()) if m}
                          for k, v in sorted(self.positions.items()) if any(v.values())}

    def __getitem__(self, k: int) -> Dict[int, int]:
        return self.positions.get(k, {})

    def twists(self, k: int) -> List[int]:
        return sorted(t for t, m in self[k].items() for _ in range(m))

    def rank(self, k: int) -> int:
        return sum(self[k].values())

    @property
    def length(self) -> int:
        return max(self.positions, default=-1)

    def is_empty(self) -> bool:
        return not self.positions

    def shifted(self, n: int, start: int = 0) -> "BettiTable":
        """Twists at positions ``>= start`` raised by ``n`` (module twisted by ``(-n)``)."""
        return BettiTable({k: {t + n if k >= start else t: m for t, m in v.items()}
                           for k, v in self.positions.items()})

    def format_position(self, k: int) -> str:
        return " ".join(f"{t}:{m}" for t, m in sorted(self[k].items()))

    def to_dict(self) -> dict:
        return {str(k): [[t, m] for t, m in sorted(v.items())] for k, v in self.positions.items()}

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        return cls({int(k): {int(t): int(m) for t, m in v} for k, v in data.items()})


@dataclass
class ResolutionPrefix:
    """Finite prefix ``d_1, ..., d_N`` of a minimal graded free resolution."""

    ring_kind: str  # "P" or "R"
    matrices: List[GradedMatrix]
    f: Optional[Polynomial] = None
    zero_module: bool = False

    @property
    def length(self) -> int:
        return len(self.matrices)

    def twists(self, k: int) -> List[int]:
        if self.zero_module:
            return []
        if k == 0:
            return [0]
        if k > len(self.matrices):
            return []
        return sorted(self.matrices[k - 1].col_twists)

    @property
    def betti(self) -> BettiTable:
        if self.zero_module:
            return BettiTable({})
        return BettiTable.from_twists({k: self.twists(k) for k in range(len(self.matrices) + 1)})

    def d(self, k: int) -> GradedMatrix:
        return self.matrices[k - 1]


# ---------------------------------------------------------------------------
# Minimization
# ---------------------------------------------------------------------------


def _find_unit(A: GradedMatrix) -> Optional[Tuple[int, int]]:
    for i, row in enumerate(A.entries):
        for j, e in enumerate(row):
            if e and e.degree == 0:
                return i, j
    return None


def minimize(A: GradedMatrix, before: Optional[GradedMatrix] = None,
             after: Optional[GradedMatrix] = None, reducer=None):
    """Cancel unit entries of ``A`` inside the complex ``after · A · before``.

    ``before`` maps into the domain of ``A`` and ``after`` leaves its codomain.
    Each pivot on a constant entry ``A[r, c]`` drops row ``r`` and column
    ``c`` of ``A``, row ``c`` of ``before`` and column ``r`` of ``after``.
    Returns the new ``(A, before, after)``.
    """
    while True:
        hit = _find_unit(A)
        if hit is None:
            return A, before, after
        r, c = hit
        u = A.entries[r][c]
        uinv = A.ring.field.inv(u.coefficient((0,) * A.ring.nvars))
        rows = [i for i in range(A.nrows) if i != r]
        cols = [j for j in range(A.ncols) if j != c]
        pivot_row = A.entries[r]
        new = []
        for i in rows:
            aic = A.entries[i][c]
            if aic:
                factor = aic.scale(uinv)
                out = []
                for j in cols:
                    v = A.entries[i][j] - factor * pivot_row[j] if pivot_row[j] else A.entries[i][j]
                    out.append(reducer(v) if (reducer and v) else v)
                new.append(out)
            else:
                new.append([A.entries[i][j] for j in cols])
        A = GradedMatrix(A.ring, new, [A.row_twists[i] for i in rows], [A.col_twists[j] for j in cols])
        if before is not None:
            before = before.submatrix([k for k in range(before.nrows) if k != c], range(before.ncols))
        if after is not None:
            after = after.submatrix(range(after.nrows), [k for k in range(after.ncols) if k != r])


def minimize_complex(mats: List[GradedMatrix], reducer=None) -> List[GradedMatrix]:
    """Remove every unit entry from the chain ``mats[0] = d_1, mats[1] = d_2, ...``."""
    mats = list(mats)
    changed = True
    while changed:
        changed = False
        for k in range(len(mats)):
            if _find_unit(mats[k]) is None:
                continue
            before = mats[k + 1] if k + 1 < len(mats) else None
            after = mats[k - 1] if k > 0 else None
            A, before, after = minimize(mats[k], before, after, reducer)
            mats[k] = A
            if before is not None:
                mats[k + 1] = before
            if after is not None:
                mats[k - 1] = after
            changed = True
    return mats


# ---------------------------------------------------------------------------
# Syzygy steps
# ---------------------------------------------------------------------------


def _columns(A: GradedMatrix):
    return [A.column(j) for j in range(A.ncols)]


def _to_matrix(A: GradedMatrix, found, reducer=None) -> GradedMatrix:
    cols = []
    degs = []
    for deg, comps in found:
        if reducer is not None:
            comps = [reducer(c) if c else c for c in comps]
        cols.append(comps)
        degs.append(deg)
    return GradedMatrix.from_columns(A.ring, cols, A.col_twists, degs)


def syzygies_over_R(A: GradedMatrix, f: Polynomial, reducer=None, raw: bool = False) -> GradedMatrix:
    """Syzygies of ``A`` over ``P/(f)``, lifted to normal forms modulo ``f``.

    Computed as the A-block of the P-syzygies of ``[A | f·Id]``.  With
    ``raw`` the full (non-minimal) Gröbner generating set is returned.
    """
    if not A.is_homogeneous():
        raise NonHomogeneousInput("matrix entries violate the degree law")
    reducer = reducer or PrincipalReducer(f)
    found = _kernel(A.ring, _columns(A), A.row_twists, A.col_twists, modulus=f, raw=raw)
    S = _to_matrix(A, found, reducer)
    if raw:
        keep = [j for j in range(S.ncols) if any(S.column(j))]
        S = S.submatrix(range(S.nrows), keep)
    return S


def syzygies_over_P(A: GradedMatrix) -> GradedMatrix:
    found = _kernel(A.ring, _columns(A), A.row_twists, A.col_twists)
    return _to_matrix(A, found)


def _first_map(gens: Sequence[Polynomial], f: Optional[Polynomial], reducer):
    ring = gens[0].ring if gens else (f.ring if f is not None else None)
    gens = [g for g in gens if g]
    for g in gens:
        if not g.is_homogeneous():
            raise NonHomogeneousInput(f"generator {g} is not homogeneous")
    if not gens:
        return ring, None
    idx = minimal_generators(gens, modulus=f)
    chosen = [gens[i] for i in idx]
    if reducer is not None:
        chosen = [reducer(g) for g in chosen]
    return ring, chosen


def resolve_over_P(I: Sequence[Polynomial]) -> ResolutionPrefix:
    """Complete minimal free resolution of ``P/I`` over ``P``."""
    ring, gens = _first_map(I, None, None)
    if gens is None:
        return ResolutionPrefix("P", [], None)
    if any(g.degree == 0 for g in gens):
        return ResolutionPrefix("P", [], None, zero_module=True)
    mats = [GradedMatrix(ring, [gens], [0], [g.degree for g in gens])]
    while True:
        S = syzygies_over_P(mats[-1])
        if S.ncols == 0:
            break
        mats.append(S)
    return ResolutionPrefix("P", minimize_complex(mats), None)


def resolve_over_R(f: Polynomial, J: Sequence[Polynomial],
                   max_position: int = DEFAULT_MAX_POSITION) -> ResolutionPrefix:
    """Minimal prefix ``d_1..d_max_position`` of the resolution of ``R/J``, ``R = P/(f)``.

    Generators of ``J`` are given by lifts to ``P``; returned matrices hold
    normal forms modulo ``f``.
    """
    if f.is_zero() or not f.is_homogeneous():
        raise NonHomogeneousInput("f must be a nonzero homogeneous polynomial")
    reducer = PrincipalReducer(f)
    ring, gens = _first_map([reducer(g) for g in J], f, reducer)
    if gens is None:
        return ResolutionPrefix("R", [], f)
    if any(g.degree == 0 for g in gens):
        return ResolutionPrefix("R", [], f, zero_module=True)
    mats = [GradedMatrix(ring, [gens], [0], [g.degree for g in gens])]
    while len(mats) < max_position:
        S = syzygies_over_R(mats[-1], f, reducer)
        if S.ncols == 0:
            break
        mats.append(S)
    return ResolutionPrefix("R", minimize_complex(mats, reducer), f)


def detect_periodicity(res: ResolutionPrefix, f_degree: int) -> Optional[int]:
    """Smallest ``i0`` with ``F_{i+2} = F_i(-|f|)`` for every computed ``i >= i0``.

    Returns ``None`` when no such index exists inside the prefix.
    """
    N = res.length
    if N < 3:
        raise PrefixTooShort(f"need at least 3 computed positions, have {N}")

    def ok(i):
        return res.twists(i + 2) == [t + f_degree for t in res.twists(i)]

    for i0 in range(1, N - 1):
        if all(ok(i) for i in range(i0, N - 1)):
            return i0
    return None
