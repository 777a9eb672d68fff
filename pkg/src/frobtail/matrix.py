"""Homogeneous matrices between twisted graded free modules."""
from __future__ import annotations

from typing import Callable, List, Optional, Sequence

from .errors import ModuleMismatch, RingMismatch
from .poly import Polynomial, PolynomialRing, format_polynomial


class GradedMatrix:
    """Matrix of a map ``⊕ P(-c_j) -> ⊕ P(-r_i)``.

    Entry ``(i, j)`` is zero or homogeneous of degree ``c_j - r_i``.
    """

    __slots__ = ("ring", "entries", "row_twists", "col_twists")

    def __init__(self, ring: PolynomialRing, entries: Sequence[Sequence[Polynomial]],
                 row_twists: Sequence[int], col_twists: Sequence[int]):
        self.ring = ring
        self.entries = [list(row) for row in entries]
        self.row_twists = list(row_twists)
        self.col_twists = list(col_twists)
        if len(self.entries) != len(self.row_twists):
            raise ValueError("row count does not match row twists")
        for row in self.entries:
            if len(row) != len(self.col_twists):
                raise ValueError("column count does not match column twists")

    @classmethod
    def from_columns(cls, ring, columns, row_twists, col_twists) -> "GradedMatrix":
        rows = [[col[i] for col in columns] for i in range(len(row_twists))]
        return cls(ring, rows, row_twists, col_twists)

    @classmethod
    def identity(cls, ring, twists, scalar: Optional[Polynomial] = None, shift: int = 0) -> "GradedMatrix":
        c = scalar if scalar is not None else ring.one()
        n = len(twists)
        rows = [[c if i == j else ring.zero() for j in range(n)] for i in range(n)]
        return cls(ring, rows, twists, [t + shift for t in twists])

    @classmethod
    def zeros(cls, ring, row_twists, col_twists) -> "GradedMatrix":
        return cls(ring, [[ring.zero()] * len(col_twists) for _ in row_twists], row_twists, col_twists)

    # -- shape -----------------------------------------------------------
    @property
    def nrows(self) -> int:
        return len(self.row_twists)

    @property
    def ncols(self) -> int:
        return len(self.col_twists)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> List[Polynomial]:
        return [row[j] for row in self.entries]

    def row(self, i: int) -> List[Polynomial]:
        return list(self.entries[i])

    # -- predicates --------------------------------------------------------
    def expected_degree(self, i: int, j: int) -> int:
        return self.col_twists[j] - self.row_twists[i]

    def is_homogeneous(self) -> bool:
        """Degree law: every nonzero entry is homogeneous of degree ``c_j - r_i``."""
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e and (not e.is_homogeneous() or e.degree != self.expected_degree(i, j)):
                    return False
        return True

    def is_minimal(self) -> bool:
        """No nonzero constant entries."""
        return not any(e and e.degree == 0 for row in self.entries for e in row)

    def is_zero(self) -> bool:
        return not any(e for row in self.entries for e in row)

    def entry_degrees(self) -> set:
        return {e.degree for row in self.entries for e in row if e}

    # -- algebra -----------------------------------------------------------
    def _same_module(self, other):
        if self.ring != other.ring:
            raise RingMismatch("matrices over different rings")
        if self.row_twists != other.row_twists or self.col_twists != other.col_twists:
            raise ModuleMismatch("matrices between different free modules")

    def __add__(self, other):
        self._same_module(other)
        rows = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        return GradedMatrix(self.ring, rows, self.row_twists, self.col_twists)

    def __sub__(self, other):
        self._same_module(other)
        rows = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        return GradedMatrix(self.ring, rows, self.row_twists, self.col_twists)

    def __neg__(self):
        return GradedMatrix(self.ring, [[-a for a in row] for row in self.entries],
                            self.row_twists, self.col_twists)

    def scale(self, g, shift: int = 0) -> "GradedMatrix":
        """Multiply every entry by ``g``; ``shift`` raises the column twists."""
        return GradedMatrix(self.ring, [[a * g for a in row] for row in self.entries],
                            self.row_twists, [t + shift for t in self.col_twists])

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        if self.ncols != other.nrows:
            raise ModuleMismatch(f"cannot compose {self.shape} with {other.shape}")
        if self.ring != other.ring:
            raise RingMismatch("matrices over different rings")
        zero = self.ring.zero()
        rows = []
        for i in range(self.nrows):
            ri = self.entries[i]
            out = []
            for j in range(other.ncols):
                acc = zero
                for k, a in enumerate(ri):
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
            rows.append(out)
        return GradedMatrix(self.ring, rows, self.row_twists, other.col_twists)

    def transpose(self) -> "GradedMatrix":
        """Dual map; twists are negated so the degree law is preserved."""
        rows = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return GradedMatrix(self.ring, rows, [-t for t in self.col_twists], [-t for t in self.row_twists])

    @property
    def T(self):
        return self.transpose()

    def map_entries(self, fn: Callable[[Polynomial], Polynomial]) -> "GradedMatrix":
        return GradedMatrix(self.ring, [[fn(a) for a in row] for row in self.entries],
                            self.row_twists, self.col_twists)

    def reduce_mod(self, reducer) -> "GradedMatrix":
        """Entrywise normal form; ``reducer`` maps a polynomial to its remainder."""
        return self.map_entries(lambda a: reducer(a) if a else a)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "GradedMatrix":
        return GradedMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows],
                            [self.row_twists[i] for i in rows], [self.col_twists[j] for j in cols])

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> "GradedMatrix":
        return self.submatrix(row_order, col_order)

    def with_twists(self, row_twists, col_twists) -> "GradedMatrix":
        return GradedMatrix(self.ring, self.entries, row_twists, col_twists)

    def is_alternating(self) -> bool:
        """``A^T = -A`` and zero diagonal (the right notion in characteristic 2 too)."""
        if self.nrows != self.ncols:
            return False
        n = self.nrows
        for i in range(n):
            if self.entries[i][i]:
                return False
            for j in range(i + 1, n):
                if self.entries[i][j] != -self.entries[j][i]:
                    return False
        return True

    def entries_equal(self, other: "GradedMatrix") -> bool:
        return self.shape == other.shape and self.entries == other.entries

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.entries == other.entries
                and self.row_twists == other.row_twists and self.col_twists == other.col_twists)

    def __hash__(self):
        return hash((self.ring, tuple(map(tuple, self.entries))))

    def format(self) -> str:
        """Bracketed rows of canonical polynomial text."""
        if not self.entries:
            return "[]"
        cells = [[format_polynomial(e) for e in row] for row in self.entries]
        widths = [max((len(r[j]) for r in cells), default=1) for j in range(self.ncols)]
        lines = ["[" + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + "]" for row in cells]
        return "\n".join(lines)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GradedMatrix(shape={self.shape}, rows={self.row_twists}, cols={self.col_twists})"
