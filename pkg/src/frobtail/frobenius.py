"""Frobenius bracket powers and sweeps over exponents."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .errors import FrobtailError, NotAPowerOfP
from .poly import Polynomial

log = logging.getLogger(__name__)


def prime_exponent(q: int, p: int) -> int:
    """``e`` with ``q = p**e``; raises :class:`NotAPowerOfP` otherwise."""
    if q < 1:
        raise NotAPowerOfP(f"{q} is not a power of {p}")
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise NotAPowerOfP(f"not a power of {p}")
    return e


def bracket_power(gens: Sequence[Polynomial], q: int) -> List[Polynomial]:
    """Generators ``g^q`` of the bracket power; ``q`` must be a power of the characteristic."""
    gens = list(gens)
    if not gens:
        return []
    prime_exponent(q, gens[0].ring.p)
    return [g.frobenius(q) for g in gens]


@dataclass
class SweepRow:
    e: int
    q: int
    socle: Optional[object] = None
    resolution: Optional[object] = None
    report: Optional[object] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass
class FrobeniusSweep:
    f: Polynomial
    ideal: List[Polynomial]
    p: int
    exponents: List[int]
    rows: Dict[int, SweepRow] = field(default_factory=dict)

    def __getitem__(self, e: int) -> SweepRow:
        return self.rows[e]

    def __len__(self):
        return len(self.rows)

    def format_table(self, max_position: Optional[int] = None) -> str:
        """Rows ``e``, columns socle and pos 0..N in ``twist:mult`` notation."""
        if not self.rows:
            return ""
        N = max_position
        if N is None:
            N = max((r.resolution.length for r in self.rows.values() if r.resolution is not None), default=0)
        header = ["e", "socle"] + [f"pos {k}" for k in range(N + 1)]
        body = []
        for e in sorted(self.rows):
            row = self.rows[e]
            if row.error is not None:
                body.append([str(e), "error: " + row.error] + [""] * (N + 1))
                continue
            soc = row.socle.format() if row.socle is not None else ""
            cells = [row.resolution.betti.format_position(k) if row.resolution is not None else ""
                     for k in range(N + 1)]
            body.append([str(e), soc] + cells)
        widths = [max(len(r[j]) for r in [header] + body) for j in range(len(header))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + body]
        return "\n".join(lines)


def compute_row(f: Polynomial, I: Sequence[Polynomial], e: int, max_position: int = 4,
                theorem: bool = True) -> SweepRow:
    """One row of a sweep; domain errors are recorded in ``error`` rather than raised."""
    from .artinian import socle_profile
    from .resolution import resolve_over_R
    from .theorem import verify_theorem

    q = f.ring.p ** e
    row = SweepRow(e, q)
    try:
        Iq = bracket_power(I, q)
        row.resolution = resolve_over_R(f, Iq, max_position=max_position)
        row.socle = socle_profile(f, Iq)
        if theorem:
            row.report = verify_theorem(f, Iq, max_position, resolution=row.resolution, socle=row.socle)
    except FrobtailError as exc:
        log.warning("exponent %d failed: %s", e, exc)
        row.error = f"{type(exc).__name__}: {exc}"
    return row


def run_sweep(f: Polynomial, I: Sequence[Polynomial], E: Sequence[int], max_position: int = 4,
              theorem: bool = True) -> FrobeniusSweep:
    """Socle, resolution prefix and tail report of ``R/J^[p^e]`` for each ``e`` in ``E``."""
    sweep = FrobeniusSweep(f, list(I), f.ring.p, sorted(set(E)))
    for e in sweep.exponents:
        if e < 0:
            raise ValueError("exponents must be non-negative")
        sweep.rows[e] = compute_row(f, I, e, max_position, theorem)
    return sweep
