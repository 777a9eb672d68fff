"""Socle degrees, Hilbert functions and Gorenstein data of Artinian quotients."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .errors import NonHomogeneousInput, NotArtinian, NotGorenstein, NotGradeThree
from .groebner import _Codec, _Engine, _encode, buchberger
from .poly import Polynomial
from .resolution import ResolutionPrefix, resolve_over_P


@dataclass(frozen=True)
class SocleProfile:
    """Socle degrees with multiplicities, ``{degree: multiplicity}``."""

    degrees: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(d): int(m) for d, m in sorted(self.degrees.items()) if m}
        object.__setattr__(self, "degrees", clean)

    @property
    def s(self) -> int:
        return sum(self.degrees.values())

    def as_list(self) -> List[int]:
        return [d for d, m in self.degrees.items() for _ in range(m)]

    @property
    def top(self) -> Optional[int]:
        return max(self.degrees, default=None)

    def is_pure(self) -> bool:
        return len(self.degrees) == 1

    def shifted(self, n: int) -> "SocleProfile":
        return SocleProfile({d + n: m for d, m in self.degrees.items()})

    def format(self) -> str:
        return " ".join(f"{d}:{m}" for d, m in self.degrees.items())

    def to_dict(self):
        return [[d, m] for d, m in self.degrees.items()]

    @classmethod
    def from_dict(cls, data) -> "SocleProfile":
        return cls({int(d): int(m) for d, m in data})

    @classmethod
    def from_degrees(cls, degs) -> "SocleProfile":
        return cls(dict(Counter(degs)))


@dataclass
class GorensteinData:
    b: int
    mu: int
    resolution: ResolutionPrefix


def _homogeneous(gens: Sequence[Polynomial]) -> List[Polynomial]:
    out = []
    for g in gens:
        if not g:
            continue
        if not g.is_homogeneous():
            raise NonHomogeneousInput(f"generator {g} is not homogeneous")
        out.append(g)
    return out


def artinian_bound(gens: Sequence[Polynomial], f: Optional[Polynomial] = None) -> int:
    """Degree past which a non-vanishing Hilbert function is declared non-Artinian."""
    top = max((g.degree for g in gens if g), default=0)
    return 3 * (top + (f.degree if f is not None else 0))


def _pure_powers(lead_monos, nvars: int) -> Dict[int, int]:
    found: Dict[int, int] = {}
    for m in lead_monos:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            found[i] = min(found.get(i, m[i]), m[i])
        elif not support:
            return {i: 0 for i in range(nvars)}
    return found


def is_artinian(K: Sequence[Polynomial], bound: Optional[int] = None) -> bool:
    """Whether ``P/K`` has finite length, judged from a GB truncated at ``bound``."""
    K = _homogeneous(K)
    if not K:
        return False
    ring = K[0].ring
    bound = artinian_bound(K) if bound is None else bound
    gb = buchberger(K, degree_bound=bound)
    leads = [m for _, m in gb.lead_monomials()]
    return len(_pure_powers(leads, ring.nvars)) == ring.nvars


def hilbert_function(K: Sequence[Polynomial], d_max: int) -> List[int]:
    """``[dim (P/K)_0, ..., dim (P/K)_{d_max}]`` by counting standard monomials."""
    K = _homogeneous(K)
    if not K:
        raise ValueError("need a ring; pass at least one generator (use 0 * x for the zero ideal)")
    ring = K[0].ring
    gb = buchberger(K, degree_bound=d_max)
    leads = sorted({m for _, m in gb.lead_monomials()}, key=sum)
    out = []
    for d in range(d_max + 1):
        active = [m for m in leads if sum(m) <= d]
        count = 0
        for mono in ring.monomials_of_degree(d):
            if not any(all(a <= b for a, b in zip(m, mono)) for m in active):
                count += 1
        out.append(count)
    return out


def socle_profile(f: Polynomial, J: Sequence[Polynomial]) -> SocleProfile:
    """Socle degrees of ``P/(J + (f))``, i.e. of ``R/J`` with ``R = P/(f)``.

    One Gröbner run in ``P^n ⊕ P(-1)`` on the generator ``(x_1, ..., x_n; 1)``
    modulo ``K·P^n ⊕ K``: its last coordinate sweeps ``(K : m)`` and the
    minimal new elements there form a basis of the socle.
    """
    K = _homogeneous(list(J) + [f])
    ring = f.ring
    if not is_artinian(K, artinian_bound(J, f)):
        raise NotArtinian("quotient is not Artinian within the degree bound")
    n = ring.nvars
    codec = _Codec(n, (0,) * n + (1,))
    eng = _Engine(codec, ring.p, split=n)
    zero = ring.zero()
    for k in K:
        for i in range(n + 1):
            e = [zero] * (n + 1)
            e[i] = k
            eng.add_input(_encode(codec, e), context=True)
    eng.add_input(_encode(codec, list(ring.gens()) + [ring.one()]), tag=0)
    eng.run()
    return SocleProfile.from_degrees(g.deg - 1 for g in eng.new_low())


def a_invariant(f: Polynomial) -> int:
    """a-invariant of ``P/(f)`` for ``P`` with degree-one variables."""
    if f.is_zero() or not f.is_homogeneous():
        raise NonHomogeneousInput("f must be a nonzero homogeneous polynomial")
    return f.degree - f.ring.nvars


def back_twist(I: Sequence[Polynomial]) -> GorensteinData:
    """Back twist and generator count of a grade-three Gorenstein ideal."""
    res = resolve_over_P(I)
    nvars = I[0].ring.nvars if I else 3
    if res.zero_module or res.length < nvars:
        raise NotGradeThree(f"resolution has length {res.length}, expected {nvars}")
    if not is_artinian(I):
        raise NotGradeThree("quotient is not Artinian, so the ideal has grade below the number of variables")
    last = res.twists(res.length)
    if len(last) != 1:
        raise NotGorenstein(f"last module has rank {len(last)}")
    return GorensteinData(b=last[0], mu=len(res.twists(1)), resolution=res)
