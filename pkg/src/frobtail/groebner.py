"""Homogeneous Buchberger algorithm for ideals and submodules of graded free modules.

Terms of a free module element are encoded as Python integers whose natural
order is the position-over-term order (lower position wins, grevlex within a
position).  Multiplying a term by a monomial is then a single integer
addition, which keeps the inner reduction loop cheap.

The engine processes S-pairs and input generators degree by degree.  Inside
one degree it handles, in order: pairs whose lead lies in the "lower block"
of positions (tracking coordinates), context generators living in the lower
block, context generators in the upper block, pairs in the upper block, then
counted input generators.  With that schedule the counted inputs that
survive reduction are a minimal generating set, and lower-block elements
born in the last three phases are minimal generators of the lower-block
submodule modulo the lower-block context (the syzygies when the lower block
tracks cofactors).
"""
from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import ModuleMismatch, NonHomogeneousInput, RingMismatch, ZeroDivisorArgument
from .poly import Monomial, Polynomial, PolynomialRing

EXP_BITS = 32
_EMASK = (1 << EXP_BITS) - 1

_GG, _LOWCTX, _CONTEXT, _FF, _INPUT = 0, 1, 2, 3, 4


class _Codec:
    """Bijection between (position, exponent vector) and ordered integer keys."""

    def __init__(self, nvars: int, twists: Sequence[int]):
        self.n = nvars
        self.twists = tuple(twists)
        self.npos = len(self.twists)
        self.mshift = EXP_BITS * (nvars - 1)
        self.pshift = self.mshift + 40
        self.mmask = (1 << self.pshift) - 1
        self.offset = (1 << self.mshift) - 1

    def mono(self, exps: Sequence[int]) -> int:
        k = sum(exps) << self.mshift
        for i in range(1, self.n):
            k |= (_EMASK - exps[i]) << (EXP_BITS * (i - 1))
        return k

    def key(self, pos: int, exps: Sequence[int]) -> int:
        return ((self.npos - 1 - pos) << self.pshift) | self.mono(exps)

    def shift(self, exps: Sequence[int]) -> int:
        """Amount to add to a key to multiply its term by the monomial ``exps``."""
        return self.mono(exps) - self.offset

    def pos(self, key: int) -> int:
        return self.npos - 1 - (key >> self.pshift)

    def exps(self, key: int) -> Tuple[int, ...]:
        mk = key & self.mmask
        rest = []
        s = 0
        for i in range(1, self.n):
            e = _EMASK - ((mk >> (EXP_BITS * (i - 1))) & _EMASK)
            rest.append(e)
            s += e
        return (((mk >> self.mshift) - s), *rest)

    def degree(self, key: int) -> int:
        return ((key & self.mmask) >> self.mshift) + self.twists[self.pos(key)]


class _Elt:
    __slots__ = ("lead", "tail", "pos", "exps", "deg", "low", "idx", "phase", "tag")


class _Engine:
    def __init__(self, codec: _Codec, p: int, split: Optional[int] = None, product_criterion=False):
        self.codec = codec
        self.p = p
        self.split = codec.npos if split is None else split
        self.basis: List[_Elt] = []
        self.by_pos: List[List[_Elt]] = [[] for _ in range(codec.npos)]
        self.pending = set()
        self.queue = []
        self.seq = 0
        self.cache: Dict[int, object] = {}
        self.product = product_criterion and codec.npos == 1
        self.survivors: Dict[object, Optional[_Elt]] = {}
        self.complete = True
        if codec.n == 3:
            self._divides = lambda a, b: a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]
        else:
            self._divides = lambda a, b: all(x <= y for x, y in zip(a, b))

    # -- queue ---------------------------------------------------------
    def add_input(self, terms: Dict[int, int], tag=None, context=False):
        terms = {k: c % self.p for k, c in terms.items() if c % self.p}
        if not terms:
            if not context:
                self.survivors[tag] = None
            return
        degs = {self.codec.degree(k) for k in terms}
        if len(degs) != 1:
            raise NonHomogeneousInput("generator is not homogeneous")
        if context:
            low = self.codec.pos(max(terms)) >= self.split
            phase = _LOWCTX if low else _CONTEXT
        else:
            phase = _INPUT
        self.seq += 1
        heappush(self.queue, (degs.pop(), phase, 0, self.seq, ("in", terms, tag)))

    # -- reduction -----------------------------------------------------
    def _find(self, key: int) -> Optional[_Elt]:
        hit = self.cache.get(key)
        if hit is not None and hit.__class__ is _Elt:
            return hit
        codec = self.codec
        cands = self.by_pos[codec.pos(key)]
        start = hit or 0
        if start == len(cands):
            return None
        exps = codec.exps(key)
        divides = self._divides
        for idx in range(start, len(cands)):
            g = cands[idx]
            if divides(g.exps, exps):
                self.cache[key] = g
                return g
        self.cache[key] = len(cands)
        return None

    def reduce(self, terms: Dict[int, int], full: bool = True) -> Dict[int, int]:
        """Reduce ``terms`` (consumed) by the current basis; returns the remainder."""
        p = self.p
        find = self._find
        heap = [-k for k in terms]
        heapify(heap)
        rem: Dict[int, int] = {}
        while heap:
            k = -heappop(heap)
            c = terms.pop(k, None)
            if c is None:
                continue
            g = find(k)
            if g is None:
                rem[k] = c
                if not full:
                    rem.update(terms)
                    return rem
                continue
            s = k - g.lead
            mc = p - c
            get = terms.get
            for tk, tc in g.tail:
                nk = tk + s
                v = get(nk)
                if v is None:
                    terms[nk] = mc * tc % p
                    heappush(heap, -nk)
                else:
                    v = (v + mc * tc) % p
                    if v:
                        terms[nk] = v
                    else:
                        del terms[nk]
        return rem

    # -- basis maintenance -----------------------------------------------
    def _add(self, rem: Dict[int, int], phase: int, tag) -> _Elt:
        codec = self.codec
        p = self.p
        lead = max(rem)
        inv = pow(rem[lead], -1, p)
        g = _Elt()
        g.lead = lead
        g.tail = [(k, c * inv % p) for k, c in rem.items() if k != lead]
        g.pos = codec.pos(lead)
        g.exps = codec.exps(lead)
        g.deg = sum(g.exps) + codec.twists[g.pos]
        g.low = g.pos >= self.split
        g.idx = len(self.basis)
        g.phase = phase
        g.tag = tag
        pair_phase = _GG if g.low else _FF
        twist = codec.twists[g.pos]
        for h in self.by_pos[g.pos]:
            if self.product and all(a == 0 or b == 0 for a, b in zip(h.exps, g.exps)):
                continue
            lexps = tuple(map(max, h.exps, g.exps))
            L = codec.key(g.pos, lexps)
            pair = (h.idx, g.idx)
            self.pending.add(pair)
            self.seq += 1
            heappush(self.queue, (sum(lexps) + twist, pair_phase, L, self.seq, ("pair", pair, lexps)))
        self.basis.append(g)
        self.by_pos[g.pos].append(g)
        return g

    def _chain(self, i: int, j: int, pos: int, lexps) -> bool:
        pending = self.pending
        divides = self._divides
        for g in self.by_pos[pos]:
            k = g.idx
            if k == i or k == j or not divides(g.exps, lexps):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False

    def _spoly(self, i: int, j: int, L: int) -> Dict[int, int]:
        gi, gj = self.basis[i], self.basis[j]
        si, sj = L - gi.lead, L - gj.lead
        p = self.p
        terms = {k + si: c for k, c in gi.tail}
        for k, c in gj.tail:
            nk = k + sj
            v = (terms.get(nk, 0) - c) % p
            if v:
                terms[nk] = v
            else:
                terms.pop(nk, None)
        return terms

    def run(self, degree_bound: Optional[int] = None):
        queue = self.queue
        while queue:
            if degree_bound is not None and queue[0][0] > degree_bound:
                self.complete = False
                break
            _, phase, L, _, item = heappop(queue)
            if item[0] == "pair":
                (i, j), lexps = item[1], item[2]
                self.pending.discard((i, j))
                pos = self.codec.pos(L)
                if self._chain(i, j, pos, lexps):
                    continue
                rem = self.reduce(self._spoly(i, j, L))
                if rem:
                    self._add(rem, phase, None)
            else:
                _, terms, tag = item
                rem = self.reduce(dict(terms))
                g = self._add(rem, phase, tag) if rem else None
                if phase == _INPUT:
                    self.survivors[tag] = g
        return self

    def interreduce(self):
        for g in self.basis:
            tail = self.reduce(dict(g.tail))
            g.tail = list(tail.items())

    # -- views -----------------------------------------------------------
    def new_low(self) -> List[_Elt]:
        """Lower-block elements that are minimal modulo earlier data."""
        return [g for g in self.basis if g.low and g.phase >= _CONTEXT]

    def terms_of(self, g: _Elt) -> Dict[int, int]:
        out = dict(g.tail)
        out[g.lead] = 1
        return out


# ---------------------------------------------------------------------------
# Public types
# ---------------------------------------------------------------------------


class FreeModuleElement:
    """Element of the twisted free module ``⊕ P(-t_i)`` (dense component list)."""

    __slots__ = ("components", "twists", "ring")

    def __init__(self, components: Sequence[Polynomial], twists: Optional[Sequence[int]] = None):
        comps = tuple(components)
        if not comps:
            raise ValueError("free module element needs at least one component")
        self.ring = comps[0].ring
        for c in comps:
            if c.ring != self.ring:
                raise RingMismatch("components from different rings")
        self.components = comps
        self.twists = tuple(twists) if twists is not None else (0,) * len(comps)
        if len(self.twists) != len(comps):
            raise ValueError("twists and components differ in length")

    @property
    def rank(self) -> int:
        return len(self.components)

    def nonzero(self) -> Dict[int, Polynomial]:
        return {i: c for i, c in enumerate(self.components) if c}

    def is_zero(self) -> bool:
        return not any(self.components)

    def is_homogeneous(self) -> bool:
        degs = set()
        for c, t in zip(self.components, self.twists):
            if not c:
                continue
            if not c.is_homogeneous():
                return False
            degs.add(c.degree + t)
        return len(degs) <= 1

    @property
    def degree(self) -> Optional[int]:
        for c, t in zip(self.components, self.twists):
            if c:
                return c.degree + t
        return None

    def _compat(self, other):
        if self.twists != other.twists or self.ring != other.ring:
            raise ModuleMismatch("elements live in different free modules")

    def __add__(self, other):
        self._compat(other)
        return FreeModuleElement([a + b for a, b in zip(self.components, other.components)], self.twists)

    def __sub__(self, other):
        self._compat(other)
        return FreeModuleElement([a - b for a, b in zip(self.components, other.components)], self.twists)

    def __neg__(self):
        return FreeModuleElement([-a for a in self.components], self.twists)

    def scale(self, g: Union[Polynomial, int]) -> "FreeModuleElement":
        return FreeModuleElement([a * g for a in self.components], self.twists)

    def __eq__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return self.twists == other.twists and self.components == other.components

    def __hash__(self):
        return hash((self.components, self.twists))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.components)
        return f"FreeModuleElement([{body}], twists={list(self.twists)})"


Generator = Union[Polynomial, FreeModuleElement]


def _as_vector(g: Generator, twists=None) -> FreeModuleElement:
    if isinstance(g, FreeModuleElement):
        return g
    return FreeModuleElement([g], twists if twists is not None else (0,))


def _encode(codec: _Codec, components: Sequence[Polynomial], offset: int = 0) -> Dict[int, int]:
    out = {}
    for i, comp in enumerate(components):
        for m, c in comp.items():
            out[codec.key(i + offset, m)] = c
    return out


def _decode(codec: _Codec, ring: PolynomialRing, terms: Dict[int, int], lo: int = 0, hi: Optional[int] = None):
    hi = codec.npos if hi is None else hi
    comps: List[Dict[Monomial, int]] = [{} for _ in range(hi - lo)]
    for k, c in terms.items():
        pos = codec.pos(k)
        if lo <= pos < hi:
            comps[pos - lo][Monomial(codec.exps(k))] = c
    return [Polynomial._raw(ring, d) for d in comps]


@dataclass
class GroebnerBasis:
    """Reduced (possibly degree-truncated) Gröbner basis of a homogeneous module."""

    generators: list
    twists: Tuple[int, ...]
    ring: PolynomialRing
    reduced: bool
    complete: bool
    degree_bound: Optional[int]
    _engine: _Engine = None

    @property
    def rank(self) -> int:
        return len(self.twists)

    def lead_monomials(self):
        return [(g.pos, Monomial(g.exps)) for g in self._engine.basis]

    def __len__(self):
        return len(self.generators)


def _check_inputs(gens: Sequence[Generator], twists=None) -> Tuple[PolynomialRing, Tuple[int, ...], List[FreeModuleElement], bool]:
    if not gens:
        raise ValueError("need at least one generator (or pass ring and twists)")
    rank1 = isinstance(gens[0], Polynomial)
    vecs = [_as_vector(g, twists if rank1 else None) for g in gens]
    ring = vecs[0].ring
    tw = vecs[0].twists
    for v in vecs:
        if v.ring != ring:
            raise RingMismatch("generators from different rings")
        if v.twists != tw:
            raise ModuleMismatch("generators in different free modules")
        if not v.is_homogeneous():
            raise NonHomogeneousInput(f"generator {v!r} is not homogeneous")
    return ring, tw, vecs, rank1


def buchberger(gens: Sequence[Generator], twists: Optional[Sequence[int]] = None,
               degree_bound: Optional[int] = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the submodule generated by ``gens``.

    ``gens`` are polynomials (an ideal, twist 0 unless ``twists`` is given) or
    :class:`FreeModuleElement` values sharing one ambient module.  With a
    ``degree_bound`` the result is only a Gröbner basis up to that degree.
    """
    ring, tw, vecs, rank1 = _check_inputs(gens, twists)
    codec = _Codec(ring.nvars, tw)
    eng = _Engine(codec, ring.p, product_criterion=True)
    for i, v in enumerate(vecs):
        eng.add_input(_encode(codec, v.components), tag=i)
    eng.run(degree_bound)
    eng.interreduce()
    out = []
    for g in eng.basis:
        comps = _decode(codec, ring, eng.terms_of(g))
        out.append(comps[0] if rank1 else FreeModuleElement(comps, tw))
    return GroebnerBasis(out, tw, ring, True, eng.complete, degree_bound, eng)


def normal_form(v: Generator, gb: GroebnerBasis) -> Generator:
    """Remainder of ``v`` modulo ``gb``; zero exactly when ``v`` lies in the module."""
    rank1 = isinstance(v, Polynomial)
    vec = _as_vector(v, gb.twists if rank1 else None)
    if vec.ring != gb.ring or vec.rank != gb.rank or (not rank1 and vec.twists != gb.twists):
        raise ModuleMismatch("element and Gröbner basis live in different modules")
    eng = gb._engine
    rem = eng.reduce(_encode(eng.codec, vec.components))
    comps = _decode(eng.codec, gb.ring, rem)
    return comps[0] if rank1 else FreeModuleElement(comps, vec.twists)


def contains(gb: GroebnerBasis, v: Generator) -> bool:
    r = normal_form(v, gb)
    return r.is_zero()


class PrincipalReducer:
    """Normal forms modulo the principal ideal (f); ``{f}`` is its own Gröbner basis."""

    def __init__(self, f: Polynomial):
        if f.is_zero():
            raise ZeroDivisorArgument("cannot reduce modulo 0")
        self.f = f
        self.ring = f.ring
        self.codec = _Codec(f.ring.nvars, (0,))
        self.engine = _Engine(self.codec, f.ring.p)
        self.engine._add(_encode(self.codec, [f]), _INPUT, None)

    def __call__(self, g: Polynomial) -> Polynomial:
        if len(g) == 0:
            return g
        rem = self.engine.reduce(_encode(self.codec, [g]))
        return _decode(self.codec, self.ring, rem)[0]


# ---------------------------------------------------------------------------
# Minimal generators, syzygies, colon ideals
# ---------------------------------------------------------------------------


def minimal_generators(gens: Sequence[Generator], twists: Optional[Sequence[int]] = None,
                       modulus: Optional[Polynomial] = None,
                       context: Sequence[Generator] = ()) -> List[int]:
    """Indices of a minimal generating subset of ``gens``.

    With ``modulus`` the module is read over ``P/(modulus)``: generators lying
    in ``modulus`` times the ambient module do not count.  Elements of
    ``context`` are quotiented out as well, so the result minimally generates
    ``(gens + context) / context``.
    """
    if not gens:
        return []
    ring, tw, vecs, _ = _check_inputs(gens, twists)
    codec = _Codec(ring.nvars, tw)
    eng = _Engine(codec, ring.p, product_criterion=True)
    if modulus is not None:
        for i in range(len(tw)):
            e = [ring.zero()] * len(tw)
            e[i] = modulus
            eng.add_input(_encode(codec, e), context=True)
    for c in context:
        cv = _as_vector(c, tw if isinstance(c, Polynomial) else None)
        if cv.twists != tw:
            raise ModuleMismatch("context element lives in a different free module")
        if not cv.is_homogeneous():
            raise NonHomogeneousInput("context elements must be homogeneous")
        eng.add_input(_encode(codec, cv.components), context=True)
    order = sorted(range(len(vecs)), key=lambda i: (vecs[i].degree if vecs[i].degree is not None else 0, i))
    for i in order:
        eng.add_input(_encode(codec, vecs[i].components), tag=i)
    eng.run()
    return sorted((i for i in order if eng.survivors.get(i) is not None),
                  key=lambda i: (vecs[i].degree, i))


def minimal_generator_degrees(gens: Sequence[Generator], twists: Optional[Sequence[int]] = None,
                              modulus: Optional[Polynomial] = None,
                              context: Sequence[Generator] = ()) -> List[int]:
    """Degrees (with multiplicity, ascending) of a minimal generating set."""
    if not gens:
        return []
    idx = minimal_generators(gens, twists, modulus, context)
    vecs = [_as_vector(g, twists if isinstance(g, Polynomial) else None) for g in gens]
    return sorted(vecs[i].degree for i in idx)


def _kernel(ring: PolynomialRing, columns: Sequence[Sequence[Polynomial]], row_twists, col_twists,
            modulus: Optional[Polynomial] = None, raw: bool = False):
    """Generators of {u : A u ∈ modulus·P^r} as (degree, components) pairs.

    ``raw`` returns every lower-block Gröbner element (a non-minimal
    generating set); otherwise only the minimal ones.
    """
    r, c = len(row_twists), len(col_twists)
    codec = _Codec(ring.nvars, tuple(row_twists) + tuple(col_twists))
    eng = _Engine(codec, ring.p, split=r)
    zero = ring.zero()
    if modulus is not None:
        for i in range(r + c):
            e = [zero] * (r + c)
            e[i] = modulus
            eng.add_input(_encode(codec, e), context=True)
    for j, col in enumerate(columns):
        terms = _encode(codec, col)
        terms[codec.key(r + j, (0,) * ring.nvars)] = 1
        eng.add_input(terms, tag=j)
    eng.run()
    chosen = [g for g in eng.basis if g.low] if raw else eng.new_low()
    out = []
    for g in chosen:
        comps = _decode(codec, ring, eng.terms_of(g), r, r + c)
        out.append((g.deg, comps))
    return out


def syzygies(A) -> "GradedMatrix":
    """Minimal homogeneous syzygy matrix ``S`` of the columns of ``A`` (so ``A·S = 0``)."""
    from .matrix import GradedMatrix

    if not A.is_homogeneous():
        raise NonHomogeneousInput("matrix entries violate the degree law")
    cols = [A.column(j) for j in range(A.ncols)]
    found = _kernel(A.ring, cols, A.row_twists, A.col_twists)
    return GradedMatrix.from_columns(A.ring, [comps for _, comps in found], A.col_twists,
                                     [d for d, _ in found])


def colon(I: Sequence[Polynomial], g: Polynomial) -> List[Polynomial]:
    """Minimal generators of ``(I : g)``."""
    if g.is_zero():
        raise ZeroDivisorArgument("colon by the zero polynomial")
    if not g.is_homogeneous():
        raise NonHomogeneousInput("colon argument must be homogeneous")
    ring = g.ring
    codec = _Codec(ring.nvars, (0, g.degree))
    eng = _Engine(codec, ring.p, split=1)
    zero = ring.zero()
    for h in I:
        if h.ring != ring:
            raise RingMismatch("ideal and argument from different rings")
        if not h.is_homogeneous():
            raise NonHomogeneousInput("ideal generators must be homogeneous")
        eng.add_input(_encode(codec, [h, zero]), context=True)
    eng.add_input(_encode(codec, [g, ring.one()]), tag=0)
    eng.run()
    gens = [_decode(codec, ring, eng.terms_of(e), 1, 2)[0] for e in eng.new_low()]
    return gens
