"""Monomials, the grevlex order, and sparse polynomials over a prime field."""
from __future__ import annotations

from operator import add
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .errors import ExponentOverflow, RingMismatch
from .field import PrimeField

MAX_EXPONENT = (1 << 31) - 1


class Monomial(tuple):
    """Exponent vector; ``m1 * m2`` multiplies, ``degree`` is the total degree."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(exponents)
        for e in exps:
            if e < 0:
                raise ValueError("negative exponent")
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} does not fit in 31 bits")
        return super().__new__(cls, exps)

    @property
    def degree(self) -> int:
        return sum(self)

    def __mul__(self, other):
        return Monomial(map(add, self, other))

    __rmul__ = __mul__

    def divides(self, other: Sequence[int]) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def lcm(self, other: Sequence[int]) -> "Monomial":
        return Monomial(map(max, self, other))

    def __truediv__(self, other):
        return Monomial(a - b for a, b in zip(self, other))

    def __repr__(self):
        return f"Monomial({tuple(self)})"


def grevlex_key(m: Sequence[int]) -> tuple:
    """Sort key: larger key means larger monomial in graded reverse lex."""
    return (sum(m),) + tuple(-e for e in reversed(m[1:]))


def grevlex_compare(m1: Sequence[int], m2: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``m1`` is less than, equal to, or greater than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError("monomials have different numbers of variables")
    k1, k2 = grevlex_key(m1), grevlex_key(m2)
    return (k1 > k2) - (k1 < k2)


class PolynomialRing:
    """F_p[x_1, ..., x_n] with standard grading and named variables."""

    def __init__(self, p: int, names: Sequence[str] = ("x", "y", "z")):
        self.field = PrimeField(p)
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names) or not self.names:
            raise ValueError("variable names must be distinct and non-empty")
        self.nvars = len(self.names)

    @property
    def p(self) -> int:
        return self.field.p

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and (self.p, self.names) == (other.p, other.names)

    def __hash__(self):
        return hash((self.p, self.names))

    def __repr__(self):
        return f"PolynomialRing({self.p}, {self.names})"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {Monomial((0,) * self.nvars): c})

    def monomial(self, exps: Sequence[int], c: int = 1) -> "Polynomial":
        return Polynomial(self, {Monomial(exps): c})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def gen(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def __getitem__(self, name: str) -> "Polynomial":
        return self.gen(name)

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_polynomial

        return parse_polynomial(text, self)

    def monomials_of_degree(self, d: int) -> list:
        """All monomials of degree ``d``, in descending grevlex order."""
        if d < 0:
            return []
        out = []

        def rec(prefix, left, k):
            if k == 1:
                out.append(Monomial(prefix + [left]))
                return
            for e in range(left, -1, -1):
                rec(prefix + [e], left - e, k - 1)

        rec([], d, self.nvars)
        out.sort(key=grevlex_key, reverse=True)
        return out


class Polynomial:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Sequence[int], int]):
        p = ring.p
        clean: Dict[Monomial, int] = {}
        for m, c in terms.items():
            c %= p
            if c:
                if not isinstance(m, Monomial):
                    m = Monomial(m)
                clean[m] = c
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: keys are Monomials, values reduced and nonzero
        obj = object.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection --------------------------------------------------------
    def terms(self) -> list:
        """``(Monomial, coefficient)`` pairs, strictly descending in grevlex."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list:
        return [m for m, _ in self.terms()]

    def coefficient(self, m: Sequence[int]) -> int:
        return self._terms.get(Monomial(m), 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(m.degree == 0 for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self._terms}) <= 1

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def lead(self) -> Tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no lead term")
        m = max(self._terms, key=grevlex_key)
        return m, self._terms[m]

    # -- arithmetic --------------------------------------------------------
    def _check(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial._raw(self.ring, {m: p - c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c % p for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out: Dict[tuple, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(map(add, m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, m: Sequence[int], c: int = 1) -> "Polynomial":
        p = self.ring.p
        return Polynomial(self.ring, {Monomial(map(add, k, m)): v * c % p for k, v in self._terms.items()})

    def divmod(self, g: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Grevlex long division by one polynomial: ``self = quot * g + rem``."""
        g = self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.ring.p
        lm, lc = g.lead()
        inv = pow(lc, -1, p)
        tail = [(m, c) for m, c in g._terms.items() if m != lm]
        work = dict(self._terms)
        quot: Dict[Monomial, int] = {}
        rem: Dict[Monomial, int] = {}
        while work:
            m = max(work, key=grevlex_key)
            c = work.pop(m)
            if not lm.divides(m):
                rem[m] = c
                continue
            t = m / lm
            k = c * inv % p
            quot[t] = (quot.get(t, 0) + k) % p
            for tm, tc in tail:
                n = Monomial(map(add, tm, t))
                v = (work.get(n, 0) - k * tc) % p
                if v:
                    work[n] = v
                else:
                    work.pop(n, None)
        return Polynomial(self.ring, quot), Polynomial._raw(self.ring, rem)

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        q, r = self.divmod(g)
        if r:
            raise ArithmeticError(f"{g} does not divide {self}")
        return q

    def frobenius(self, q: int) -> "Polynomial":
        """``g^q`` for q a power of p, computed as sum of c * m^q."""
        return Polynomial._raw(
            self.ring, {Monomial(e * q for e in m): c for m, c in self._terms.items()}
        )

    # -- comparison and display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(poly: Polynomial) -> str:
    """Canonical text: descending grevlex, symmetric coefficients, no ``*``."""
    if poly.is_zero():
        return "0"
    ring = poly.ring
    sep = "*" if any(len(n) > 1 for n in ring.names) else ""
    pieces = []
    for m, c in poly.terms():
        c = ring.field.signed(c)
        factors = []
        for name, e in zip(ring.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = sep.join(factors)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{sep}{body}"
        pieces.append(("-" if c < 0 else "+", text))
    sign, first = pieces[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out
