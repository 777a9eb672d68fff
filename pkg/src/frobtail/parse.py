"""Recursive-descent parser for polynomial expressions.

Grammar (``*`` between factors is optional)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (['*'] power)*
    power  := atom [('^'|'**') INT]
    atom   := INT | NAME | '(' expr ')'
"""
from __future__ import annotations

import re

from .errors import ExponentOverflow, PolynomialSyntaxError, UnknownVariable
from .poly import MAX_EXPONENT, Polynomial, PolynomialRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*^()]))")


def _byte_offset(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


def _tokenize(text: str, ring: PolynomialRing):
    names = sorted(ring.names, key=len, reverse=True)
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise PolynomialSyntaxError(f"unexpected character {text[i]!r}", _byte_offset(text, i))
        start = m.start(m.lastindex)
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num), start))
        elif op is not None:
            tokens.append(("op", op, start))
        else:
            # split run-together names such as "xyz" into declared variables
            pos = 0
            while pos < len(ident):
                for name in names:
                    if ident.startswith(name, pos):
                        tokens.append(("var", name, start + pos))
                        pos += len(name)
                        break
                else:
                    raise UnknownVariable(ident, _byte_offset(text, start))
        i = m.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text, ring)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return PolynomialSyntaxError(message, _byte_offset(self.text, tok[2]))

    def expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in ("+", "-"):
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def _starts_atom(self, tok):
        kind, val, _ = tok
        return kind in ("int", "var") or (kind == "op" and val == "(")

    def term(self) -> Polynomial:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc * self.power()
            elif self._starts_atom(tok):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("^", "**"):
            self.take()
            kind, val, _ = exp_tok = self.take()
            if kind != "int":
                raise self.error("exponent must be a non-negative integer literal", exp_tok)
            if val > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {val} exceeds {MAX_EXPONENT}")
            if len(base) == 1:
                (m, c), = base.items()
                if any(e * val > MAX_EXPONENT for e in m):
                    raise ExponentOverflow(f"exponent {val} overflows monomial {tuple(m)}")
                return self.ring.monomial([e * val for e in m], pow(c, val, self.ring.p))
            return base ** val
        return base

    def atom(self) -> Polynomial:
        kind, val, _ = tok = self.take()
        if kind == "int":
            return self.ring.constant(val)
        if kind == "var":
            return self.ring.gen(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            closing = self.take()
            if closing[:2] != ("op", ")"):
                raise self.error("expected ')'", closing)
            return inner
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected token {val!r}", tok)


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``."""
    parser = _Parser(text, ring)
    result = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise parser.error(f"unexpected token {tok[1]!r}", tok)
    return result
