"""A small expression language for elements of Gamma.

    q[n]        complete Q-function q_n
    Q[a,b,...]  Q-function of a composition (entries may be negative)
    p[n]        power sum p_n
    z, z^k      the letter z (k may be negative)
    F o G       plethysm
    F * G, F + G, F - G, -F, F^k, integers, parentheses

Precedence, loosest first: + -, *, o, ^.  A bare name inside brackets
(e.g. Q[p,2]) is looked up in the variables passed to `parse`.
"""

from __future__ import annotations

import re
from typing import Mapping

from .gamma_ring import GammaElement, pgen, qgen
from .plethysm import pleth
from .schur_q import q_lambda

__all__ = ["ExpressionError", "parse"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class ExpressionError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"cannot tokenize {text[pos:]!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str], variables: Mapping[str, int]):
        self.toks = tokens
        self.i = 0
        self.vars = dict(variables)

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression")
        if expected is not None and tok != expected:
            raise ExpressionError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> GammaElement:
        out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> GammaElement:
        out = self.pleth()
        while self.peek() == "*":
            self.take()
            out = out * self.pleth()
        return out

    def pleth(self) -> GammaElement:
        out = self.unary()
        while self.peek() == "o":
            self.take()
            rhs = self.unary()
            if not out.is_z_free():
                raise ExpressionError("left side of a plethysm must not contain z")
            out = pleth(out, rhs)
        return out

    def unary(self) -> GammaElement:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> GammaElement:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            k = self.signed_int()
            if k < 0:
                raise ExpressionError("negative powers are only allowed on z")
            base = base**k
        return base

    def signed_int(self) -> int:
        sign = 1
        if self.peek() in ("-", "+"):
            sign = -1 if self.take() == "-" else 1
        if self.peek() == "(":
            self.take()
            v = self.signed_int()
            self.take(")")
            return sign * v
        tok = self.take()
        if not tok.isdigit():
            raise ExpressionError(f"expected an integer, got {tok!r}")
        return sign * int(tok)

    def index_entry(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.take()
        if tok.isdigit():
            val = int(tok)
        elif tok in self.vars:
            val = int(self.vars[tok])
        else:
            raise ExpressionError(f"unknown index {tok!r}")
        val *= sign
        while self.peek() in ("+", "-") and self.toks[self.i + 1 : self.i + 2] and self.toks[self.i + 1].isdigit():
            op = self.take()
            off = int(self.take())
            val = val + off if op == "+" else val - off
        return val

    def bracket(self) -> list[int]:
        self.take("[")
        entries = []
        if self.peek() != "]":
            entries.append(self.index_entry())
            while self.peek() == ",":
                self.take()
                entries.append(self.index_entry())
        self.take("]")
        return entries

    def atom(self) -> GammaElement:
        tok = self.peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression")
        if tok.isdigit():
            self.take()
            return GammaElement.constant(int(tok))
        if tok == "(":
            self.take()
            out = self.expr()
            self.take(")")
            return out
        if tok == "z":
            self.take()
            if self.peek() == "^":
                self.take()
                return GammaElement.letter(1, self.signed_int())
            return GammaElement.letter(1, 1)
        if tok in ("q", "Q", "p"):
            self.take()
            idx = self.bracket()
            if tok == "Q":
                return q_lambda(idx)
            if len(idx) != 1:
                raise ExpressionError(f"{tok}[...] takes exactly one index")
            if tok == "q":
                return qgen(idx[0])
            if idx[0] < 1:
                raise ExpressionError("p[n] needs n >= 1")
            return pgen(idx[0])
        raise ExpressionError(f"unexpected token {tok!r}")


def parse(text: str, variables: Mapping[str, int] | None = None) -> GammaElement:
    parser = _Parser(_tokenize(text), variables or {})
    out = parser.expr()
    if parser.peek() is not None:
        raise ExpressionError(f"trailing input at {parser.peek()!r}")
    return out
