"""Parser for the canonical text grammar printed by RatZeta and MPolyX.

Accepts integers, the variable ``z``, variables ``x1``..``xN``, the binary
operators ``+ - * / ^`` and parentheses.  Division is exact division and
must produce a polynomial in the x variables.
"""
from __future__ import annotations

import re

from ..errors import FormatError
from .mpoly import MPolyX, xnames
from .ratzeta import RatZeta

_TOKEN = re.compile(r"\s*(?:(\d+)|(z)|x(\d+)|(.))")


def _tokens(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormatError(f"cannot tokenise at {text[pos:]!r}")
        num, zvar, xidx, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif zvar is not None:
            out.append(("z", None))
        elif xidx is not None:
            out.append(("x", int(xidx)))
        elif op.strip():
            if op not in "+-*/^()":
                raise FormatError(f"unexpected character {op!r}")
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, names):
        self.toks = tokens
        self.i = 0
        self.names = names

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise FormatError(f"expected {op!r}, found {tok}")
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            val = val * rhs if op == "*" else _div(val, rhs)
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise FormatError("exponent must be a non-negative integer")
            return base**e
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return _lift(RatZeta(val), self.names)
        if kind == "z":
            return _lift(RatZeta.z(), self.names)
        if kind == "x":
            if self.names is None or not 1 <= val <= len(self.names):
                raise FormatError(f"x{val} outside the declared variables")
            return MPolyX.var(self.names, val - 1)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.take(")")
            return inner
        raise FormatError(f"unexpected token {(kind, val)}")


def _lift(value: RatZeta, names):
    return value if names is None else MPolyX.const(names, value)


def _div(a, b):
    if isinstance(b, MPolyX):
        if b.is_constant():
            return a / b.constant_value()
        return a / b
    return a / b


def parse(text: str, nvars: int | None = None):
    """Parse to a RatZeta (``nvars`` None) or an MPolyX in x1..x{nvars}."""
    toks = _tokens(text)
    if nvars is None and any(k == "x" for k, _ in toks):
        nvars = max(v for k, v in toks if k == "x")
    names = xnames(nvars) if nvars is not None else None
    p = _Parser(toks, names)
    val = p.expr()
    if p.i != len(toks):
        raise FormatError(f"trailing input after token {p.i}")
    return val


def parse_ratzeta(text: str) -> RatZeta:
    val = parse(text)
    if isinstance(val, MPolyX):
        raise FormatError("expected a function of z only")
    return val
