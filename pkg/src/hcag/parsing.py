"""Recursive-descent parser for polynomial text.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | IDENT | '(' expr ')'

Identifiers are ``x``, ``y`` and the declared parameter names.  Juxtaposition
is never multiplication: ``2x`` and ``(t+1)x`` are syntax errors.  The
divisor of ``/`` must be free of x and y.
"""
from __future__ import annotations

import re

from .coeff import FieldElem, ParamPoly
from .errors import DivisionByZero, ParseError, UnknownSymbol
from .poly import BiPoly, UPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            out.append(("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("IDENT", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            out.append((ch, ch, m.start(3)))
        pos = m.end()
    out.append(("EOF", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, params):
        self.text = text
        self.params = tuple(params)
        for p in self.params:
            if p in ("x", "y"):
                raise ValueError("x and y are reserved curve variables")
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "EOF":
            raise self.error("empty expression")
        val = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise self.error(f"expected operator, found {tok[1]!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op[0] == "*":
                val = val * rhs
            else:
                if rhs.deg_y() > 0 or rhs.deg_x() > 0:
                    raise ParseError("divisor must not contain x or y", self.text, op[2])
                if rhs.is_zero():
                    raise DivisionByZero(f"division by zero at position {op[2]}")
                c = rhs.coefficient(0, 0).inv()
                val = val.scale(c)
        return val

    def unary(self):
        if self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            val = self.unary()
            return -val if op == "-" else val
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "INT":
                raise self.error("exponent must be a nonnegative integer literal", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind = tok[0]
        if kind == "INT":
            return BiPoly.constant(int(tok[1]))
        if kind == "IDENT":
            name = tok[1]
            if name == "x":
                return BiPoly.x()
            if name == "y":
                return BiPoly.y()
            if name in self.params:
                return BiPoly.constant(FieldElem.param(name, self.params))
            raise UnknownSymbol(f"unknown symbol {name!r}", self.text, tok[2])
        if kind == "(":
            val = self.expr()
            close = self.take()
            if close[0] != ")":
                raise self.error("expected ')'", close)
            return val
        if kind == "EOF":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok[1]!r}", tok)


def _embed(p, params):
    """Give every coefficient the full declared parameter tuple."""
    params = tuple(params)
    if not params:
        return p
    out = {}
    for m, c in p.terms.items():
        vars = params + tuple(v for v in c.vars if v not in params)
        out[m] = FieldElem._raw(c.num.with_vars(vars), c.den.with_vars(vars))
    return BiPoly._make(out)


def parse_poly(text, params=()):
    """Parse ``text`` into a BiPoly over Q(params)."""
    return _embed(_Parser(text, params).parse(), params)


def parse_upoly(text, params=()):
    p = parse_poly(text, params)
    if p.deg_y() > 0:
        raise ParseError("expected a polynomial in x only", text, 0)
    return p.as_upoly()


def parse_field(text, params=()):
    """Parse a parameter expression (no x, y) into a FieldElem."""
    p = parse_poly(text, params)
    if p.deg_x() > 0 or p.deg_y() > 0:
        raise ParseError("expected an expression free of x and y", text, 0)
    c = p.coefficient(0, 0)
    if params and not c.vars:
        c = FieldElem._raw(ParamPoly.constant(c.num.constant_value() if c else 0, params),
                           ParamPoly.constant(1, params))
    return c


__all__ = ["parse_poly", "parse_upoly", "parse_field", "UPoly"]
