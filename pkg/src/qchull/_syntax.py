"""Tiny recursive-descent parser for integer polynomial expressions.

Expressions are bivariate in the ring variable ``x`` and the field generator
``a``.  The result is a dict mapping ``(exp_x, exp_a)`` to an integer
coefficient; callers reduce it into the concrete field.

Accepted forms include ``x^3+2x+2``, ``2*x^2 - 1``, ``(a^2+1)x^3 + a`` and
``a^2x^8+x+1``.  Whitespace is ignored.
"""

from __future__ import annotations

import re

Terms = dict[tuple[int, int], int]

_TOKEN = re.compile(r"\d+|[xa^+\-*()]")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    compact = "".join(text.split())
    tokens = _TOKEN.findall(compact)
    if "".join(tokens) != compact:
        bad = sorted(set(compact) - set("0123456789xa^+-*()"))
        raise ParseError(f"unexpected character(s) {bad} in {text!r}")
    return tokens


def _add(u: Terms, v: Terms, sign: int = 1) -> Terms:
    out = dict(u)
    for key, c in v.items():
        out[key] = out.get(key, 0) + sign * c
    return {key: c for key, c in out.items() if c}


def _mul(u: Terms, v: Terms) -> Terms:
    out: Terms = {}
    for (ux, ua), uc in u.items():
        for (vx, va), vc in v.items():
            key = (ux + vx, ua + va)
            out[key] = out.get(key, 0) + uc * vc
    return {key: c for key, c in out.items() if c}


def _pow(u: Terms, e: int) -> Terms:
    out: Terms = {(0, 0): 1}
    for _ in range(e):
        out = _mul(out, u)
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r} in {self.text!r}")

    def expr(self) -> Terms:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        acc = _add({}, self.term(), sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            acc = _add(acc, self.term(), sign)
        return acc

    def term(self) -> Terms:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                acc = _mul(acc, self.factor())
            elif tok is not None and (tok.isdigit() or tok in ("x", "a", "(")):
                acc = _mul(acc, self.factor())
            else:
                return acc

    def factor(self) -> Terms:
        tok = self.take()
        if tok.isdigit():
            base: Terms = {(0, 0): int(tok)} if int(tok) else {}
        elif tok == "x":
            base = {(1, 0): 1}
        elif tok == "a":
            base = {(0, 1): 1}
        elif tok == "(":
            base = self.expr()
            self.expect(")")
        else:
            raise ParseError(f"unexpected token {tok!r} in {self.text!r}")
        if self.peek() == "^":
            self.take()
            e = self.take()
            if not e.isdigit():
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}")
            base = _pow(base, int(e))
        return base


def parse_terms(text: str) -> Terms:
    """Parse ``text`` into ``{(exp_x, exp_a): coeff}`` with integer coefficients."""
    parser = _Parser(text)
    if not parser.tokens:
        raise ParseError("empty polynomial string")
    terms = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input {parser.peek()!r} in {text!r}")
    return terms
