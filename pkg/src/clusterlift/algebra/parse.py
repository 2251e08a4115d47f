"""Parser for rational expressions in named variables.

Grammar (whitespace ignored)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("-" | "+") unary | power
    power   := primary ("^" exponent)?
    exponent:= ["-"] INT | "(" ["-"] INT ")"
    primary := INT | IDENT | "(" expr ")"

Identifiers may contain primes, so ``X1'`` is a single variable.  The
unicode minus sign is accepted wherever ``-`` is.
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping

from clusterlift.algebra.rational import RationalFunction, as_rf
from clusterlift.errors import DivisionByZero, ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\S))")


def _tokens(text: str) -> Iterator[tuple[str, str, int]]:
    text = text.replace("−", "-")
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            yield ("int", num, start)
        elif ident is not None:
            yield ("ident", ident, start)
        else:
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r} at position {start}")
            yield ("sym", sym, start)
        pos = m.end()
    yield ("end", "", len(text))


class _Parser:
    def __init__(self, text: str, env: Mapping[str, RationalFunction] | None):
        self.toks = list(_tokens(text))
        self.i = 0
        self.env = env

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, sym: str) -> None:
        kind, val, pos = self.take()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r} at position {pos}, found {val or 'end of input'!r}")

    def at(self, *syms: str) -> bool:
        kind, val, _ = self.peek()
        return kind == "sym" and val in syms

    def expr(self) -> RationalFunction:
        acc = self.term()
        while self.at("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RationalFunction:
        acc = self.unary()
        while self.at("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise DivisionByZero("division by zero in expression")
                acc = acc / rhs
        kind, val, pos = self.peek()
        if kind in ("int", "ident") or (kind == "sym" and val == "("):
            raise ParseError(f"implicit multiplication at position {pos}; use '*'")
        return acc

    def unary(self) -> RationalFunction:
        if self.at("-"):
            self.take()
            return -self.unary()
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def exponent(self) -> int:
        paren = self.at("(")
        if paren:
            self.take()
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected an integer exponent at position {pos}")
        if paren:
            self.expect(")")
        return sign * int(val)

    def power(self) -> RationalFunction:
        base = self.primary()
        if self.at("^"):
            self.take()
            e = self.exponent()
            if e < 0 and base.is_zero():
                raise DivisionByZero("negative power of zero")
            return base**e
        return base

    def primary(self) -> RationalFunction:
        kind, val, pos = self.take()
        if kind == "int":
            return RationalFunction.constant(int(val))
        if kind == "ident":
            if self.env is not None:
                if val not in self.env:
                    raise ParseError(f"unknown variable {val!r} at position {pos}")
                return self.env[val]
            return RationalFunction.variable(val)
        if kind == "sym" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r} at position {pos}")


def parse_expression(text: str, env: Mapping[str, object] | None = None) -> RationalFunction:
    """Parse ``text`` into a reduced rational function.

    When ``env`` is given, identifiers are looked up there instead of
    becoming free variables, and unknown names raise :class:`ParseError`.
    """
    if not isinstance(text, str):
        raise ParseError("expression must be a string")
    envr = None if env is None else {k: as_rf(v) for k, v in env.items()}
    p = _Parser(text, envr)
    if p.peek()[0] == "end":
        raise ParseError("empty expression")
    out = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r} at position {pos}")
    return out
