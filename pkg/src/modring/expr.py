"""A small expression language over catalogue names.

Grammar (whitespace ignored)::

    expr    := ['-'|'+'] term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := primary ('^' INT | '^' '(' INT ')')*
    primary := NUMBER | NAME | '(' expr ')'

A level-raising suffix ``^(h)`` substitutes ``q -> q^h``: ``beta5^(2)`` is
``beta5(q^2)`` and ``(C2^2 - E4)^(5)`` rescales the whole bracket. A bare
``^2`` is a power. Relation names such as ``O_18B'``
may end in a prime.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

__all__ = ["Expr", "ParseError", "parse", "split_rescale"]


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Expr:
    """Expression tree node.

    ``op`` is one of ``name``, ``num``, ``add``, ``sub``, ``neg``, ``mul``,
    ``div``, ``pow``, ``rescale``; ``args`` holds children, or the payload
    for leaves (a name string, a Fraction, or an exponent/factor int as the
    last argument of ``pow`` and ``rescale``).
    """

    op: str
    args: tuple

    @staticmethod
    def name(s: str) -> "Expr":
        return Expr("name", (s,))

    @staticmethod
    def num(c) -> "Expr":
        return Expr("num", (Fraction(c),))

    def __add__(self, other):
        return Expr("add", (self, _lift(other)))

    def __radd__(self, other):
        return Expr("add", (_lift(other), self))

    def __sub__(self, other):
        return Expr("sub", (self, _lift(other)))

    def __rsub__(self, other):
        return Expr("sub", (_lift(other), self))

    def __mul__(self, other):
        return Expr("mul", (self, _lift(other)))

    def __rmul__(self, other):
        return Expr("mul", (_lift(other), self))

    def __truediv__(self, other):
        return Expr("div", (self, _lift(other)))

    def __neg__(self):
        return Expr("neg", (self,))

    def __pow__(self, n: int):
        return Expr("pow", (self, n))

    def names(self) -> set[str]:
        if self.op == "name":
            return {self.args[0]}
        if self.op == "num":
            return set()
        out: set[str] = set()
        for a in self.args:
            if isinstance(a, Expr):
                out |= a.names()
        return out

    def is_constant(self) -> bool:
        return not self.names()

    def constant_value(self) -> Fraction:
        """Value of a name-free expression."""
        op, a = self.op, self.args
        if op == "num":
            return a[0]
        if op == "neg":
            return -a[0].constant_value()
        if op == "add":
            return a[0].constant_value() + a[1].constant_value()
        if op == "sub":
            return a[0].constant_value() - a[1].constant_value()
        if op == "mul":
            return a[0].constant_value() * a[1].constant_value()
        if op == "div":
            return a[0].constant_value() / a[1].constant_value()
        if op == "pow":
            return a[0].constant_value() ** a[1]
        raise ValueError(f"not a constant expression: {self}")

    def weight(self, weight_of: Callable[[str], int]) -> int:
        """Weighted degree; raises ValueError when inhomogeneous."""
        op, a = self.op, self.args
        if op == "name":
            return weight_of(a[0])
        if op == "num":
            return 0
        if op == "neg":
            return a[0].weight(weight_of)
        if op in ("add", "sub"):
            w0, w1 = a[0].weight(weight_of), a[1].weight(weight_of)
            if w0 != w1:
                raise ValueError(f"inhomogeneous sum: weights {w0} and {w1} in {self}")
            return w0
        if op == "mul":
            return a[0].weight(weight_of) + a[1].weight(weight_of)
        if op == "div":
            return a[0].weight(weight_of) - a[1].weight(weight_of)
        if op == "pow":
            return a[1] * a[0].weight(weight_of)
        if op == "rescale":
            return a[0].weight(weight_of)
        raise ValueError(f"unknown op {op}")

    def __str__(self) -> str:
        op, a = self.op, self.args
        if op == "name":
            return a[0]
        if op == "num":
            return str(a[0])
        if op == "neg":
            return f"-({a[0]})"
        if op == "pow":
            return f"({a[0]})^{a[1]}"
        if op == "rescale":
            return f"({a[0]})^({a[1]})"
        sym = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[op]
        return f"({a[0]} {sym} {a[1]})"


def _lift(x) -> Expr:
    return x if isinstance(x, Expr) else Expr.num(x)


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+)"
    r"|(?P<name>[A-Za-z][A-Za-z0-9_]*'?(?:\^\(\d+\))?)"
    r"|(?P<op>[-+*/^()])"
    r")"
)

_RESCALED = re.compile(r"^(?P<base>.+)\^\((?P<h>\d+)\)$")


def split_rescale(name: str) -> tuple[str, int]:
    """``'beta5^(2)'`` -> ``('beta5', 2)``; plain names get factor 1."""
    m = _RESCALED.match(name)
    if m:
        return m["base"], int(m["h"])
    return name, 1


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 12]!r}")
        kind = m.lastgroup
        out.append((kind, m[kind]))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self) -> Expr:
        kind, val = self.peek()
        neg = False
        if val in ("+", "-") and kind == "op":
            self.take()
            neg = val == "-"
        node = self.term()
        if neg:
            node = -node
        while True:
            kind, val = self.peek()
            if kind == "op" and val in ("+", "-"):
                self.take()
                rhs = self.term()
                node = node + rhs if val == "+" else node - rhs
            else:
                return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in ("*", "/"):
                self.take()
                rhs = self.factor()
                node = node * rhs if val == "*" else node / rhs
            else:
                return node

    def factor(self) -> Expr:
        node = self.primary()
        while self.peek() == ("op", "^"):
            self.take()
            if self.peek() == ("op", "("):
                self.take()
                k, h = self.take()
                self.take(")")
                if k != "num" or int(h) < 1:
                    raise ParseError(f"rescale factor must be a positive integer in {self.text!r}")
                node = node if int(h) == 1 else Expr("rescale", (node, int(h)))
                continue
            k, n = self.take()
            if k != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            node = node ** int(n)
        return node

    def primary(self) -> Expr:
        kind, val = self.take()
        if kind == "num":
            return Expr.num(int(val))
        if kind == "name":
            return Expr.name(val)
        if val == "(":
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def parse(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return node
