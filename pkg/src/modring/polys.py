"""Polynomials in named generators with exact rational coefficients.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, so two
polynomials over different generator sets combine without bookkeeping; use
:meth:`WeightedPoly.exponent_vector` to view a monomial against an ordered
generator list.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .expr import Expr, parse

Monomial = tuple[tuple[str, int], ...]

__all__ = ["Monomial", "WeightedPoly", "monomial_from_exponents"]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


def monomial_from_exponents(gens: Sequence[str], exps: Sequence[int]) -> Monomial:
    return tuple(sorted((g, e) for g, e in zip(gens, exps) if e))


class WeightedPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if c:
                self.terms[m] = Fraction(c)

    @classmethod
    def const(cls, c) -> "WeightedPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def gen(cls, name: str) -> "WeightedPoly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def from_expr(cls, e: Expr) -> "WeightedPoly":
        """Expand an expression; only division by constants is allowed."""
        op, a = e.op, e.args
        if op == "name":
            return cls.gen(a[0])
        if op == "num":
            return cls.const(a[0])
        if op == "neg":
            return -cls.from_expr(a[0])
        if op == "add":
            return cls.from_expr(a[0]) + cls.from_expr(a[1])
        if op == "sub":
            return cls.from_expr(a[0]) - cls.from_expr(a[1])
        if op == "mul":
            return cls.from_expr(a[0]) * cls.from_expr(a[1])
        if op == "pow":
            return cls.from_expr(a[0]) ** a[1]
        if op == "div":
            if not a[1].is_constant():
                raise ValueError(f"not a polynomial (division by {a[1]})")
            return cls.from_expr(a[0]) * (1 / a[1].constant_value())
        raise ValueError(f"cannot expand {op!r} into a polynomial")

    @classmethod
    def parse(cls, text: str) -> "WeightedPoly":
        return cls.from_expr(parse(text))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return WeightedPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, WeightedPoly):
            c = Fraction(other)
            return WeightedPoly({m: c * v for m, v in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return WeightedPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = WeightedPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, WeightedPoly):
            try:
                other = _lift(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure -----------------------------------------------------------

    def generators(self) -> list[str]:
        return sorted({name for m in self.terms for name, _ in m})

    def substitute(self, mapping: Mapping[str, "WeightedPoly"]) -> "WeightedPoly":
        out = WeightedPoly()
        for m, c in self.terms.items():
            term = WeightedPoly.const(c)
            for name, e in m:
                term = term * (mapping[name] ** e if name in mapping
                               else WeightedPoly({((name, e),): 1}))
            out = out + term
        return out

    def degrees(self, weight_of: Callable[[str], int]) -> set[int]:
        return {sum(weight_of(n) * e for n, e in m) for m in self.terms}

    def weighted_degree(self, weight_of: Callable[[str], int]) -> int:
        degs = self.degrees(weight_of)
        if len(degs) != 1:
            raise ValueError(f"polynomial is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self, weight_of: Callable[[str], int]) -> bool:
        return len(self.degrees(weight_of)) <= 1

    def exponent_vector(self, m: Monomial, gens: Sequence[str]) -> tuple[int, ...]:
        d = dict(m)
        extra = set(d) - set(gens)
        if extra:
            raise KeyError(f"generators {sorted(extra)} not in {list(gens)}")
        return tuple(d.get(g, 0) for g in gens)

    def by_exponents(self, gens: Sequence[str]) -> dict[tuple[int, ...], Fraction]:
        return {self.exponent_vector(m, gens): c for m, c in self.terms.items()}

    def evaluate(self, value_of: Callable[[str], object], one=1):
        """Substitute values (e.g. q-expansions) for the generators."""
        powers: dict[tuple[str, int], object] = {}

        def power(name, e):
            key = (name, e)
            if key not in powers:
                base = value_of(name)
                powers[key] = base if e == 1 else power(name, e - 1) * base
            return powers[key]

        total = None
        for m, c in sorted(self.terms.items()):
            term = None
            for name, e in m:
                p = power(name, e)
                term = p if term is None else term * p
            term = c * one if term is None else term * c
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda kv: kv[0]):
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _lift(x) -> WeightedPoly:
    if isinstance(x, WeightedPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return WeightedPoly.const(x)
    raise TypeError(f"cannot combine WeightedPoly with {type(x).__name__}")


def product(polys: Iterable[WeightedPoly]) -> WeightedPoly:
    out = WeightedPoly.const(1)
    for p in polys:
        out = out * p
    return out
