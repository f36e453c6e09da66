"""Hilbert series as sums of ``numerator(t) / prod (1 - t^n)`` atoms.

Everything is integer arithmetic on truncated coefficient lists; two
expressions are compared by expanding both through a common order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence, Union

from .report import Check
from .spaces import LEVELS, UnsupportedLevel, dim

__all__ = [
    "DEFAULT_ORDER",
    "HilbertExpr",
    "Series",
    "dim_series",
    "expand",
    "hilbert_identities",
    "level_shift",
    "rank_one_rule",
    "verify_all",
    "verify_hilbert_identity",
]

DEFAULT_ORDER = 200

Atom = tuple[tuple[tuple[int, int], ...], tuple[int, ...]]


def _poly(num) -> tuple[tuple[int, int], ...]:
    if isinstance(num, int):
        num = {0: num}
    elif not isinstance(num, Mapping):
        num = dict(enumerate(num))
    return tuple(sorted((e, c) for e, c in num.items() if c))


@dataclass(frozen=True)
class HilbertExpr:
    """A finite sum of atoms ``N(t) / prod_i (1 - t^{n_i})``."""

    atoms: tuple[Atom, ...] = ()

    @classmethod
    def atom(cls, numerator=1, denominators: Iterable[int] = ()) -> "HilbertExpr":
        """``numerator`` is an int, a coefficient list, or ``{exponent: coeff}``."""
        dens = tuple(sorted(denominators))
        if any(n <= 0 for n in dens):
            raise ValueError("denominator exponents must be positive")
        return cls(((_poly(numerator), dens),))

    @classmethod
    def free(cls, weights: Iterable[int]) -> "HilbertExpr":
        """Hilbert series of a polynomial ring with generators of these weights."""
        return cls.atom(1, weights)

    def __add__(self, other: "HilbertExpr") -> "HilbertExpr":
        return HilbertExpr(self.atoms + other.atoms)

    def __neg__(self) -> "HilbertExpr":
        return HilbertExpr(tuple((tuple((e, -c) for e, c in n), d) for n, d in self.atoms))

    def __sub__(self, other: "HilbertExpr") -> "HilbertExpr":
        return self + (-other)

    def __mul__(self, other) -> "HilbertExpr":
        if isinstance(other, int):
            return HilbertExpr(tuple((tuple((e, c * other) for e, c in n), d)
                                     for n, d in self.atoms))
        if isinstance(other, HilbertExpr):
            out = []
            for n1, d1 in self.atoms:
                for n2, d2 in other.atoms:
                    prod: dict[int, int] = {}
                    for e1, c1 in n1:
                        for e2, c2 in n2:
                            prod[e1 + e2] = prod.get(e1 + e2, 0) + c1 * c2
                    out.append((_poly(prod), tuple(sorted(d1 + d2))))
            return HilbertExpr(tuple(out))
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, a: int) -> "HilbertExpr":
        """Multiply by ``t^a``."""
        return HilbertExpr(tuple((tuple((e + a, c) for e, c in n), d) for n, d in self.atoms))

    def expand(self, T: int) -> list[int]:
        return expand(self, T)

    def __str__(self):
        parts = []
        for num, dens in self.atoms:
            top = " + ".join(_mono(e, c) for e, c in num) or "0"
            bottom = "".join(f"(1-t^{n})" for n in dens)
            parts.append(f"({top})/{bottom}" if bottom else f"({top})")
        return " + ".join(parts) or "0"


def _mono(e: int, c: int) -> str:
    if e == 0:
        return str(c)
    t = "t" if e == 1 else f"t^{e}"
    return t if c == 1 else f"{c}*{t}"


def expand(h: HilbertExpr, T: int) -> list[int]:
    """Coefficients of ``t^0 .. t^T``."""
    if T < 0:
        raise ValueError("order must be non-negative")
    total = [0] * (T + 1)
    for num, dens in h.atoms:
        s = [0] * (T + 1)
        for e, c in num:
            if e <= T:
                s[e] += c
        # dividing by (1 - t^n) is a running sum with stride n
        for n in dens:
            for i in range(n, T + 1):
                s[i] += s[i - n]
        for i in range(T + 1):
            total[i] += s[i]
    return total


def dim_series(level: int, T: int) -> list[int]:
    """``[dim M_0(N), dim M_1(N), ..., dim M_T(N)]``."""
    if level not in LEVELS:
        raise UnsupportedLevel(f"level {level} is not one of {LEVELS}")
    return [dim(level, k) for k in range(T + 1)]


@dataclass(frozen=True)
class Series:
    """A series given by a coefficient rule, e.g. a dimension formula."""

    name: str
    coefficient: Callable[[int], int]

    def expand(self, T: int) -> list[int]:
        return [self.coefficient(k) for k in range(T + 1)]

    def __str__(self):
        return self.name


def level_series(N: int) -> Series:
    return Series(f"H(M({N}))", lambda k: dim(N, k))


Term = Union[HilbertExpr, Series, int]


def _expand_any(x: Term, T: int) -> list[int]:
    if isinstance(x, int) and not isinstance(x, bool):
        return dim_series(x, T)
    return x.expand(T)


def verify_hilbert_identity(lhs: Term, rhs: Term, T: int = DEFAULT_ORDER,
                            name: str | None = None, level: int = 0) -> Check:
    """Coefficientwise equality through ``t^T``; an int on either side means ``H(M(N))``."""
    a, b = _expand_any(lhs, T), _expand_any(rhs, T)
    bad = next((k for k in range(T + 1) if a[k] != b[k]), None)
    if isinstance(rhs, int) and not level:
        level = rhs
    detail = (f"equal through t^{T}" if bad is None
              else f"t^{bad}: {a[bad]} != {b[bad]}")
    label = name or f"{_label(lhs)} = {_label(rhs)}"
    return Check(label, level, None, bad is None, detail, checked_order=T)


def _label(x: Term) -> str:
    return f"H(M({x}))" if isinstance(x, int) else str(x)


def _even(f: Callable[[int], int]) -> Callable[[int], int]:
    return lambda k: f(k) if k % 2 == 0 else 0


# The displayed chains; each entry is (name, level or 0, [terms]) and
# consecutive terms must agree.
def hilbert_identities() -> list[tuple[str, int, list[Term]]]:
    A = HilbertExpr.atom
    t4_line = Series("sum_(k even) ([k/4] - [k/6]) t^k", _even(lambda k: k // 4 - k // 6))
    t4_delta = Series("sum_(k even) ([(k-4)/12] + 1 - delta_(12Z+6)(k)) t^k",
                      _even(lambda k: (k - 4) // 12 + 1 - (k % 12 == 6)))
    return [
        ("free [2,2]", 4, [A(1, (2, 2)), 4]),
        ("free [2,4]", 2, [A(1, (2, 4)), 2]),
        ("free [2,6]", 0, [A(1, (2, 6)),
                           Series("sum_(k even) ([k/6] + 1) t^k", _even(lambda k: k // 6 + 1))]),
        ("free [4,6] shifted", 1, [
            A({4: 1}, (4, 6)),
            A(1, (2, 4)) - A(1, (2, 6)),
            t4_line,
            t4_delta,
            level_shift(1, 4),
        ]),
        ("level 3", 3, [
            A({0: 1, 4: 1}, (2, 6)),
            Series("sum_(k even) (([k/6] + 1) + ([(k-4)/6] + 1)) t^k",
                   _even(lambda k: (k // 6 + 1) + ((k - 4) // 6 + 1))),
            3,
        ]),
        ("level 5", 5, [A({0: 1, 4: 1}, (2, 4)), A(2, (2, 4)) - A(1, (2,)), 5]),
        ("level 6", 6, [A({0: 1, 2: 1}, (2, 2)), 6]),
        ("level 8", 8, [A({0: 1, 2: 1}, (2, 2)), 8]),
        ("level 9", 9, [A({0: 1, 2: 1}, (2, 2)), 9]),
        ("level 7", 7, [
            A({0: 1, 4: 1}, (2, 4)) + A({6: 2}, (4, 6)),
            A({0: 1, 4: 2, 6: 1}, (2, 6)),
            A({0: 2, 4: 2}, (2, 6)) - A(1, (2,)),
            7,
        ]),
        ("level 10", 10, [
            A({0: 1, 2: 1}, (2, 2)) + A({4: 2}, (2, 4)),
            A({2: 2}, (2, 2)) + A({0: 1, 4: 1}, (2, 4)),
            10,
        ]),
        ("level 12", 12, [A({0: 1, 2: 3}, (2, 2)), 12]),
        ("level 16", 16, [A({0: 1, 2: 3}, (2, 2)), 16]),
        ("level 18", 18, [A({0: 1, 2: 5}, (2, 2)), 18]),
        ("level 25", 25, [A({0: 1, 2: 3}, (2, 2)) + A({4: 2}, (2, 4)), 25]),
    ]


def level_shift(N: int, a: int) -> Series:
    """``H(M(N)) t^a``."""
    return Series(f"H(M({N}))*t^{a}", lambda k: dim(N, k - a) if k >= a else 0)


def rank_one_rule(base_weights: Sequence[int], k: int) -> HilbertExpr:
    """``H(R)(1 + t^k)`` for ``R`` free on ``base_weights``."""
    return HilbertExpr.atom({0: 1, k: 1}, base_weights)


def verify_all(T: int = DEFAULT_ORDER) -> list[Check]:
    out = []
    for name, level, chain in hilbert_identities():
        for i in range(len(chain) - 1):
            label = name if len(chain) == 2 else f"{name} [{i + 1}]"
            out.append(verify_hilbert_identity(chain[i], chain[i + 1], T, label, level))
    return out
