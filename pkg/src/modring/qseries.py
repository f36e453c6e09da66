"""Truncated power series in q with exact rational coefficients.

A :class:`QExpansion` of precision ``P`` is known modulo ``q^P``. Internally
the coefficients are kept as integer numerators over one positive common
denominator, which keeps products cheap; the public view is a tuple of
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "DivisionByZero",
    "InsufficientPrecision",
    "NotDivisible",
    "QExpansion",
    "rescale",
]


class DivisionByZero(ZeroDivisionError):
    """Divisor vanishes to its full precision."""


class NotDivisible(ArithmeticError):
    """Numerator has smaller valuation than the divisor."""


class InsufficientPrecision(ValueError):
    pass


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


# Kronecker substitution: pack the coefficient lists into big integers with a
# fixed digit width, multiply once, unpack signed digits.
_KRONECKER_MIN = 24


def _pack(vals: Sequence[int], width: int) -> int:
    pos = b"".join(max(v, 0).to_bytes(width, "little") for v in vals)
    neg = b"".join(max(-v, 0).to_bytes(width, "little") for v in vals)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _mul_ints(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two integer polynomials."""
    a = a[:n]
    b = b[:n]
    if not a or not b:
        return [0] * n
    if min(len(a), len(b)) < _KRONECKER_MIN:
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b[: n - i]):
                    out[i + j] += x * y
        return out
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    if bound == 0:
        return [0] * n
    width = (bound.bit_length() + 2 + 7) // 8
    prod = _pack(a, width) * _pack(b, width)
    m = len(a) + len(b) - 1
    half = 1 << (8 * width - 1)
    offset = int.from_bytes(half.to_bytes(width, "little") * m, "little")
    raw = (prod + offset).to_bytes(width * m, "little")
    out = [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(min(m, n))
    ]
    out.extend([0] * (n - len(out)))
    return out


class QExpansion:
    """Exact truncated q-series; immutable."""

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable = (), precision: int | None = None):
        fr = [_to_fraction(c) for c in coeffs]
        if precision is None:
            precision = len(fr)
        if precision < 1:
            raise ValueError("precision must be positive")
        fr = fr[:precision] + [Fraction(0)] * (precision - len(fr))
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        self._set([c.numerator * (den // c.denominator) for c in fr], den)

    def _set(self, num: list[int], den: int) -> None:
        g = den
        for x in num:
            if g == 1:
                break
            g = gcd(g, x)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self._num = tuple(num)
        self._den = den

    @classmethod
    def _raw(cls, num: list[int], den: int = 1) -> "QExpansion":
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def from_ints(cls, coeffs: Iterable[int], den: int = 1) -> "QExpansion":
        """Series with coefficients ``coeffs[i] / den`` (no validation)."""
        num = list(coeffs)
        if not num:
            raise ValueError("precision must be positive")
        return cls._raw(num, den)

    @classmethod
    def constant(cls, c, precision: int) -> "QExpansion":
        return cls([c], precision)

    @classmethod
    def monomial(cls, n: int, precision: int, c=1) -> "QExpansion":
        coeffs = [0] * precision
        if n < precision:
            coeffs[n] = c
        return cls(coeffs, precision)

    @classmethod
    def zero(cls, precision: int) -> "QExpansion":
        return cls._raw([0] * precision, 1)

    # -- views -------------------------------------------------------------

    @property
    def precision(self) -> int:
        return len(self._num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(x, d) for x in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        """Least common denominator of all stored coefficients."""
        return self._den

    def __len__(self) -> int:
        return len(self._num)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self._num[i], self._den)

    def __iter__(self):
        return iter(self.coeffs)

    def is_integral(self) -> bool:
        return self._den == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, QExpansion):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def truncate(self, precision: int) -> "QExpansion":
        if precision > self.precision:
            raise InsufficientPrecision(
                f"cannot raise precision from {self.precision} to {precision}"
            )
        if precision == self.precision:
            return self
        return QExpansion._raw(list(self._num[:precision]), self._den)

    def agrees_with(self, other: "QExpansion") -> bool:
        """Equal on the precision both series share."""
        n = min(self.precision, other.precision)
        return self.truncate(n) == other.truncate(n)

    # -- ring structure ------------------------------------------------------

    def _coerce(self, other) -> "QExpansion":
        if isinstance(other, QExpansion):
            return other
        return QExpansion.constant(_to_fraction(other), self.precision)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.precision, other.precision)
        d = _lcm(self._den, other._den)
        sa, sb = d // self._den, d // other._den
        return QExpansion._raw(
            [x * sa + y * sb for x, y in zip(self._num[:n], other._num[:n])], d
        )

    __radd__ = __add__

    def __neg__(self):
        return QExpansion._raw([-x for x in self._num], self._den)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QExpansion):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        n = min(self.precision, other.precision)
        return QExpansion._raw(
            _mul_ints(self._num, other._num, n), self._den * other._den
        )

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = QExpansion.constant(1, self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "QExpansion":
        c = _to_fraction(c)
        return QExpansion._raw(
            [x * c.numerator for x in self._num], self._den * c.denominator
        )

    def __truediv__(self, other):
        if isinstance(other, QExpansion):
            return self.divide(other)
        c = _to_fraction(other)
        if c == 0:
            raise DivisionByZero("division by the scalar 0")
        return self.scale(1 / c)

    def valuation(self) -> int | None:
        """Index of the first non-zero coefficient, ``None`` if zero to precision."""
        for i, x in enumerate(self._num):
            if x:
                return i
        return None

    def is_zero_to(self, order: int) -> bool:
        if order > self.precision:
            raise InsufficientPrecision(
                f"order {order} exceeds precision {self.precision}"
            )
        return not any(self._num[:order])

    def divide(self, g: "QExpansion") -> "QExpansion":
        """The series ``u`` with ``u * g == self``; loses ``valuation(g)`` terms."""
        v = g.valuation()
        if v is None:
            raise DivisionByZero("divisor is zero to its full precision")
        n = min(self.precision, g.precision) - v
        if n < 1:
            raise InsufficientPrecision("no precision left after division")
        F = self._num
        if any(F[:v]):
            raise NotDivisible(
                f"numerator valuation {self.valuation()} below divisor valuation {v}"
            )
        G = g._num[v:]
        lead = G[0]
        u: list = []
        if abs(lead) == 1:
            for i in range(n):
                acc = F[v + i]
                for j in range(1, min(i, len(G) - 1) + 1):
                    acc -= G[j] * u[i - j]
                u.append(acc * lead)
            return QExpansion._raw(u, self._den).scale(Fraction(g._den))
        for i in range(n):
            acc = Fraction(F[v + i])
            for j in range(1, min(i, len(G) - 1) + 1):
                acc -= G[j] * u[i - j]
            u.append(acc / lead)
        return QExpansion(u, n).scale(Fraction(g._den, self._den))

    def rescale(self, h: int) -> "QExpansion":
        """Substitute ``q -> q^h``."""
        if h < 1:
            raise ValueError("rescale factor must be positive")
        if h == 1:
            return self
        out = [0] * (h * (self.precision - 1) + 1)
        out[::h] = self._num
        return QExpansion._raw(out, self._den)

    # -- presentation --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
            "precision": self.precision,
        }

    @classmethod
    def from_json(cls, data: dict) -> "QExpansion":
        return cls([Fraction(s) for s in data["coeffs"]], data["precision"])

    def __repr__(self) -> str:
        return f"QExpansion({self}, precision={self.precision})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            num = str(mag) if (i == 0 or mag != 1) else ""
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            parts.append((sign, num + mono))
        tail = f"O(q^{self.precision})"
        if not parts:
            return tail
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return f"{text} + {tail}"


def rescale(f: QExpansion, h: int) -> QExpansion:
    return f.rescale(h)
