"""Named modular forms and their exact q-expansions.

Eisenstein series, the weight-2 combinations ``C<N>`` and the character
series are generated straight from divisor sums. Every other entry is an
expression over earlier entries and is evaluated as a tree. Appending
``^(h)`` to any name gives the form in ``q^h``.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from .arith import RHO3, RHO4, RHO5, bernoulli
from .expr import Expr, parse, split_rescale
from .qseries import DivisionByZero, QExpansion

__all__ = [
    "Catalog",
    "FormDescriptor",
    "UnknownForm",
    "default_catalog",
    "descriptor",
    "resolve",
]


class UnknownForm(KeyError):
    pass


@dataclass(frozen=True)
class FormDescriptor:
    name: str
    level: int
    weight: int
    definition: Expr | None
    formula: str

    @property
    def is_primitive(self) -> bool:
        """Generated directly from a coefficient formula."""
        return self.formula.startswith("direct:")


# (name, level, weight, definition)
DEFINITIONS: list[tuple[str, int, int, str]] = [
    ("Delta", 1, 12, "(E4^3 - E6^2)/1728"),
    ("alpha2", 2, 4, "(E4 - E4^(2))/240"),
    ("alpha3", 3, 4, "(E4 - E4^(3))/240"),
    ("alpha5", 5, 4, "(E4 - E4^(5))/240"),
    ("alpha7", 7, 4, "(E4 - E4^(7))/240"),
    ("alpha4", 4, 2, "(C2 - C4)/16"),
    ("alpha6", 6, 2, "(C2 - C3)/12"),
    ("beta6", 6, 2, "(C3^(2) - C2^(3))/12"),
    ("beta9", 9, 2, "((C3 - C9)/9 - E_rho3)/6"),
    ("gamma16", 16, 2, "(alpha4 - E_rho4)/8"),
    ("eps18", 18, 2, "(beta9 - E_rho3^(2) - 3*beta9^(2))/2 + beta6^(3)"),
    ("beta5", 5, 4, "(-C5^2 + 12*alpha5 + E4^(5))/36"),
    ("alpha10", 10, 2, "(C2 - 4*C5 + C10)/8"),
    ("beta10", 10, 2, "(C5^(2) - C2^(5))/6"),
    ("zeta10", 10, 4, "(beta10^2 - beta5^(2))/4"),
    ("gamma25", 25, 2, "(-E_rho5 + E_r5 - 3*E_i5)/10"),
    ("delta25", 25, 2, "(C5 - C25 + 5*E_rho5 - 10*E_r5)/100"),
    ("iota25", 25, 4, "alpha5^(5) + (-E_r5 + gamma25 - 2*delta25)*delta25 - beta5^(5)"),
    ("beta3", 3, 6, "((E6^(3) - E6)/504 - C3*alpha3)/12"),
    ("beta7", 7, 4, "(-C7^2 + 8*alpha7 + E4^(7))/32"),
    ("gamma7", 7, 6,
     "(29/2*(C7*E4^(7) - E6^(7)) + 17/504*(E6^(7) - E6)"
     " - 75*C7*alpha7 + 240*C7*beta7)/360"),
    ("delta7", 7, 6,
     "(7/2*(C7*E4^(7) - E6^(7)) + 1/504*(E6^(7) - E6)"
     " - 15*C7*alpha7 + 120*C7*beta7)/360"),
    ("gamma12", 12, 2, "alpha4^(3) - beta6^(2)"),
    ("alpha9", 9, 2, "E_rho3 + 9*beta9"),
    ("u10", 10, 2, "(-2*C2 + 5*C5)/3"),
    ("eps10", 10, 4, "alpha2^(5) - 5*zeta10"),
    ("u18", 18, 2, "C9^(2) - 3*beta6"),
    # named for its use at level 18, but alpha6 + 3*beta6 already lives in M_2(6);
    # declaring 6 keeps gamma18 = alpha18^(3) at level 18
    ("alpha18", 6, 2, "alpha6 + 3*beta6"),
    ("gamma18", 18, 2, "alpha18^(3)"),
    ("delta18", 18, 2, "beta9^(2) - eps18 + 2*beta6^(3)"),
    ("u25", 25, 2, "C25 - 5*E_r5 - 25*delta25"),
    ("alpha25", 25, 2, "E_rho5 + 5*gamma25"),
]

_CHAR_SERIES = {"E_rho3": (RHO3, 9), "E_rho4": (RHO4, 16), "E_rho5": (RHO5, 25)}
_EISENSTEIN = re.compile(r"^E(\d+)$")
_WEIGHT_TWO = re.compile(r"^C(\d+)$")


def _divisor_sums(n_max: int, f: Callable[[int], int]) -> list[int]:
    """``out[n] = sum_{d | n} f(d)`` for ``0 < n < n_max`` (``out[0] = 0``)."""
    out = [0] * n_max
    for d in range(1, n_max):
        fd = f(d)
        if fd:
            for m in range(d, n_max, d):
                out[m] += fd
    return out


def eisenstein_series(k: int, precision: int) -> QExpansion:
    c = -Fraction(2 * k) / bernoulli(k)
    s = _divisor_sums(precision, lambda d: d ** (k - 1))
    return QExpansion([1] + [c * s[n] for n in range(1, precision)], precision)


def weight_two_series(N: int, precision: int) -> QExpansion:
    g = gcd(N - 1, 24)
    t = _divisor_sums(precision, lambda d: d if d % N else 0)
    return QExpansion(
        [Fraction(N - 1, g)] + [Fraction(24 * t[n], g) for n in range(1, precision)],
        precision,
    )


def character_series(chi, precision: int) -> QExpansion:
    # sigma of chi^2: chi is real, so chi^2 is the principal character.
    s = _divisor_sums(precision, lambda d: d if chi(d) else 0)
    return QExpansion([0] + [s[n] * chi(n) for n in range(1, precision)], precision)


def _quintic_parts(precision: int) -> tuple[QExpansion, QExpansion]:
    s = _divisor_sums(precision, lambda d: RHO5(d) * d)
    real = [0] * precision
    imag = [0] * precision
    for n in range(1, precision):
        r = n % 5
        if r == 1:
            real[n] = s[n]
        elif r == 4:
            real[n] = -s[n]
        elif r == 2:
            imag[n] = -s[n]
        elif r == 3:
            imag[n] = s[n]
    return QExpansion(real, precision), QExpansion(imag, precision)


class Catalog:
    """Resolves catalogue names to q-expansions; thread-safe memoization."""

    def __init__(self):
        self._defs = {
            name: FormDescriptor(name, level, weight, parse(text), text)
            for name, level, weight, text in DEFINITIONS
        }
        self._cache: dict[str, QExpansion] = {}
        self._lock = threading.RLock()

    def names(self) -> list[str]:
        base = ["E2", "E4", "E6", "E8"]
        base += [f"C{N}" for N in (2, 3, 4, 5, 6, 7, 9, 10, 12, 25)]
        base += list(_CHAR_SERIES) + ["E_r5", "E_i5"]
        return base + list(self._defs)

    def __contains__(self, name: str) -> bool:
        try:
            self.descriptor(name)
        except UnknownForm:
            return False
        return True

    def descriptor(self, name: str) -> FormDescriptor:
        base, h = split_rescale(name)
        if h > 1:
            d = self.descriptor(base)
            return FormDescriptor(
                name, d.level * h, d.weight,
                Expr("rescale", (Expr.name(base), h)), f"{base}(q^{h})",
            )
        if name in self._defs:
            return self._defs[name]
        m = _EISENSTEIN.match(name)
        if m and int(m[1]) >= 2 and int(m[1]) % 2 == 0:
            k = int(m[1])
            return FormDescriptor(name, 1, k, None, f"direct: 1 - (2k/B_k) sum sigma_{k - 1}(n) q^n")
        m = _WEIGHT_TWO.match(name)
        if m and int(m[1]) >= 2:
            N = int(m[1])
            g = gcd(N - 1, 24)
            text = f"({N}*E2^({N}) - E2)/{g}"
            return FormDescriptor(name, N, 2, parse(text), "direct: " + text)
        if name in _CHAR_SERIES:
            chi, level = _CHAR_SERIES[name]
            return FormDescriptor(name, level, 2, None,
                                  f"direct: sum sigma_(chi^2)(n) chi(n) q^n, chi = {chi.name}")
        if name in ("E_r5", "E_i5"):
            return FormDescriptor(name, 25, 2, None, "direct: real/imaginary part of E_chi5")
        raise UnknownForm(name)

    def weight(self, name: str) -> int:
        return self.descriptor(name).weight

    def level(self, name: str) -> int:
        return self.descriptor(name).level

    # -- resolution ----------------------------------------------------------

    def resolve(self, name: str, precision: int) -> QExpansion:
        if precision < 1:
            raise ValueError("precision must be positive")
        with self._lock:
            cached = self._cache.get(name)
            if cached is not None and cached.precision >= precision:
                return cached.truncate(precision)
            f = self._compute(name, precision)
            self._cache[name] = f
            return f

    def _compute(self, name: str, P: int) -> QExpansion:
        d = self.descriptor(name)
        base, h = split_rescale(name)
        if h > 1:
            inner = self.resolve(base, -(-(P - 1) // h) + 1)
            return inner.rescale(h).truncate(P)
        m = _EISENSTEIN.match(name)
        if m:
            return eisenstein_series(int(m[1]), P)
        m = _WEIGHT_TWO.match(name)
        if m:
            return weight_two_series(int(m[1]), P)
        if name in _CHAR_SERIES:
            return character_series(_CHAR_SERIES[name][0], P)
        if name in ("E_r5", "E_i5"):
            real, imag = _quintic_parts(P)
            return real if name == "E_r5" else imag
        return self.evaluate(d.definition, P)

    def evaluate(self, e: Expr | str, precision: int) -> QExpansion:
        """Evaluate an expression to exactly ``precision`` terms."""
        if isinstance(e, str):
            e = parse(e)
        P = precision
        op, a = e.op, e.args
        if op == "name":
            return self.resolve(a[0], P)
        if op == "num":
            return QExpansion.constant(a[0], P)
        if op == "neg":
            return -self.evaluate(a[0], P)
        if op == "add":
            return self.evaluate(a[0], P) + self.evaluate(a[1], P)
        if op == "sub":
            return self.evaluate(a[0], P) - self.evaluate(a[1], P)
        if op == "mul":
            if a[0].is_constant():
                return self.evaluate(a[1], P).scale(a[0].constant_value())
            if a[1].is_constant():
                return self.evaluate(a[0], P).scale(a[1].constant_value())
            return self.evaluate(a[0], P) * self.evaluate(a[1], P)
        if op == "pow":
            if a[0].is_constant():
                return QExpansion.constant(a[0].constant_value() ** a[1], P)
            return self.evaluate(a[0], P) ** a[1]
        if op == "div":
            if a[1].is_constant():
                return self.evaluate(a[0], P).scale(1 / a[1].constant_value())
            v = self._valuation(a[1], P)
            num = self.evaluate(a[0], P + v)
            den = self.evaluate(a[1], P + v)
            return num.divide(den)
        if op == "rescale":
            h = a[1]
            inner = self.evaluate(a[0], -(-(P - 1) // h) + 1)
            return inner.rescale(h).truncate(P)
        raise ValueError(f"unknown op {op!r}")

    def _valuation(self, e: Expr, P: int) -> int:
        for trial in (P, 2 * P, 4 * P, 8 * P):
            v = self.evaluate(e, trial).valuation()
            if v is not None:
                return v
        raise DivisionByZero(f"{e} vanishes to order {8 * P}")

    def expression_weight(self, e: Expr | str) -> int:
        if isinstance(e, str):
            e = parse(e)
        return e.weight(self.weight)

    def expression_level(self, e: Expr | str) -> int:
        if isinstance(e, str):
            e = parse(e)
        level = 1
        for n in e.names():
            L = self.level(n)
            level = level * L // gcd(level, L)
        return level


default_catalog = Catalog()


def resolve(name: str, precision: int) -> QExpansion:
    return default_catalog.resolve(name, precision)


def descriptor(name: str) -> FormDescriptor:
    return default_catalog.descriptor(name)
