"""Scalar number theory used by every q-expansion: divisor sums, Bernoulli
numbers and the real Dirichlet characters of modulus 3, 4 and 5."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt

__all__ = [
    "DirichletCharacter",
    "RHO3",
    "RHO4",
    "RHO5",
    "bernoulli",
    "character",
    "divisors",
    "sigma",
    "sigma_chi",
    "tau",
]


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order (trial division)."""
    if n < 1:
        raise ValueError(f"divisors() needs n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def sigma(k: int, n: int) -> int:
    if k < 0:
        raise ValueError("sigma() needs k >= 0")
    return sum(d**k for d in divisors(n))


def tau(N: int, n: int) -> int:
    """Sum of the divisors of ``n`` that are not multiples of ``N``."""
    if N < 2:
        raise ValueError("tau() needs N >= 2")
    return sum(d for d in divisors(n) if d % N)


@lru_cache(maxsize=None)
def _bernoulli_table(k: int) -> tuple[Fraction, ...]:
    B = [Fraction(1)]
    for m in range(1, k + 1):
        s = sum(comb(m + 1, j) * B[j] for j in range(m))
        B.append(-s / (m + 1))
    return tuple(B)


def bernoulli(k: int) -> Fraction:
    """Even-index Bernoulli number B_k, k >= 2, from the binomial recurrence."""
    if k < 2 or k % 2:
        raise ValueError(f"bernoulli() needs an even k >= 2, got {k}")
    return _bernoulli_table(k)[k]


@dataclass(frozen=True)
class DirichletCharacter:
    """A real character given by its period table ``values[n % modulus]``."""

    name: str
    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.modulus:
            raise ValueError("character table length must equal the modulus")
        for n, v in enumerate(self.values):
            if (v == 0) != (gcd(n, self.modulus) > 1):
                raise ValueError(f"{self.name}: value at {n} inconsistent with gcd")

    def __call__(self, n: int) -> int:
        return self.values[n % self.modulus]


# Legendre-type tables; the only non-trivial real characters at these moduli.
RHO3 = DirichletCharacter("rho3", 3, (0, 1, -1))
RHO4 = DirichletCharacter("rho4", 4, (0, 1, 0, -1))
RHO5 = DirichletCharacter("rho5", 5, (0, 1, -1, -1, 1))

_CHARACTERS = {3: RHO3, 4: RHO4, 5: RHO5}


def character(modulus: int) -> DirichletCharacter:
    try:
        return _CHARACTERS[modulus]
    except KeyError:
        raise ValueError(f"no real character table for modulus {modulus}") from None


def sigma_chi(chi: DirichletCharacter, n: int) -> int:
    return sum(chi(d) * d for d in divisors(n))
