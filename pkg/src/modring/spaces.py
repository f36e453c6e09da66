"""Dimensions of M_k(Gamma0(N)) and the explicit echelon bases.

Each supported level comes with a small tuple of generators; the basis of
weight k is a list of monomials in them whose expansions start at
q^0, q^1, ..., q^(d-1) with leading coefficient 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import Catalog, default_catalog
from .polys import Monomial, WeightedPoly
from .qseries import QExpansion

__all__ = [
    "LEVELS",
    "BasisElement",
    "SpaceKey",
    "UnsupportedLevel",
    "basis",
    "basis_monomials",
    "dim",
    "sturm_cut",
    "verify_echelon",
]

LEVELS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 25)


class UnsupportedLevel(ValueError):
    pass


@dataclass(frozen=True)
class SpaceKey:
    level: int
    weight: int

    def __post_init__(self):
        if self.level not in LEVELS:
            raise UnsupportedLevel(f"level {self.level} is not one of {LEVELS}")
        if self.weight < 0:
            raise ValueError("weight must be non-negative")


def _key(key_or_level, weight=None) -> SpaceKey:
    if isinstance(key_or_level, SpaceKey):
        return key_or_level
    return SpaceKey(key_or_level, weight)


def dim(key: SpaceKey | int, weight: int | None = None) -> int:
    """``dim M_k(N)``; accepts ``dim(SpaceKey(N, k))`` or ``dim(N, k)``."""
    key = _key(key, weight)
    N, k = key.level, key.weight
    if k % 2:
        return 0
    return {
        1: lambda: k // 12 + 1 - (k % 12 == 2),
        2: lambda: k // 4 + 1,
        3: lambda: k // 3 + 1,
        4: lambda: k // 2 + 1,
        5: lambda: 2 * (k // 4) + 1,
        6: lambda: k + 1,
        7: lambda: 2 * (k // 3) + 1,
        8: lambda: k + 1,
        9: lambda: k + 1,
        10: lambda: k + 2 * (k // 4) + 1,
        12: lambda: 2 * k + 1,
        16: lambda: 2 * k + 1,
        18: lambda: 3 * k + 1,
        25: lambda: 2 * k + 2 * (k // 4) + 1,
    }[N]()


def sturm_cut(key: SpaceKey | int, weight: int | None = None) -> int:
    """Order ``d`` such that a form in M_k(N) vanishing to q^d is zero."""
    d = dim(_key(key, weight))
    if d < 1:
        raise ValueError(f"M_{weight}({key}) is zero-dimensional")
    return d


# Generator tuples. Family "pairs": weight-2 chain f0..fs. Family "split":
# weight-2 chain f0..fs and weight-4 chain g1..gt. Family "cubic": f0 of
# weight 2, g1..gs of weight 4, h1..hs of weight 6.
FAMILIES: dict[int, tuple[str, dict[str, tuple[str, ...]]]] = {
    4: ("pairs", {"f": ("C4", "alpha4")}),
    6: ("pairs", {"f": ("C3^(2)", "alpha6", "beta6")}),
    8: ("pairs", {"f": ("C4^(2)", "alpha4", "alpha4^(2)")}),
    9: ("pairs", {"f": ("C3", "E_rho3", "beta9")}),
    12: ("pairs", {"f": ("C3^(2)", "alpha6", "beta6", "alpha4^(3)", "beta6^(2)")}),
    16: ("pairs", {"f": ("C4^(2)", "alpha4", "alpha4^(2)", "gamma16", "alpha4^(4)")}),
    18: ("pairs", {"f": ("C9^(2)", "alpha6", "beta6", "alpha6^(3)", "beta9^(2)",
                         "eps18", "beta6^(3)")}),
    2: ("split", {"f": ("C2",), "g": ("alpha2",)}),
    5: ("split", {"f": ("C5",), "g": ("alpha5", "beta5")}),
    10: ("split", {"f": ("C2", "alpha10", "beta10"), "g": ("alpha2^(5)", "zeta10")}),
    25: ("split", {"f": ("C5", "E_rho5", "E_i5", "gamma25", "delta25"),
                   "g": ("iota25", "beta5^(5)")}),
    3: ("cubic", {"f": ("C3",), "g": ("alpha3",), "h": ("beta3",)}),
    7: ("cubic", {"f": ("C7",), "g": ("alpha7", "beta7"), "h": ("gamma7", "delta7")}),
}


def _mono(*factors: tuple[str, int]) -> Monomial:
    d: dict[str, int] = {}
    for name, e in factors:
        if e:
            d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


def _times(m: Monomial, *factors: tuple[str, int]) -> Monomial:
    return _mono(*m, *factors)


def _level_one(k: int) -> list[Monomial]:
    if k % 12 == 2:
        if k < 14:
            return []
        l, extra = (k - 14) // 12, (("E4", 2), ("E6", 1))
    else:
        l, r = divmod(k, 12)
        extra = {0: (), 4: (("E4", 1),), 6: (("E6", 1),), 8: (("E4", 2),),
                 10: (("E4", 1), ("E6", 1))}[r]
    return [_mono(("E4", 3 * (l - i)), ("Delta", i), *extra) for i in range(l + 1)]


def _pairs(f: tuple[str, ...], l: int) -> list[Monomial]:
    out = [_mono((f[0], l - i), (f[1], i)) for i in range(l + 1)]
    for j in range(1, len(f) - 1):
        out += [_mono((f[j], l - i), (f[j + 1], i)) for i in range(1, l + 1)]
    return out


def _split_4l(f: tuple[str, ...], g: tuple[str, ...], l: int) -> list[Monomial]:
    s = len(f) - 1
    out: list[Monomial] = []
    if s > 0:
        out += [_mono((f[0], 2 * l - i), (f[1], i)) for i in range(2 * l + 1)]
        for j in range(1, s):
            out += [_mono((f[j], 2 * l - i), (f[j + 1], i)) for i in range(1, 2 * l + 1)]
    # f_s^(2l) already closes the f-chain when s > 0
    start = 0 if s == 0 else 1
    out += [_mono((f[s], 2 * (l - i)), (g[0], i)) for i in range(start, l + 1)]
    for j in range(len(g) - 1):
        out += [_mono((g[j], l - i), (g[j + 1], i)) for i in range(1, l + 1)]
    return out


def _cubic_6l(f0: str, g: tuple[str, ...], h: tuple[str, ...], l: int) -> list[Monomial]:
    s = len(g)
    out = [_mono((f0, 3 * l - 2 * i), (g[0], i)) for i in range(l + 1)]
    for j in range(s - 1):
        out += [_mono((f0, l), (g[j], l - i), (g[j + 1], i)) for i in range(1, l + 1)]
    out += [_mono((f0, l - i), (g[-1], l - i), (h[0], i)) for i in range(1, l + 1)]
    for j in range(s - 1):
        out += [_mono((h[j], l - i), (h[j + 1], i)) for i in range(1, l + 1)]
    return out


def basis_monomials(key: SpaceKey | int, weight: int | None = None) -> list[Monomial]:
    """The generator monomials spanning M_k(N), in construction order."""
    key = _key(key, weight)
    N, k = key.level, key.weight
    if k % 2:
        return []
    if N == 1:
        return _level_one(k)
    family, gens = FAMILIES[N]
    if family == "pairs":
        return _pairs(gens["f"], k // 2)
    if family == "split":
        f, g = gens["f"], gens["g"]
        l, r = divmod(k, 4)
        out = _split_4l(f, g, l)
        if r == 2:
            out = [_times(m, (f[0], 1)) for m in out]
            out += [_mono((g[-1], l), (fj, 1)) for fj in f[1:]]
        return out
    f0, g, h = gens["f"][0], gens["g"], gens["h"]
    l, r = divmod(k, 6)
    out = _cubic_6l(f0, g, h, l)
    if r == 2:
        out = [_times(m, (f0, 1)) for m in out]
    elif r == 4:
        out = [_times(m, (f0, 2)) for m in out]
        out += [_mono((h[-1], l), (gj, 1)) for gj in g]
    return out


@dataclass(frozen=True)
class BasisElement:
    monomial: Monomial
    expansion: QExpansion = field(repr=False)
    expected_valuation: int

    @property
    def name(self) -> str:
        return str(WeightedPoly({self.monomial: Fraction(1)}))


class MonomialEvaluator:
    """Expands monomials in catalogue names with a shared power cache."""

    def __init__(self, precision: int, catalog: Catalog = default_catalog):
        self.precision = precision
        self.catalog = catalog
        self._powers: dict[tuple[str, int], QExpansion] = {}

    def power(self, name: str, e: int) -> QExpansion:
        key = (name, e)
        if key not in self._powers:
            if e == 1:
                self._powers[key] = self.catalog.resolve(name, self.precision)
            else:
                half = self.power(name, e // 2)
                sq = half * half
                self._powers[key] = sq * self.power(name, 1) if e % 2 else sq
        return self._powers[key]

    def __call__(self, m: Monomial) -> QExpansion:
        out = QExpansion.constant(1, self.precision)
        for name, e in m:
            out = out * self.power(name, e)
        return out


def basis(key: SpaceKey | int, weight: int | None = None, precision: int | None = None,
          catalog: Catalog = default_catalog,
          evaluator: MonomialEvaluator | None = None) -> list[BasisElement]:
    """Echelon basis of M_k(N), sorted by valuation of the expansion."""
    key = _key(key, weight)
    d = dim(key)
    if precision is None:
        precision = d + 1
    if precision <= d:
        raise ValueError(f"precision {precision} must exceed dim {d}")
    if evaluator is None or evaluator.precision != precision:
        evaluator = MonomialEvaluator(precision, catalog)
    if key.weight == 0:
        return [BasisElement((), QExpansion.constant(1, precision), 0)]
    elems = []
    for m in basis_monomials(key):
        f = evaluator(m)
        v = f.valuation()
        elems.append(BasisElement(m, f, -1 if v is None else v))
    elems.sort(key=lambda b: b.expected_valuation)
    return [BasisElement(b.monomial, b.expansion, i) for i, b in enumerate(elems)]


@dataclass
class EchelonReport:
    level: int
    weight: int
    dim: int
    count: int
    valuations: list[int]
    passed: bool
    offending: str | None = None

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "monomial_count": self.count,
            "valuations": self.valuations,
            "offending": self.offending,
        }


def verify_echelon(key: SpaceKey | int, weight: int | None = None,
                   precision: int | None = None,
                   catalog: Catalog = default_catalog) -> EchelonReport:
    """Check the basis has valuations exactly 0..d-1 with leading coefficient 1."""
    key = _key(key, weight)
    d = dim(key)
    elems = basis(key, precision=precision or d + 1, catalog=catalog)
    vals = [b.expansion.valuation() for b in elems]
    offending = None
    if len(elems) != d:
        offending = f"{len(elems)} monomials for dimension {d}"
    else:
        for i, b in enumerate(elems):
            v = vals[i]
            if v != i:
                offending = f"{b.name} has valuation {v}, expected {i}"
                break
            if b.expansion[v] != 1:
                offending = f"{b.name} has leading coefficient {b.expansion[v]}"
                break
    return EchelonReport(key.level, key.weight, d, len(elems),
                         [-1 if v is None else v for v in vals], offending is None, offending)
