"""Ring presentations: generators, relation ideals and degreewise checks.

For each weight k the evaluation map from the degree-k slice of the
polynomial ring onto M_k(N) is checked to be surjective, and its kernel is
compared with the degree-k slice of the relation ideal.

Two ways of getting the ideal slice dimension are provided:

``exact``
    rank of the matrix of all products ``m * O`` in the monomial basis,
    by fraction-free elimination. Only practical for small slices.
``modular``
    dimension of the quotient ``(R/I)_k`` over F_p, built degree by degree
    from normal forms (see :class:`QuotientTower`). Rank can only drop mod
    p, so this gives a lower bound for the ideal slice over Q. The relations
    vanish, so the kernel is an upper bound; when the two agree the value
    is exact.

The evaluation rank is certified the same way: full column rank mod p
implies full column rank over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .catalog import Catalog, default_catalog
from .hilbert import HilbertExpr
from .linalg import (DEFAULT_PRIME, SECOND_PRIME, ModularEchelon, _matmul_mod, rank,
                     to_residues)
from .polys import monomial_from_exponents
from .relations import IDEAL_GENERATORS, relation, verify_vanishing
from .report import Check
from .spaces import LEVELS, MonomialEvaluator, UnsupportedLevel, dim

__all__ = [
    "PRESENTATIONS",
    "Presentation",
    "PresentationReport",
    "QuotientTower",
    "WeightRecord",
    "complement_hilbert",
    "complement_misprint_check",
    "eval_matrix",
    "ideal_dim",
    "ideal_slice_matrix",
    "monomials",
    "presentation",
    "verify_presentation",
]

DEFAULT_MAX_WEIGHT = 24
EXACT_LIMIT = 60  # largest monomial count handled exactly under method="auto"

# A cone is (free generators, multiplier): the span of multiplier times
# every monomial in the free generators.
Cone = tuple[tuple[str, ...], tuple[str, ...]]


@dataclass(frozen=True)
class Presentation:
    level: int
    generators: tuple[tuple[str, int], ...]
    relation_ideal: tuple[str, ...] = ()
    complement: tuple[Cone, ...] = ()

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.generators)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.generators)

    def weight_of(self, name: str) -> int:
        return dict(self.generators)[name]


def _pres(level, gens, complement, ideal=None) -> Presentation:
    gens = tuple((n, default_catalog.weight(n)) for n in gens)
    ideal = IDEAL_GENERATORS.get(level, ()) if ideal is None else ideal
    return Presentation(level, gens, tuple(ideal), tuple(complement))


def _chain(*names: str, multiplied: Sequence[str | None]) -> list[Cone]:
    """Cones C[n_i, n_(i+1)] * m_i along a chain of generators."""
    return [((a, b), (m,) if m else ()) for (a, b), m in zip(zip(names, names[1:]), multiplied)]


def _rank_one(r: tuple[str, str], y: str) -> list[Cone]:
    """R[Y] = (O) + R + R*Y."""
    return [(r, ()), (r, (y,))]


PRESENTATIONS: dict[int, Presentation] = {
    1: _pres(1, ("E4", "E6"), [(("E4", "E6"), ())]),
    2: _pres(2, ("C2", "alpha2"), [(("C2", "alpha2"), ())]),
    4: _pres(4, ("C2", "alpha4"), [(("C2", "alpha4"), ())]),
    3: _pres(3, ("C3", "alpha3", "beta3"), _rank_one(("C3", "beta3"), "alpha3")),
    5: _pres(5, ("C5", "alpha5", "beta5"), _rank_one(("C5", "beta5"), "alpha5")),
    6: _pres(6, ("C3^(2)", "alpha6", "beta6"), _rank_one(("C3^(2)", "beta6"), "alpha6")),
    8: _pres(8, ("C4^(2)", "alpha4", "alpha4^(2)"),
             _rank_one(("C4^(2)", "alpha4^(2)"), "alpha4")),
    9: _pres(9, ("C3", "alpha9", "beta9"), _rank_one(("C3", "beta9"), "alpha9")),
    7: _pres(7, ("C7", "alpha7", "beta7", "gamma7", "delta7"), [
        (("C7", "beta7"), ()), (("C7", "beta7"), ("alpha7",)),
        (("beta7", "delta7"), ("delta7",)), (("beta7", "delta7"), ("gamma7",)),
    ]),
    10: _pres(10, ("u10", "alpha10", "beta10", "eps10", "zeta10"), [
        (("u10", "alpha10"), ()), (("alpha10", "beta10"), ("beta10",)),
        (("beta10", "zeta10"), ("zeta10",)), (("beta10", "zeta10"), ("eps10",)),
    ]),
    12: _pres(12, ("C3^(2)", "alpha6", "beta6", "gamma12", "beta6^(2)"),
              _chain("C3^(2)", "alpha6", "beta6", "gamma12", "beta6^(2)",
                     multiplied=[None, "beta6", "gamma12", "beta6^(2)"])),
    16: _pres(16, ("C4^(2)", "alpha4", "alpha4^(2)", "gamma16", "alpha4^(4)"),
              _chain("C4^(2)", "alpha4", "alpha4^(2)", "gamma16", "alpha4^(4)",
                     multiplied=[None, "alpha4^(2)", "gamma16", "alpha4^(4)"])),
    18: _pres(18, ("u18", "alpha18", "beta6", "gamma18", "delta18", "eps18", "beta6^(3)"),
              _chain("u18", "alpha18", "beta6", "gamma18", "delta18", "eps18", "beta6^(3)",
                     multiplied=[None, "beta6", "gamma18", "delta18", "eps18", "beta6^(3)"])),
    25: _pres(25, ("u25", "alpha25", "E_i5", "gamma25", "delta25", "iota25", "beta5^(5)"),
              _chain("u25", "alpha25", "E_i5", "gamma25", "delta25",
                     multiplied=[None, "E_i5", "gamma25", "delta25"])
              + [(("delta25", "beta5^(5)"), ("beta5^(5)",)),
                 (("delta25", "beta5^(5)"), ("iota25",))]),
}


# The level-18 complement as printed multiplies each chain cone by its first
# generator; that repeats alpha18 in weight 2 and never reaches beta6^(3).
# The table above multiplies by the second generator, as at level 12.
PRINTED_COMPLEMENT_18: tuple[Cone, ...] = tuple(
    _chain("u18", "alpha18", "beta6", "gamma18", "delta18", "eps18", "beta6^(3)",
           multiplied=[None, "alpha18", "beta6", "gamma18", "delta18", "eps18"]))


def presentation(level: int) -> Presentation:
    try:
        return PRESENTATIONS[level]
    except KeyError:
        raise UnsupportedLevel(f"level {level} is not one of {LEVELS}") from None


# -- monomials -----------------------------------------------------------------

def _exponents(weights: tuple[int, ...], k: int) -> list[tuple[int, ...]]:
    if not weights:
        return [()] if k == 0 else []
    w, rest = weights[0], weights[1:]
    out = []
    for e in range(k // w, -1, -1):
        out += [(e,) + tail for tail in _exponents(rest, k - e * w)]
    return out


@lru_cache(maxsize=None)
def _monomials(weights: tuple[int, ...], k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_exponents(weights, k)) if k >= 0 else ()


def monomials(pres: Presentation, k: int) -> list[tuple[int, ...]]:
    """Exponent vectors of weight ``k``, lexicographically descending."""
    return list(_monomials(pres.weights, k))


@lru_cache(maxsize=None)
def _index_w(weights: tuple[int, ...], k: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(_monomials(weights, k))}


def _index(pres: Presentation, k: int) -> dict[tuple[int, ...], int]:
    return _index_w(pres.weights, k)


def _relation_terms(pres: Presentation, name: str) -> dict[tuple[int, ...], Fraction]:
    return relation(name).expression.by_exponents(pres.names)


def _relation_weight(name: str) -> int:
    return relation(name).weight


# -- exact matrices ------------------------------------------------------------

def eval_matrix(pres: Presentation, k: int, precision: int | None = None,
                catalog: Catalog = default_catalog) -> list[list[Fraction]]:
    """Rows are monomials of weight k, columns the first dim M_k(N) coefficients."""
    d = dim(pres.level, k)
    if precision is None:
        precision = d
    if precision < d:
        raise ValueError(f"precision {precision} is below dim M_{k}({pres.level}) = {d}")
    ev = MonomialEvaluator(max(d, 1), catalog)
    rows = []
    for e in monomials(pres, k):
        f = ev(monomial_from_exponents(pres.names, e))
        rows.append([f[i] for i in range(d)])
    return rows


def ideal_slice_matrix(pres: Presentation, k: int) -> list[list[Fraction]]:
    """Coefficients of every ``m * O`` of weight k in the monomial basis."""
    index = _index(pres, k)
    rows = []
    for name in pres.relation_ideal:
        terms = _relation_terms(pres, name)
        for m in monomials(pres, k - _relation_weight(name)):
            row = [Fraction(0)] * len(index)
            for e, c in terms.items():
                row[index[tuple(a + b for a, b in zip(m, e))]] = c
            rows.append(row)
    return rows


def ideal_dim(pres: Presentation, k: int, method: str = "auto", p: int = DEFAULT_PRIME) -> int:
    """Dimension of the weight-k slice of the relation ideal.

    ``modular`` returns the F_p value, which is a lower bound over Q; see
    :func:`verify_presentation` for how it is certified.
    """
    count = len(_monomials(pres.weights, k))
    if method == "auto":
        method = "exact" if count <= EXACT_LIMIT else "modular"
    if method == "exact":
        rows = ideal_slice_matrix(pres, k)
        return rank(rows) if rows else 0
    if method == "modular":
        return QuotientTower(pres, k, p).ideal_dim(k)
    raise ValueError(f"unknown method {method!r}")


# -- modular quotient tower ---------------------------------------------------------

class QuotientTower:
    """Normal forms for ``R/I`` over F_p, one degree at a time.

    For every weight k keep a matrix ``rho[k]`` mapping each monomial of
    weight k to coordinates of ``(R/I)_k``. A monomial of positive weight is
    ``x_j * mu`` with j its first nonzero exponent, so ``(R/I)_k`` is a
    quotient of the space T spanned by ``x_i * (R/I)_(k - w_i)``. The kernel
    of that quotient is spanned by

    * ``x_i * rho(mu) - rho'(x_i * mu)`` for every i and mu (the different
      ways of writing a monomial must agree), and
    * ``rho'(O)`` for the ideal generators O of weight exactly k;

    products of lower-weight generators are already zero in ``rho`` below k.
    """

    def __init__(self, pres: Presentation, K: int, p: int = DEFAULT_PRIME):
        self.pres = pres
        self.p = p
        self.K = K
        self.rho: dict[int, np.ndarray] = {}
        self._gens_by_weight: dict[int, list[str]] = {}
        for name in pres.relation_ideal:
            self._gens_by_weight.setdefault(_relation_weight(name), []).append(name)
        for k in range(K + 1):
            self._step(k)

    def quotient_dim(self, k: int) -> int:
        return self.rho[k].shape[1]

    def ideal_dim(self, k: int) -> int:
        return self.rho[k].shape[0] - self.rho[k].shape[1]

    def _step(self, k: int) -> None:
        p = self.p
        weights = self.pres.weights
        mons = _monomials(weights, k)
        if k == 0:
            self.rho[0] = np.ones((1, 1), dtype=np.int64)
            return
        if not mons:
            self.rho[k] = np.zeros((0, 0), dtype=np.int64)
            return
        # blocks of T
        offsets, size = {}, 0
        for i, w in enumerate(weights):
            if k - w >= 0 and self.rho[k - w].shape[1]:
                offsets[i] = size
                size += self.rho[k - w].shape[1]
        # rho'(nu) through the first-variable factorization
        lower = {i: _index(self.pres, k - w) for i, w in enumerate(weights) if k - w >= 0}
        Rp = np.zeros((len(mons), size), dtype=np.int64)
        for r, nu in enumerate(mons):
            j = next(i for i, e in enumerate(nu) if e)
            if j not in offsets:
                continue
            mu = nu[:j] + (nu[j] - 1,) + nu[j + 1:]
            q = self.rho[k - weights[j]]
            Rp[r, offsets[j]:offsets[j] + q.shape[1]] = q[lower[j][mu]]
        ech = ModularEchelon(size, p)
        index = _index(self.pres, k)
        for i, off in offsets.items():
            below = _monomials(weights, k - weights[i])
            q = self.rho[k - weights[i]]
            up = [index[mu[:i] + (mu[i] + 1,) + mu[i + 1:]] for mu in below]
            D = -Rp[up]
            D[:, off:off + q.shape[1]] += q
            ech.add_in_chunks(D % p)
        gens = self._gens_by_weight.get(k, [])
        if gens:
            rows = []
            for name in gens:
                terms = _relation_terms(self.pres, name)
                idx = [index[e] for e in terms]
                c = to_residues(list(terms.values()), p)
                rows.append(_matmul_mod(c[None, :], Rp[idx], p)[0])
            ech.add(np.array(rows, dtype=np.int64))
        reduced = ech.reduce(Rp)
        self.rho[k] = reduced[:, ech.free_columns()]

    def spans(self, rows: Sequence[int], k: int) -> bool:
        """Do these monomials (by index) span ``(R/I)_k`` over F_p?"""
        q = self.rho[k]
        ech = ModularEchelon(q.shape[1], self.p)
        if rows:
            ech.add(q[list(rows)])
        return ech.rank == q.shape[1]


# -- modular evaluation -----------------------------------------------------------

def _toeplitz(g: np.ndarray) -> np.ndarray:
    D = len(g)
    T = np.zeros((D, D), dtype=np.int64)
    for a in range(D):
        T[a, a:] = g[:D - a]
    return T


def _modular_expansions(pres: Presentation, K: int, D: int, p: int,
                        catalog: Catalog) -> dict[int, np.ndarray]:
    """Expansions mod p of every monomial of weight <= K, to D coefficients."""
    gens = [_toeplitz(to_residues(catalog.resolve(n, D).coeffs, p)) for n in pres.names]
    out: dict[int, np.ndarray] = {0: np.zeros((1, D), dtype=np.int64)}
    out[0][0, 0] = 1
    for k in range(1, K + 1):
        mons = _monomials(pres.weights, k)
        X = np.zeros((len(mons), D), dtype=np.int64)
        by_j: dict[int, tuple[list[int], list[int]]] = {}
        for r, nu in enumerate(mons):
            j = next(i for i, e in enumerate(nu) if e)
            mu = nu[:j] + (nu[j] - 1,) + nu[j + 1:]
            lst = by_j.setdefault(j, ([], []))
            lst[0].append(r)
            lst[1].append(_index(pres, k - pres.weights[j])[mu])
        for j, (rows, src) in by_j.items():
            X[rows] = _matmul_mod(out[k - pres.weights[j]][src], gens[j], p)
        out[k] = X
    return out


def _rank_mod(X: np.ndarray, p: int) -> int:
    if X.size == 0:
        return 0
    ech = ModularEchelon(X.shape[1], p)
    ech.add_in_chunks(X)
    return ech.rank


# -- verification -----------------------------------------------------------------

@dataclass
class WeightRecord:
    weight: int
    monomial_count: int
    eval_rank: int
    kernel_dim: int
    ideal_dim: int
    space_dim: int
    method: str
    complement_count: int | None = None
    complement_spans: bool | None = None

    @property
    def passed(self) -> bool:
        ok = self.eval_rank == self.space_dim and self.kernel_dim == self.ideal_dim
        if self.complement_spans is not None:
            ok = ok and self.complement_spans and self.complement_count == self.space_dim
        return ok

    def to_dict(self) -> dict:
        d = {
            "weight": self.weight,
            "monomial_count": self.monomial_count,
            "eval_rank": self.eval_rank,
            "kernel_dim": self.kernel_dim,
            "ideal_dim": self.ideal_dim,
            "space_dim": self.space_dim,
            "method": self.method,
            "pass": self.passed,
        }
        if self.complement_spans is not None:
            d["complement_count"] = self.complement_count
            d["complement_spans"] = self.complement_spans
        return d


@dataclass
class PresentationReport:
    level: int
    max_weight: int
    records: list[WeightRecord] = field(default_factory=list)
    generators_vanish: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records) and all(c.passed for c in self.generators_vanish)

    def record(self, k: int) -> WeightRecord:
        return next(r for r in self.records if r.weight == k)

    def checks(self) -> list[Check]:
        out = []
        for r in self.records:
            detail = (f"monomials={r.monomial_count} rank={r.eval_rank} kernel={r.kernel_dim}"
                      f" ideal={r.ideal_dim} dim={r.space_dim} [{r.method}]")
            if r.complement_spans is not None:
                detail += f" complement={r.complement_count}"
                detail += "" if r.complement_spans else " (does not span)"
            out.append(Check(f"presentation M({self.level})", self.level, r.weight,
                             r.passed, detail, extra=r.to_dict()))
        out += [c for c in self.generators_vanish if not c.passed]
        return out


def _complement_rows(pres: Presentation, k: int) -> list[int]:
    index = _index(pres, k)
    pos = {n: i for i, n in enumerate(pres.names)}
    rows = []
    for free, mult in pres.complement:
        base = [0] * len(pres.names)
        for n in mult:
            base[pos[n]] += 1
        wm = sum(pres.weight_of(n) for n in mult)
        ws = tuple(pres.weight_of(n) for n in free)
        for e in _monomials(ws, k - wm):
            v = list(base)
            for n, a in zip(free, e):
                v[pos[n]] += a
            rows.append(index[tuple(v)])
    return rows


def verify_presentation(pres: Presentation | int, K: int = DEFAULT_MAX_WEIGHT,
                        method: str = "auto", catalog: Catalog = default_catalog,
                        check_complement: bool = True) -> PresentationReport:
    """Check surjectivity and kernel = ideal for every even weight up to K."""
    if isinstance(pres, int):
        pres = presentation(pres)
    if K < 0 or K % 2:
        raise ValueError("K must be a non-negative even integer")
    report = PresentationReport(pres.level, K)
    report.generators_vanish = [verify_vanishing(n, catalog=catalog)
                                for n in pres.relation_ideal]
    D = max(dim(pres.level, k) for k in range(0, K + 1, 2))
    towers: dict[int, QuotientTower] = {}
    expansions: dict[int, dict[int, np.ndarray]] = {}

    def tower(p):
        if p not in towers:
            towers[p] = QuotientTower(pres, K, p)
        return towers[p]

    def expansion(p):
        if p not in expansions:
            expansions[p] = _modular_expansions(pres, K, D, p, catalog)
        return expansions[p]

    for k in range(0, K + 1, 2):
        count = len(_monomials(pres.weights, k))
        d = dim(pres.level, k)
        use = method
        if use == "auto":
            use = "exact" if count <= EXACT_LIMIT else "modular"
        comp = _complement_rows(pres, k) if check_complement and pres.complement else None
        if use == "exact":
            M = eval_matrix(pres, k, catalog=catalog)
            r = rank(M) if d else 0
            I = ideal_slice_matrix(pres, k)
            idim = rank(I) if I else 0
            spans = None
            if comp is not None:
                # ideal slice plus complement monomials fill the whole slice
                unit = [[Fraction(int(c == i)) for c in range(count)] for i in comp]
                spans = rank(I + unit) == count if count else True
            label = "exact"
        else:
            r, idim, spans, label = None, None, None, "modular"
            for p in (DEFAULT_PRIME, SECOND_PRIME):
                rk = _rank_mod(expansion(p)[k][:, :d], p) if d else 0
                r = rk if r is None else max(r, rk)
                lb = tower(p).ideal_dim(k)
                idim = lb if idim is None else max(idim, lb)
                if comp is not None and not spans:
                    spans = tower(p).spans(comp, k)
                if r == d and idim == count - r and (comp is None or spans):
                    label = f"modular p={p}"
                    break
            if r != d:
                # not full rank modulo either prime: settle the rank exactly
                r = rank(eval_matrix(pres, k, catalog=catalog))
        report.records.append(WeightRecord(
            k, count, r, count - r, idim, d, label,
            None if comp is None else len(comp), spans))
    return report


def complement_hilbert(pres: Presentation | int | Iterable[Cone],
                       weight_of=None) -> HilbertExpr:
    """Sum over cones of ``t^wt(multiplier) / prod (1 - t^wt(free))``."""
    if isinstance(pres, int):
        pres = presentation(pres)
    if isinstance(pres, Presentation):
        cones, weight_of = pres.complement, pres.weight_of
    else:
        cones = list(pres)
        weight_of = weight_of or default_catalog.weight
    total = HilbertExpr()
    for free, mult in cones:
        shift = sum(weight_of(n) for n in mult)
        total = total + HilbertExpr.atom({shift: 1}, [weight_of(n) for n in free])
    return total


def complement_misprint_check(K: int = 4) -> Check:
    """The printed level-18 complement fails to span; the corrected one spans."""
    pres = PRESENTATIONS[18]
    printed = Presentation(18, pres.generators, pres.relation_ideal, PRINTED_COMPLEMENT_18)
    tower = QuotientTower(pres, K, DEFAULT_PRIME)
    findings = {}
    for label, p in (("printed", printed), ("corrected", pres)):
        findings[label] = [k for k in range(0, K + 1, 2)
                           if not tower.spans(_complement_rows(p, k), k)]
    ok = bool(findings["printed"]) and not findings["corrected"]
    detail = {"printed_fails_at": findings["printed"],
              "corrected_fails_at": findings["corrected"]}
    return Check("complement of R_18", 18, None, ok, detail)
