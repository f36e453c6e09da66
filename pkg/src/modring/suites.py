"""The verification suites behind ``modring verify``.

Each suite returns a flat list of :class:`~modring.report.Check` records in
a fixed order, so reports are identical from run to run whatever the
thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from .arith import sigma, tau
from .catalog import default_catalog
from .hilbert import DEFAULT_ORDER, verify_all as hilbert_checks
from .integrality import (CLOSED_FORMS, DEFAULT_PRECISION, closed_form_misprint_check,
                          verify_closed_forms, verify_integral_basis)
from .presentation import DEFAULT_MAX_WEIGHT, complement_misprint_check, verify_presentation
from .relations import (DEFAULT_MARGIN, identity_catalog, misprint_checks,
                        polynomial_identities, relation_catalog, verify_identity,
                        verify_polynomial_identity, verify_vanishing)
from .report import Check
from .spaces import LEVELS, UnsupportedLevel, verify_echelon

__all__ = [
    "SUITES",
    "arith_checks",
    "basis_checks",
    "hilbert_suite",
    "identity_checks",
    "integrality_checks",
    "presentation_checks",
    "relation_checks",
    "rescaled_weight_two_checks",
    "run_suite",
]

RELATION_LEVELS = (3, 5, 6, 7, 8, 9, 10, 12, 16, 18, 25)


def _levels(level: int | None, pool: Sequence[int] = LEVELS) -> list[int]:
    if level is None:
        return list(pool)
    if level not in LEVELS:
        raise UnsupportedLevel(f"level {level} is not one of {LEVELS}")
    return [level] if level in pool else []


def _fan_out(tasks: Sequence[Callable[[], list[Check]]], threads: int) -> list[Check]:
    # results are concatenated in task order, not completion order
    if threads <= 1 or len(tasks) <= 1:
        results = [t() for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(lambda t: t(), tasks))
    return [c for r in results for c in r]


def relation_checks(level: int | None = None, margin: int = DEFAULT_MARGIN,
                    threads: int = 1) -> list[Check]:
    """Every catalogued relation vanishes through sturm_cut + margin."""
    rels = []
    seen = set()
    for N in _levels(level, RELATION_LEVELS):
        for r in relation_catalog(N):
            if r.name not in seen:
                seen.add(r.name)
                rels.append(r)
    return _fan_out([lambda r=r: [verify_vanishing(r, margin)] for r in rels], threads)


def identity_checks(level: int | None = None, margin: int = DEFAULT_MARGIN,
                    threads: int = 1, include_misprints: bool = True) -> list[Check]:
    """Cross-level identities as q-series, the exact polynomial links, and misprint findings."""
    idents = [i for i in identity_catalog() if level is None or i.level == level]
    out = _fan_out([lambda i=i: [verify_identity(i, margin)] for i in idents], threads)
    for name, lhs, rhs in polynomial_identities():
        c = verify_polynomial_identity(lhs, rhs, name)
        if level is None or c.level == level:
            out.append(c)
    if include_misprints:
        out += [c for c in misprint_checks(margin) if level is None or c.level == level]
    return out


def basis_checks(level: int | None = None, max_weight: int = DEFAULT_MAX_WEIGHT,
                 threads: int = 1) -> list[Check]:
    """Echelon shape of every construction family for even k <= max_weight."""
    def one(N: int) -> list[Check]:
        out = []
        for k in range(0, max_weight + 1, 2):
            r = verify_echelon(N, k)
            detail = (f"dim={r.dim} monomials={r.count} valuations 0..{r.dim - 1}"
                      if r.passed else r.offending)
            out.append(Check(f"echelon basis M_{k}({N})", N, k, r.passed, detail,
                             extra=r.to_dict()))
        return out
    return _fan_out([lambda N=N: one(N) for N in _levels(level)], threads)


def presentation_checks(level: int | None = None, max_weight: int = DEFAULT_MAX_WEIGHT,
                        threads: int = 1, include_misprints: bool = True) -> list[Check]:
    """Surjectivity and kernel = ideal slice per weight, plus the complement finding."""
    out = _fan_out([lambda N=N: verify_presentation(N, max_weight).checks()
                    for N in _levels(level)], threads)
    if include_misprints and level in (None, 18):
        out.append(complement_misprint_check())
    return out


def hilbert_suite(level: int | None = None, order: int = DEFAULT_ORDER) -> list[Check]:
    return [c for c in hilbert_checks(order) if level is None or c.level == level]


def integrality_checks(level: int | None = None, max_weight: int = DEFAULT_MAX_WEIGHT,
                       precision: int = DEFAULT_PRECISION + 1, threads: int = 1,
                       include_misprints: bool = True) -> list[Check]:
    """Integral bases at every level and the closed forms where the level has them."""
    levels = _levels(level)

    def one(N: int) -> list[Check]:
        out = verify_integral_basis(N, max_weight, precision)
        if N in CLOSED_FORMS:
            out += verify_closed_forms(N, precision)
        return out
    out = _fan_out([lambda N=N: one(N) for N in levels], threads)
    if include_misprints and 25 in levels:
        out.append(closed_form_misprint_check(precision))
    return out


# -- arithmetic oracles ---------------------------------------------------------

def _first_bad(pred: Callable[[int], bool], limit: int) -> int | None:
    return next((n for n in range(1, limit + 1) if not pred(n)), None)


def _check(name: str, bad, ok_text: str, level: int = 0, weight=None) -> Check:
    return Check(name, level, weight, bad is None,
                 ok_text if bad is None else f"fails at {bad}")


def arith_checks(limit: int = 10 ** 4, precision: int = 60) -> list[Check]:
    """Divisor-sum identities for n <= limit and the C_N^(h) identities."""
    out = []
    for N in range(2, 26):
        bad = _first_bad(lambda n: tau(N * N, n) - tau(N, n)
                         == (N * tau(N, n // N) if n % N == 0 else 0), limit)
        out.append(_check(f"tau_{N * N} - tau_{N} = {N} tau_{N}(n/{N})", bad,
                          f"holds for n <= {limit}"))
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        bad = _first_bad(lambda n: Fraction((p + 1) * tau(p, n) - tau(p * p, n), p)
                         == (sigma(1, n) if n % p else 0), limit)
        out.append(_check(f"((p+1) tau_p - tau_p^2)/p = 1_p sigma_1, p={p}", bad,
                          f"holds for n <= {limit}"))
    out += rescaled_weight_two_checks(precision)
    return out


def rescaled_weight_two_checks(precision: int = 60, bound: int = 25) -> list[Check]:
    """C_N^(h) against both E2 forms, for N >= 2, h >= 1 and Nh <= bound.

    The second form involves C_h and so needs h >= 2.
    """
    cat = default_catalog
    out = []
    P = precision
    for N in range(2, bound + 1):
        g = gcd(N - 1, 24)
        for h in range(1, bound // N + 1):
            lhs = cat.resolve(f"C{N}^({h})" if h > 1 else f"C{N}", P)
            first = (cat.resolve(f"E2^({N * h})", P).scale(N)
                     - cat.resolve(f"E2^({h})" if h > 1 else "E2", P)).scale(Fraction(1, g))
            bad = None if lhs == first else "E2 form"
            if h > 1 and bad is None:
                second = (cat.resolve(f"C{h}", P).scale(-gcd(h - 1, 24))
                          + cat.resolve(f"C{N * h}", P).scale(gcd(N * h - 1, 24))
                          ).scale(Fraction(1, g * h))
                bad = None if lhs == second else "C_h, C_Nh form"
            out.append(_check(f"C{N}^({h}) identity" if h > 1 else f"C{N} as E2 combination", bad, f"holds through q^{P - 1}",
                              level=N * h, weight=2))
    return out


def _arith_suite(level: int | None = None, **_) -> list[Check]:
    return [c for c in arith_checks() if level is None or c.level in (0, level)]


def _params(f: Callable[..., list[Check]], *names: str) -> Callable[..., list[Check]]:
    # adapt a suite to the shared keyword set, dropping what it does not take
    return lambda **kw: f(**{n: kw[n] for n in names if n in kw})


SUITES: dict[str, Callable[..., list[Check]]] = {
    "relations": _params(relation_checks, "level", "margin", "threads"),
    "identities": _params(identity_checks, "level", "margin", "threads"),
    "bases": _params(basis_checks, "level", "max_weight", "threads"),
    "presentation": _params(presentation_checks, "level", "max_weight", "threads"),
    "hilbert": _params(hilbert_suite, "level", "order"),
    "integrality": _params(integrality_checks, "level", "max_weight", "precision", "threads"),
    "arith": _arith_suite,
}


def run_suite(name: str, **params) -> list[Check]:
    if name == "all":
        return [c for s in SUITES for c in SUITES[s](**params)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; have {sorted(SUITES)} or 'all'")
    return SUITES[name](**params)
