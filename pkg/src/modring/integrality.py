"""Integrality of the echelon bases and the closed-form expansions.

Each closed form is generated straight from divisor sums, independently of
the catalogue, and compared with the catalogue series of the same name.
Every intermediate line of a display is checked, not just the last.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .arith import RHO3, RHO5, divisors, sigma, sigma_chi, tau
from .catalog import Catalog, default_catalog
from .qseries import QExpansion
from .report import Check
from .spaces import LEVELS, MonomialEvaluator, UnsupportedLevel, basis, dim

__all__ = [
    "CLOSED_FORMS",
    "DEFAULT_PRECISION",
    "closed_form_misprint_check",
    "closed_forms",
    "verify_closed_forms",
    "verify_integral_basis",
]

DEFAULT_PRECISION = 200


def _series(P: int, f: Callable[[int], object]) -> QExpansion:
    return QExpansion([0] + [f(n) for n in range(1, P)], P)


def _where(cond: Callable[[int], bool], f: Callable[[int], object]) -> Callable[[int], object]:
    return lambda n: f(n) if cond(n) else 0


def _pair_sum(n: int, residue: int, mod: int, den: int) -> Fraction:
    """sum over d | n with d = residue (mod) of (d + n/d)/den."""
    return sum((Fraction(d + n // d, den) for d in divisors(n) if d % mod == residue),
               Fraction(0))


def _tau_series(N: int, P: int) -> QExpansion:
    return _series(P, lambda n: tau(N, n))


def _sigma3_split(p: int, c: int, P: int) -> QExpansion:
    """sum sigma3(n)(q^n - q^(pn)) + c * sum sigma3(n) q^(pn)."""
    return _series(P, lambda n: sigma(3, n) + (c - 1) * (sigma(3, n // p) if n % p == 0 else 0))


def _alpha4(P: int, cat: Catalog) -> list[tuple[str, QExpansion]]:
    return [
        ("sum (3 tau_2 - tau_4)(n)/2 q^n", _series(P, lambda n: Fraction(3 * tau(2, n) - tau(4, n), 2))),
        ("sum_(n odd) sigma_1(n) q^n", _series(P, _where(lambda n: n % 2, lambda n: sigma(1, n)))),
    ]


def _beta9(P: int, cat: Catalog) -> list[tuple[str, QExpansion]]:
    first = (_series(P, lambda n: Fraction(4 * tau(3, n) - tau(9, n), 3))
             - cat.resolve("E_rho3", P)).scale(Fraction(1, 6))
    return [
        ("((4 tau_3 - tau_9)/3 - E_rho3)/6", first),
        ("sum_(n = 2 mod 3) sigma_1(n)/3 q^n",
         _series(P, _where(lambda n: n % 3 == 2, lambda n: Fraction(sigma(1, n), 3)))),
        ("sum_(n = 2 mod 3) sum_(d = 1 mod 3) (d + n/d)/3 q^n",
         _series(P, _where(lambda n: n % 3 == 2, lambda n: _pair_sum(n, 1, 3, 3)))),
    ]


def _gamma16(P: int, cat: Catalog) -> list[tuple[str, QExpansion]]:
    return [
        ("sum_(n = 3 mod 4) sigma_1(n)/4 q^n",
         _series(P, _where(lambda n: n % 4 == 3, lambda n: Fraction(sigma(1, n), 4)))),
        ("sum_(n = 3 mod 4) sum_(d = 1 mod 4) (d + n/d)/4 q^n",
         _series(P, _where(lambda n: n % 4 == 3, lambda n: _pair_sum(n, 1, 4, 4)))),
        ("(alpha4^(2) + 4*alpha4^(4))*alpha4/C4^(2)",
         cat.evaluate("(alpha4^(2) + 4*alpha4^(4))*alpha4/C4^(2)", P)),
    ]


def _beta5(P: int, cat: Catalog) -> list[tuple[str, QExpansion]]:
    t5 = _tau_series(5, P)
    sq = t5 * t5
    first = (_sigma3_split(5, 20, P) - t5).scale(Fraction(1, 3)) - sq
    second = _series(P, lambda n: sum((Fraction(d ** 3 - d, 3) for d in divisors(n) if d % 5),
                                      Fraction(0))
                     + (48 * sigma(3, n // 5) if n % 5 == 0 else 0)) - sq
    return [
        ("(-sum tau_5 q^n + sigma_3 split + 20 sum sigma_3 q^(5n))/3 - (sum tau_5 q^n)^2", first),
        ("sum (sum_(5 !| d) (d^3 - d)/3 + 48 sigma_3(n/5)) q^n - (sum tau_5 q^n)^2", second),
    ]


def _delta25(P: int, cat: Catalog) -> list[tuple[str, QExpansion]]:
    rho5 = cat.resolve("E_rho5", P)
    r5 = cat.resolve("E_r5", P)
    tenth = Fraction(1, 10)
    return [
        ("sum (6 tau_5 - tau_25)/100 q^n + E_rho5/20 - E_r5/10",
         _series(P, lambda n: Fraction(6 * tau(5, n) - tau(25, n), 100))
         + rho5.scale(Fraction(1, 20)) - r5.scale(tenth)),
        ("sum_(5 !| n) (sigma_1 + rho5 sigma_1)/20 q^n - E_r5/10",
         _series(P, _where(lambda n: n % 5, lambda n: Fraction(sigma(1, n) * (1 + RHO5(n)), 20)))
         - r5.scale(tenth)),
        ("sum_(n = 1 mod 5) (sigma_1 - sigma_rho5)/10 q^n"
         " + sum_(n = 4 mod 5) (sigma_1 + sigma_rho5)/10 q^n",
         _series(P, lambda n: Fraction(sigma(1, n) + (1 if n % 5 == 4 else -1)
                                      * sigma_chi(RHO5, n), 10)
                 if n % 5 in (1, 4) else 0)),
        ("sum_(n = 1 mod 5) sum_(d = 2 mod 5) + sum_(n = 4 mod 5) sum_(d = 1 mod 5) (d + n/d)/5 q^n",
         _series(P, lambda n: _pair_sum(n, 2, 5, 5) if n % 5 == 1
                 else _pair_sum(n, 1, 5, 5) if n % 5 == 4 else 0)),
    ]


def printed_delta25_line(P: int) -> QExpansion:
    """The third delta25 line as printed: minus sign in both residue classes."""
    return _series(P, _where(lambda n: n % 5 in (1, 4),
                             lambda n: Fraction(sigma(1, n) - sigma_chi(RHO5, n), 10)))


def _beta7(P: int, cat: Catalog) -> list[tuple[str, QExpansion]]:
    t7 = _tau_series(7, P)
    half_sq = (t7 * t7).scale(Fraction(1, 2))
    first = (_sigma3_split(7, 30, P) - t7).scale(Fraction(1, 4)) - half_sq
    second = _series(P, lambda n: sum((Fraction(d ** 3 - d, 4) for d in divisors(n) if d % 7),
                                      Fraction(0))
                     + (93 * sigma(3, n // 7) if n % 7 == 0 else 0)) - half_sq
    return [
        ("(-sum tau_7 q^n + sigma_3 split + 30 sum sigma_3 q^(7n))/4 - (sum tau_7 q^n)^2/2", first),
        ("sum (sum_(7 !| d) (d^3 - d)/4 + 93 sigma_3(n/7)) q^n - (sum tau_7 q^n)^2/2", second),
    ]


def _delta7(P: int, cat: Catalog) -> list[tuple[str, QExpansion]]:
    return [("beta7^2/C7", cat.evaluate("beta7^2/C7", P))]


# level -> [(catalogue name, generator of displayed lines)]
CLOSED_FORMS: dict[int, list[tuple[str, Callable]]] = {
    4: [("alpha4", _alpha4)],
    9: [("beta9", _beta9)],
    16: [("gamma16", _gamma16)],
    5: [("beta5", _beta5)],
    25: [("delta25", _delta25)],
    7: [("beta7", _beta7), ("delta7", _delta7)],
}


def closed_forms(level: int, precision: int = DEFAULT_PRECISION,
                 catalog: Catalog = default_catalog) -> list[tuple[str, str, QExpansion]]:
    """(catalogue name, line label, series) for every displayed line at ``level``."""
    if level not in CLOSED_FORMS:
        raise UnsupportedLevel(f"no closed forms at level {level}; have {sorted(CLOSED_FORMS)}")
    out = []
    for name, gen in CLOSED_FORMS[level]:
        out += [(name, label, f) for label, f in gen(precision, catalog)]
    return out


def _first_difference(f: QExpansion, g: QExpansion) -> int | None:
    P = min(f.precision, g.precision)
    return next((n for n in range(P) if f[n] != g[n]), None)


def verify_closed_forms(level: int, precision: int = DEFAULT_PRECISION,
                        catalog: Catalog = default_catalog) -> list[Check]:
    out = []
    for name, label, f in closed_forms(level, precision, catalog):
        ref = catalog.resolve(name, precision)
        bad = _first_difference(f, ref)
        integral = f.is_integral()
        ok = bad is None and integral and f.precision == precision
        if bad is not None:
            detail = f"differs from catalogue at q^{bad}: {f[bad]} vs {ref[bad]}"
        elif not integral:
            n = next(i for i in range(f.precision) if f[i].denominator != 1)
            detail = f"non-integral coefficient at q^{n}: {f[n]}"
        else:
            detail = f"matches {name} and is integral through q^{precision - 1}"
        out.append(Check(f"{name} = {label}", level, catalog.weight(name), ok, detail,
                         checked_order=f.precision))
    return out


def closed_form_misprint_check(precision: int = DEFAULT_PRECISION,
                               catalog: Catalog = default_catalog) -> Check:
    """The printed third delta25 line differs from delta25; the corrected one agrees."""
    ref = catalog.resolve("delta25", precision)
    printed = _first_difference(printed_delta25_line(precision), ref)
    corrected = _first_difference(_delta25(precision, catalog)[2][1], ref)
    ok = printed is not None and corrected is None
    detail = {"printed_differs_at": printed, "corrected_differs_at": corrected,
              "note": "for n = 4 mod 5 the sign of sigma_rho5 is + (rho5(n) = 1 and"
                      " E_r5 has coefficient -sigma_rho5(n) there)"}
    return Check("delta25 closed form, third line", 25, 2, ok, detail)


def verify_integral_basis(level: int, K: int = 24, precision: int = DEFAULT_PRECISION,
                          catalog: Catalog = default_catalog, samples: int = 3,
                          seed: int = 0) -> list[Check]:
    """Integral echelon basis and unitriangular leading block for each even k <= K.

    The leading d x d block being upper unitriangular over Z means it is
    invertible over Z; as a spot check a few random integer leading vectors
    are solved back to integer combinations of the basis.
    """
    if level not in LEVELS:
        raise UnsupportedLevel(f"level {level} is not one of {LEVELS}")
    rng = random.Random(seed)
    ev = MonomialEvaluator(precision, catalog)
    out = []
    for k in range(0, K + 1, 2):
        d = dim(level, k)
        if d == 0:
            continue
        if precision <= d:
            raise ValueError(f"precision {precision} must exceed dim {d}")
        elems = basis(level, k, precision=precision, catalog=catalog, evaluator=ev)
        problem = None
        for j, b in enumerate(elems):
            f = b.expansion
            if f.valuation() != j or f[j] != 1:
                problem = f"{b.name}: expected leading term q^{j}"
            elif not f.is_integral():
                n = next(i for i in range(f.precision) if f[i].denominator != 1)
                problem = f"{b.name}: coefficient of q^{n} is {f[n]}"
            if problem:
                break
        if problem is None:
            problem = _spot_check(elems, d, rng, samples)
        out.append(Check(f"integral basis M_{k}({level})", level, k, problem is None,
                         problem or f"{d} elements integral through q^{precision - 1}, unitriangular",
                         checked_order=precision))
    return out


def _spot_check(elems, d: int, rng: random.Random, samples: int) -> str | None:
    lead = [[elems[j].expansion[i] for i in range(d)] for j in range(d)]
    for _ in range(samples):
        target = [rng.randint(-50, 50) for _ in range(d)]
        # solve c * lead = target; lead is upper unitriangular
        c = [Fraction(0)] * d
        for i in range(d):
            c[i] = target[i] - sum((c[j] * lead[j][i] for j in range(i)), Fraction(0))
        if any(x.denominator != 1 for x in c):
            return f"leading block not unimodular for target {target}"
        f = elems[0].expansion.scale(c[0])
        for j in range(1, d):
            f = f + elems[j].expansion.scale(c[j])
        if not f.is_integral():
            return f"integer combination {c} is not integral"
    return None
