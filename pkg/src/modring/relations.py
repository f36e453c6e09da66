"""Relation forms, cross-level identities and their verification.

A relation is a polynomial in catalogue names that should vanish as a
modular form. By the valuation bound on M_k(N) (a form of weight k whose
expansion vanishes through q^(dim M_k(N) - 1) is zero) it is enough to
expand to ``sturm_cut + margin`` terms and check every coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .catalog import Catalog, default_catalog
from .expr import Expr, parse, split_rescale
from .polys import WeightedPoly
from .qseries import QExpansion
from .relation_data import (CHAINS, IDENTITIES, MISPRINTS, POLYNOMIAL_IDENTITIES,
                            POLYNOMIAL_LINKS, RELATIONS)
from .report import Check
from .spaces import LEVELS, UnsupportedLevel, sturm_cut

__all__ = [
    "Identity",
    "RelationForm",
    "identity_catalog",
    "misprint_checks",
    "polynomial_identities",
    "relation",
    "relation_catalog",
    "verify_identity",
    "verify_polynomial_identity",
    "verify_vanishing",
]

DEFAULT_MARGIN = 10


@dataclass(frozen=True)
class RelationForm:
    name: str
    level: int
    weight: int
    text: str

    @property
    def tree(self) -> Expr:
        return parse(self.text)

    @property
    def expression(self) -> WeightedPoly:
        return WeightedPoly.parse(self.text)

    def __str__(self):
        return f"{self.name} = {self.text}"


@dataclass(frozen=True)
class Identity:
    """``lhs == rhs`` as q-series; either side may mention relation names."""

    name: str
    level: int
    weight: int
    lhs: str
    rhs: str
    note: str = ""

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


_RELATIONS = {name: RelationForm(name, level, weight, text)
              for name, level, weight, text in RELATIONS}

# Generating sets of the relation ideals; see presentation.py.
IDEAL_GENERATORS: dict[int, tuple[str, ...]] = {
    3: ("O_3",),
    5: ("O_5",),
    6: ("O_6",),
    8: ("O_8",),
    9: ("O_9",),
    7: ("O_7a", "O_7b", "O_7c", "O_7d", "O_7e", "O_7f"),
    10: ("O_10a", "O_10b", "O_10c", "O_10d", "O_10e", "O_10f"),
    12: ("O_6", "O_12b", "O_12c", "O_12d", "O_12e", "O_12f"),
    16: ("O_8", "O_16b", "O_16c", "O_16d", "O_16e", "O_16f"),
    18: tuple(f"O_18{c}" for c in "abcdefABCDEFGHI"),
    25: tuple(f"O_25{c}" for c in "abcdefABCDEFGHI"),
}


def relation(name: str) -> RelationForm:
    try:
        return _RELATIONS[name]
    except KeyError:
        raise KeyError(f"unknown relation {name!r}") from None


def is_relation_name(name: str) -> bool:
    return split_rescale(name)[0] in _RELATIONS


def relation_catalog(level: int, include_divisors: bool = False) -> list[RelationForm]:
    """Relations attached to ``level``.

    By default: every relation declared at this level together with the
    generators of the level's relation ideal (so level 12 also lists O_6).
    With ``include_divisors`` every relation whose level divides ``level``
    is returned.
    """
    if level not in LEVELS:
        raise UnsupportedLevel(f"level {level} is not one of {LEVELS}")
    ideal = set(IDEAL_GENERATORS.get(level, ()))
    out = []
    for r in _RELATIONS.values():
        if r.level == level or r.name in ideal or (include_divisors and level % r.level == 0):
            out.append(r)
    return out


# -- expression helpers ------------------------------------------------------

def expand_relation_names(e: Expr) -> Expr:
    """Replace every ``O_*`` (or ``O_*^(h)``) leaf by its defining expression."""
    if e.op == "name":
        base, h = split_rescale(e.args[0])
        if base in _RELATIONS:
            inner = expand_relation_names(_RELATIONS[base].tree)
            return inner if h == 1 else Expr("rescale", (inner, h))
        return e
    if e.op == "num":
        return e
    args = tuple(expand_relation_names(a) if isinstance(a, Expr) else a for a in e.args)
    return Expr(e.op, args)


def _name_level(name: str, catalog: Catalog) -> int:
    base, h = split_rescale(name)
    if base in _RELATIONS:
        return _RELATIONS[base].level * h
    return catalog.level(name)


def _name_weight(name: str, catalog: Catalog) -> int:
    base, _ = split_rescale(name)
    if base in _RELATIONS:
        return _RELATIONS[base].weight
    return catalog.weight(name)


def expression_level(e: Expr, catalog: Catalog = default_catalog) -> int:
    level = 1
    for n in e.names():
        L = _name_level(n, catalog)
        level = level * L // gcd(level, L)
    return level


def expression_weight(e: Expr, catalog: Catalog = default_catalog) -> int:
    if e.is_constant():
        raise ValueError(f"constant expression {e} has no weight")
    return e.weight(lambda n: _name_weight(n, catalog))


def _hosting_level(level: int) -> int:
    """Smallest supported level that is a multiple of ``level``."""
    for N in LEVELS:
        if N % level == 0:
            return N
    raise UnsupportedLevel(f"no supported level is a multiple of {level}")


@dataclass(frozen=True)
class Misprint:
    chain: str
    index: int
    printed: str
    corrected: str
    note: str


def misprints() -> list[Misprint]:
    chains = dict(list(IDENTITIES) + list(CHAINS))
    out = []
    for chain, i, old, new, note in MISPRINTS:
        printed = chains[chain][i]
        if printed.count(old) != 1:
            raise ValueError(f"{chain}[{i}]: {old!r} does not occur exactly once")
        out.append(Misprint(chain, i, printed, printed.replace(old, new), note))
    return out


def _corrected_chains() -> list[tuple[str, list[str], dict[int, str]]]:
    fixes = {(m.chain, m.index): m for m in misprints()}
    out = []
    for name, links in list(IDENTITIES) + list(CHAINS):
        links = list(links)
        notes = {}
        for i in range(len(links)):
            m = fixes.get((name, i))
            if m:
                links[i] = m.corrected
                notes[i] = m.note
        out.append((name, links, notes))
    return out


def _label(name: str, n_links: int, i: int) -> str:
    return name if n_links == 2 else f"{name} [{i + 1}]"


@lru_cache(maxsize=None)
def identity_catalog() -> tuple[Identity, ...]:
    """Every q-series identity, one entry per consecutive pair of each chain.

    Entries recorded in the misprint table are used in corrected form.
    """
    out = []
    for name, links, notes in _corrected_chains():
        trees = [parse(t) for t in links]
        for i in range(len(links) - 1):
            lhs, rhs = trees[i], trees[i + 1]
            level = _hosting_level(expression_level(lhs - rhs))
            sides = [t for t in (lhs, rhs) if not t.is_constant()]
            weights = {expression_weight(t) for t in sides}
            if len(weights) != 1:
                raise ValueError(f"{name}: sides have weights {sorted(weights)}")
            note = "; ".join(notes[j] for j in (i, i + 1) if j in notes)
            out.append(Identity(_label(name, len(links), i), level, weights.pop(),
                                links[i], links[i + 1], note))
    return tuple(out)


def polynomial_identities() -> list[tuple[str, str, str]]:
    """(name, lhs, rhs) triples that hold exactly as polynomials."""
    out = list(POLYNOMIAL_IDENTITIES)
    chains = {name: links for name, links, _ in _corrected_chains()}
    for name, i in POLYNOMIAL_LINKS:
        links = chains[name]
        out.append((_label(name, len(links), i), links[i], links[i + 1]))
    return out


# -- verification --------------------------------------------------------------

def _first_nonzero(f: QExpansion) -> str:
    v = f.valuation()
    return "identically zero" if v is None else f"first nonzero coefficient q^{v}: {f[v]}"


def _vanishing_check(name: str, level: int, weight: int, tree: Expr, margin: int,
                     catalog: Catalog) -> Check:
    cut = sturm_cut(level, weight)
    order = cut + margin
    f = catalog.evaluate(expand_relation_names(tree), order)
    ok = f.is_zero_to(order)
    detail = "vanishes" if ok else _first_nonzero(f)
    return Check(name, level, weight, ok, detail, cut=cut, checked_order=f.precision)


def verify_vanishing(rel: RelationForm | str, margin: int = DEFAULT_MARGIN,
                     catalog: Catalog = default_catalog) -> Check:
    """Expand a relation through ``sturm_cut + margin`` terms and test for zero."""
    if isinstance(rel, str):
        rel = relation(rel)
    return _vanishing_check(rel.name, rel.level, rel.weight, rel.tree, margin, catalog)


def verify_identity(ident: Identity, margin: int = DEFAULT_MARGIN,
                    catalog: Catalog = default_catalog) -> Check:
    tree = parse(f"({ident.lhs}) - ({ident.rhs})")
    return _vanishing_check(ident.name, ident.level, ident.weight, tree, margin, catalog)


def to_polynomial(text: str) -> WeightedPoly:
    """Expand ``text`` into generator names, inlining relation definitions."""
    tree = parse(text)
    p = WeightedPoly.from_expr(tree)
    names = [n for n in p.generators() if n in _RELATIONS]
    return p.substitute({n: _RELATIONS[n].expression for n in names})


def verify_polynomial_identity(lhs: str, rhs: str, name: str | None = None) -> Check:
    """Exact equality of polynomials; no q-expansions are involved."""
    diff = to_polynomial(lhs) - to_polynomial(rhs)
    tree = parse(f"({lhs}) - ({rhs})")
    level = _hosting_level(expression_level(tree)) if tree.names() else 1
    weight = expression_weight(tree) if not tree.is_constant() else None
    ok = not diff
    detail = "equal as polynomials" if ok else f"difference {diff}"
    return Check(name or f"{lhs} = {rhs}", level, weight, ok, detail)


def misprint_checks(margin: int = DEFAULT_MARGIN,
                    catalog: Catalog = default_catalog) -> list[Check]:
    """Each printed entry fails where it sits and the correction holds.

    The comparison is against the neighbouring entries of the chain; for
    entries whose neighbours are all zero as forms the comparison is exact
    polynomial equality.
    """
    chains = {name: links for name, links, _ in _corrected_chains()}
    poly_links = set(POLYNOMIAL_LINKS)
    out = []
    for m in misprints():
        links = chains[m.chain]
        nbrs = [j for j in (m.index - 1, m.index + 1) if 0 <= j < len(links)]
        printed_fails, corrected_holds, findings = False, True, []
        for j in nbrs:
            a, b = sorted((j, m.index))
            if (m.chain, a) in poly_links:
                bad = verify_polynomial_identity(m.printed, links[j])
                good = verify_polynomial_identity(m.corrected, links[j])
            else:
                level = _hosting_level(expression_level(parse(f"({m.corrected}) - ({links[j]})")))
                tree = parse(f"({m.printed}) - ({links[j]})")
                try:
                    w = expression_weight(tree)
                except ValueError as exc:
                    w = None
                    bad = Check("", level, None, False, str(exc))
                else:
                    bad = _vanishing_check("", level, w, tree, margin, catalog)
                good = verify_identity(Identity("", level, expression_weight(
                    parse(m.corrected)), m.corrected, links[j]), margin, catalog)
            printed_fails |= not bad.passed
            corrected_holds &= good.passed
            findings.append(f"printed vs entry {j}: {bad.detail}")
        level = _hosting_level(expression_level(parse(" + ".join(f"({t})" for t in links))))
        ok = printed_fails and corrected_holds
        out.append(Check(f"{m.chain} entry {m.index}", level,
                         expression_weight(parse(m.corrected)), ok,
                         {"printed_fails": printed_fails, "corrected_holds": corrected_holds,
                          "findings": findings, "note": m.note}))
    return out


def static_check(rel: RelationForm, catalog: Catalog = default_catalog) -> Check:
    """Declared weight matches the expression and every name's level divides the level."""
    p = rel.expression
    problems = []
    degs = p.degrees(catalog.weight)
    if degs != {rel.weight}:
        problems.append(f"weights {sorted(degs)} != {rel.weight}")
    for n in p.generators():
        if rel.level % catalog.level(n):
            problems.append(f"{n} has level {catalog.level(n)}")
    return Check(rel.name, rel.level, rel.weight, not problems,
                 "; ".join(problems) or "homogeneous, levels divide")

