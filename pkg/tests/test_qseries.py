import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from modring.catalog import default_catalog as cat
from modring.expr import parse
from modring.qseries import (DivisionByZero, InsufficientPrecision, NotDivisible,
                             QExpansion, rescale)
from modring.relations import expand_relation_names

Q = QExpansion


def series(max_prec=30, unit=False):
    coeff = st.integers(-9, 9)

    @st.composite
    def build(draw):
        P = draw(st.integers(1, max_prec))
        cs = draw(st.lists(coeff, min_size=P, max_size=P))
        if unit and cs[0] == 0:
            cs[0] = draw(st.sampled_from([-3, -1, 1, 2, 7]))
        return Q(cs, P)
    return build()


def rational_series(max_prec=12):
    frac = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return st.integers(1, max_prec).flatmap(
        lambda P: st.lists(frac, min_size=P, max_size=P).map(lambda cs: Q(cs, P)))


# -- axioms (>= 1000 cases in total) -------------------------------------------------

@settings(max_examples=300, deadline=None)
@given(series(), series(), series())
def test_mul_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@settings(max_examples=300, deadline=None)
@given(series(), series(), series())
def test_distributive(f, g, h):
    assert f * (g + h) == f * g + f * h


@settings(max_examples=300, deadline=None)
@given(series(), series())
def test_commutative(f, g):
    assert f * g == g * f
    assert f + g == g + f


@settings(max_examples=200, deadline=None)
@given(rational_series(), rational_series(), rational_series())
def test_axioms_over_rationals(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=200, deadline=None)
@given(series(), series(unit=True))
def test_div_inverts_mul(f, g):
    assert (f * g).divide(g) == f.truncate(min(f.precision, g.precision))


@settings(max_examples=200, deadline=None)
@given(rational_series(), rational_series().filter(lambda g: g[0] != 0))
def test_div_inverts_mul_rational(f, g):
    assert (f * g) / g == f.truncate(min(f.precision, g.precision))


@settings(max_examples=200, deadline=None)
@given(series(20), series(20), st.integers(1, 5))
def test_rescale_homomorphism(f, g, h):
    lhs = rescale(f * g, h)
    rhs = rescale(f, h) * rescale(g, h)
    assert lhs.agrees_with(rhs)
    assert (rescale(f, h) + rescale(g, h)).agrees_with(rescale(f + g, h))


@settings(max_examples=100, deadline=None)
@given(rational_series())
def test_json_round_trip(f):
    assert Q.from_json(json.loads(json.dumps(f.to_json()))) == f


# -- examples --------------------------------------------------------------------

def test_add_examples():
    assert Q([1, 1]) + Q([1, -1]) == Q([2, 0])
    s = Q([1], 5) + Q([], 3)
    assert s.precision == 3 and s == Q([1, 0, 0])
    E4 = cat.resolve("E4", 10)
    assert (E4 + E4.scale(-1)).valuation() is None


def test_mul_examples():
    assert Q([1, 1, 0]) * Q([1, -1, 0]) == Q([1, 0, -1])
    E4 = cat.resolve("E4", 5)
    assert (E4 * E4)[1] == 480
    f = Q([Fraction(1, 3), 2, -5])
    assert f * Q.constant(1, 3) == f


def test_scale_examples():
    E4 = cat.resolve("E4", 10)
    a2 = (E4 - cat.resolve("E4^(2)", 10)).scale(Fraction(1, 240))
    assert a2[1] == 1 and a2 == cat.resolve("alpha2", 10)
    assert E4.scale(0).valuation() is None
    assert E4.scale(1) == E4


def test_rescale_examples():
    assert rescale(Q([1, 1]), 2) == Q([1, 0, 1])
    f = Q([1, 2, 3])
    assert rescale(f, 1) == f
    assert rescale(cat.resolve("E2", 5), 2)[2] == -24
    assert rescale(f, 3).precision == 3 * (3 - 1) + 1


def test_div_examples():
    assert Q([0, 1, 1, 0]).divide(Q([0, 1, 0, 0])) == Q([1, 1, 0])
    P = 40
    d7 = cat.resolve("beta7", P) ** 2 / cat.resolve("C7", P)
    # beta7 has valuation 2, so the leading term is q^4 (fifth echelon element of M_6(7))
    assert d7.valuation() == 4 and d7[4] == 1
    assert d7.agrees_with(cat.resolve("delta7", P))
    f = cat.resolve("E6", 12)
    assert f / f == Q.constant(1, 12)


def test_div_errors():
    with pytest.raises(DivisionByZero):
        Q([1, 2]).divide(Q([0, 0]))
    with pytest.raises(NotDivisible):
        Q([1, 2, 3]).divide(Q([0, 1, 0]))
    with pytest.raises(DivisionByZero):
        Q([1, 2]) / 0


def test_valuation_examples():
    assert Q([0, 0, 0, 1, 0, -1]).valuation() == 3
    assert cat.resolve("E4", 5).valuation() == 0
    assert Q([], 10).valuation() is None


def test_is_zero_to_examples():
    O6 = cat.evaluate(expand_relation_names(parse("O_6")), 5)
    assert O6.is_zero_to(5)
    q = Q([0, 1])
    assert q.is_zero_to(1)
    assert not q.is_zero_to(2)
    with pytest.raises(InsufficientPrecision):
        q.is_zero_to(3)


def test_coefficients_stay_rational():
    f = Q([1, 2, 3])
    assert all(isinstance(c, Fraction) for c in f.coeffs)
    assert Q([Fraction(2, 4)])[0] == Fraction(1, 2)


def test_str_format():
    assert str(Q([1, Fraction(-1, 2), 0, 3])) == "1 - 1/2q + 3q^3 + O(q^4)"
    assert str(Q([0, 0])) == "O(q^2)"


def test_precision_soundness():
    for name in ("E4", "C3", "beta9", "delta25", "alpha18", "E_r5", "gamma12"):
        lo, hi = cat.resolve(name, 25), cat.resolve(name, 60)
        assert hi.truncate(25) == lo
