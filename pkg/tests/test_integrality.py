from fractions import Fraction

import pytest

from modring.arith import sigma
from modring.catalog import default_catalog as cat
from modring.integrality import (CLOSED_FORMS, closed_form_misprint_check, closed_forms,
                                 printed_delta25_line, verify_closed_forms,
                                 verify_integral_basis)
from modring.spaces import LEVELS, UnsupportedLevel

P = 201   # coefficients q^0 .. q^200


def test_level_one_basis():
    checks = verify_integral_basis(1, 24, P)
    assert checks and all(c.passed for c in checks)


def test_level_25_basis():
    assert all(c.passed for c in verify_integral_basis(25, 12, P))


def test_weight_zero_basis():
    c = verify_integral_basis(7, 0, 10)
    assert len(c) == 1 and c[0].passed


@pytest.mark.parametrize("N", [2, 3, 5, 7, 9, 16, 18])
def test_integral_bases(N):
    checks = verify_integral_basis(N, 24, 100)
    assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]


@pytest.mark.parametrize("N", sorted(CLOSED_FORMS))
def test_closed_forms(N):
    for c in verify_closed_forms(N, P):
        assert c.passed, c.detail


def test_closed_form_count():
    assert sum(len(v) for v in CLOSED_FORMS.values()) == 7
    with pytest.raises(UnsupportedLevel):
        closed_forms(3)


def test_alpha4_matches_definition():
    lines = closed_forms(4, P)
    ref = (cat.resolve("C2", P) - cat.resolve("C4", P)).scale(Fraction(1, 16))
    for _, _, f in lines:
        assert f == ref


def test_beta9_q2():
    f = cat.resolve("beta9", 5)
    assert f[2] == Fraction(sigma(1, 2), 3) == 1


def test_delta7_integral():
    f = cat.evaluate("beta7^2/C7", P)
    assert f.is_integral() and f.precision == P


def test_printed_delta25_line():
    ref = cat.resolve("delta25", 30)
    printed = printed_delta25_line(30)
    assert printed[4] == Fraction(2, 5) and ref[4] == 1
    c = closed_form_misprint_check(P)
    assert c.passed
    assert c.detail["printed_differs_at"] == 4 and c.detail["corrected_differs_at"] is None


def test_non_integral_is_reported():
    from modring.integrality import _first_difference
    f = cat.resolve("beta9", 20).scale(Fraction(1, 2))
    assert not f.is_integral()
    assert _first_difference(f, cat.resolve("beta9", 20)) == 2
