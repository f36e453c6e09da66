import pytest

from modring.catalog import default_catalog as cat
from modring.spaces import (LEVELS, SpaceKey, UnsupportedLevel, basis, basis_monomials, dim,
                            sturm_cut, verify_echelon)

# the dimension list, transcribed independently of spaces.dim
FORMULAS = {
    1: lambda k: k // 12 + 1 - (1 if k % 12 == 2 else 0),
    2: lambda k: k // 4 + 1,
    3: lambda k: k // 3 + 1,
    4: lambda k: k // 2 + 1,
    5: lambda k: 2 * (k // 4) + 1,
    6: lambda k: k + 1,
    7: lambda k: 2 * (k // 3) + 1,
    8: lambda k: k + 1,
    9: lambda k: k + 1,
    10: lambda k: k + 2 * (k // 4) + 1,
    12: lambda k: 2 * k + 1,
    16: lambda k: 2 * k + 1,
    18: lambda k: 3 * k + 1,
    25: lambda k: 2 * k + 2 * (k // 4) + 1,
}

EVEN = range(0, 25, 2)


def test_dim_examples():
    assert dim(7, 4) == 3
    assert dim(1, 2) == 0
    assert dim(18, 24) == 73
    assert dim(25, 24) == 61
    assert dim(SpaceKey(12, 6)) == 13


@pytest.mark.parametrize("N", LEVELS)
def test_dim_formulas(N):
    for k in EVEN:
        assert dim(N, k) == FORMULAS[N](k)
    assert dim(N, 0) == 1
    assert dim(N, 3) == 0 and dim(N, 11) == 0


def test_unsupported_level():
    with pytest.raises(UnsupportedLevel):
        dim(11, 2)
    with pytest.raises(UnsupportedLevel):
        basis(13, 2)


def test_sturm_cut_examples():
    assert sturm_cut(6, 4) == 5
    assert sturm_cut(12, 4) == 9
    assert sturm_cut(25, 4) == 11
    with pytest.raises(ValueError):
        sturm_cut(1, 2)


@pytest.mark.parametrize("N", LEVELS)
def test_monomial_count_equals_dim(N):
    for k in EVEN:
        ms = basis_monomials(N, k)
        if k:
            assert len(ms) == dim(N, k)
        for m in ms:
            assert sum(cat.weight(n) * e for n, e in m) == k


@pytest.mark.parametrize("N", LEVELS)
def test_echelon_all_weights(N):
    for k in EVEN:
        rep = verify_echelon(N, k)
        assert rep.passed, rep.offending
        assert rep.valuations == list(range(dim(N, k)))


@pytest.mark.parametrize("N", LEVELS)
def test_sturm_witness_unitriangular(N):
    for k in EVEN:
        d = dim(N, k)
        if not d:
            continue
        elems = basis(N, k, precision=d + 1)
        for i in range(d):
            row = [elems[i].expansion[j] for j in range(d)]
            assert row[:i] == [0] * i and row[i] == 1


def test_basis_examples():
    b = basis(3, 12, precision=8)
    assert len(b) == 5 and [e.expected_valuation for e in b] == [0, 1, 2, 3, 4]
    assert b[0].name == "C3^6"
    b = basis(2, 4, precision=5)
    assert [e.expansion.valuation() for e in b] == [0, 1]
    b = basis(1, 0, precision=3)
    assert len(b) == 1 and b[0].expansion[0] == 1 and b[0].monomial == ()


def test_basis_precision_guard():
    with pytest.raises(ValueError):
        basis(18, 4, precision=13)


def test_verify_echelon_examples():
    r = verify_echelon(18, 2)
    assert r.passed and r.count == 7 and r.valuations == list(range(7))
    r = verify_echelon(25, 4)
    assert r.passed and r.count == 11
    r = verify_echelon(1, 12)
    assert r.passed and r.count == 2
    assert [e.name for e in basis(1, 12, precision=3)] == ["E4^3", "Delta"]


def test_level_two_weight_four():
    # valuations {0, 1}: alpha2 starts at q
    b = basis(2, 4, precision=10)
    assert b[1].expansion[1] == 1
    assert b[1].expansion == cat.resolve("alpha2", 10)
