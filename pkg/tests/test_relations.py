import pytest

from modring.relations import (Identity, identity_catalog, misprint_checks, misprints,
                               polynomial_identities, relation, relation_catalog,
                               static_check, verify_identity, verify_polynomial_identity,
                               verify_vanishing)
from modring.relation_data import RELATIONS
from modring.spaces import UnsupportedLevel, sturm_cut

ALL_RELATIONS = [r[0] for r in RELATIONS]
IDENTITIES = identity_catalog()


def test_relation_catalog_examples():
    assert [r.name for r in relation_catalog(3)] == ["O_3"]
    names18 = [r.name for r in relation_catalog(18)]
    assert len(names18) == 17
    assert {"O_18B'", "O_18X", "O_18a", "O_18I"} <= set(names18)
    assert len(relation_catalog(25)) == 15


def test_relation_catalog_levels():
    with pytest.raises(UnsupportedLevel):
        relation_catalog(11)
    assert relation_catalog(1) == [] and relation_catalog(4) == []
    # level 12 also lists its ideal generator O_6
    assert "O_6" in [r.name for r in relation_catalog(12)]
    wide = {r.name for r in relation_catalog(18, include_divisors=True)}
    assert {"O_3", "O_6", "O_9"} <= wide


def test_relation_count():
    assert len(ALL_RELATIONS) == 60
    assert len(set(ALL_RELATIONS)) == 60


@pytest.mark.parametrize("name", ALL_RELATIONS)
def test_relation_static(name):
    c = static_check(relation(name))
    assert c.passed, c.detail


@pytest.mark.parametrize("name", ALL_RELATIONS)
def test_relation_vanishes(name):
    c = verify_vanishing(name, 10)
    assert c.passed, c.detail
    r = relation(name)
    assert c.checked_order == sturm_cut(r.level, r.weight) + 10


def test_vanishing_examples():
    c = verify_vanishing("O_3", 10)
    assert c.passed and c.cut == 3 and c.checked_order == 13
    assert verify_vanishing("O_8", 10).passed
    assert verify_vanishing("O_25I", 10).passed


def test_vanishing_detects_a_wrong_relation():
    bad = Identity("perturbed O_3", 3, 8, "alpha3^2", "C3*beta3 + alpha3*C3^2")
    c = verify_identity(bad, 10)
    assert not c.passed
    assert "q^1" in c.detail


@pytest.mark.parametrize("ident", IDENTITIES, ids=lambda i: i.name)
def test_identity(ident):
    c = verify_identity(ident, 10)
    assert c.passed, c.detail


def test_identity_catalogue_contents():
    pairs = {(i.lhs, i.rhs) for i in IDENTITIES}
    assert ("E8", "E4^2") in pairs
    assert any(i.lhs == "E6" and i.rhs.replace(" ", "") == "C2*(4*C2^2-3*E4)" for i in IDENTITIES)
    assert any(i.lhs == "E4^(25)" for i in IDENTITIES)
    assert len(IDENTITIES) >= 25


def test_e6_level_two_cut():
    ident = next(i for i in IDENTITIES if i.lhs == "E6" and i.level == 2)
    c = verify_identity(ident, 10)
    assert c.cut == 2 and c.checked_order == 12


@pytest.mark.parametrize("name,lhs,rhs", polynomial_identities(), ids=lambda x: str(x)[:40])
def test_polynomial_identity(name, lhs, rhs):
    c = verify_polynomial_identity(lhs, rhs, name)
    assert c.passed, c.detail


def test_polynomial_identity_examples():
    assert verify_polynomial_identity("O_18B'", "O_18B + O_18b + 3*O_18d").passed
    assert verify_polynomial_identity("O_10e'", "O_10e + O_10b + 8*O_10c").passed
    assert not verify_polynomial_identity("O_10e'", "O_10e + O_10b + 7*O_10c").passed


def test_misprint_table_is_consistent():
    ms = misprints()
    assert len(ms) == 4
    for m in ms:
        assert m.printed != m.corrected


def test_misprints_detected_and_corrected():
    for c in misprint_checks(10):
        assert c.passed, c.detail
        assert c.detail["printed_fails"] and c.detail["corrected_holds"]
