from fractions import Fraction

import pytest

from modring.hilbert import HilbertExpr, dim_series, rank_one_rule
from modring.linalg import rank, rank_and_kernel
from modring.presentation import (PRESENTATIONS, QuotientTower, complement_hilbert,
                                  complement_misprint_check, eval_matrix, ideal_dim,
                                  ideal_slice_matrix, monomials, presentation,
                                  verify_presentation)
from modring.spaces import LEVELS, UnsupportedLevel, dim

A = HilbertExpr.atom


def test_table_weights():
    expected = {
        1: [4, 6], 2: [2, 4], 4: [2, 2], 3: [2, 4, 6], 5: [2, 4, 4], 6: [2, 2, 2],
        8: [2, 2, 2], 9: [2, 2, 2], 7: [2, 4, 4, 6, 6], 10: [2, 2, 2, 4, 4],
        12: [2] * 5, 16: [2] * 5, 18: [2] * 7, 25: [2, 2, 2, 2, 2, 4, 4],
    }
    for N, ws in expected.items():
        assert list(presentation(N).weights) == ws
    assert len(presentation(18).relation_ideal) == 15
    assert len(presentation(25).relation_ideal) == 15
    assert presentation(1).relation_ideal == ()
    with pytest.raises(UnsupportedLevel):
        presentation(11)


def test_monomials_examples():
    assert len(monomials(presentation(3), 12)) == 7
    assert monomials(presentation(1), 2) == []
    for N in LEVELS:
        p = presentation(N)
        assert monomials(p, 0) == [(0,) * len(p.names)]


def test_monomials_order_and_weight():
    p = presentation(7)
    ms = monomials(p, 10)
    assert ms == sorted(ms, reverse=True)
    assert all(sum(e * w for e, w in zip(m, p.weights)) == 10 for m in ms)
    assert len(set(ms)) == len(ms)


def test_eval_matrix_examples():
    M = eval_matrix(presentation(1), 12)
    assert len(M) == 2 and rank(M) == 2
    M = eval_matrix(presentation(3), 8)
    assert len(M) == 4 and rank(M) == 3 == dim(3, 8)
    assert eval_matrix(presentation(5), 0) == [[Fraction(1)]]
    with pytest.raises(ValueError):
        eval_matrix(presentation(3), 8, precision=2)


def test_kernel_example():
    r, ker = rank_and_kernel(eval_matrix(presentation(3), 12))
    assert (r, len(ker)) == (5, 2)


def test_ideal_dim_examples():
    p = presentation(3)
    assert ideal_dim(p, 8) == 1
    assert ideal_dim(p, 12) == 2
    assert len(ideal_slice_matrix(p, 12)) == 2
    for N in (7, 18, 25):
        assert ideal_dim(presentation(N), 2) == 0
    with pytest.raises(ValueError):
        ideal_dim(p, 8, method="guess")


@pytest.mark.parametrize("N", [3, 5, 6, 7, 8, 9, 10, 12, 16])
def test_ideal_dim_exact_vs_modular(N):
    p = presentation(N)
    for k in range(0, 13, 2):
        assert ideal_dim(p, k, "exact") == ideal_dim(p, k, "modular")


def test_ideal_dim_exact_vs_modular_large_levels():
    for N in (18, 25):
        p = presentation(N)
        tower = QuotientTower(p, 8)
        for k in range(0, 9, 2):
            assert ideal_dim(p, k, "exact") == tower.ideal_dim(k)


@pytest.mark.parametrize("N", [3, 5, 7, 10, 12])
def test_kernel_inside_ideal(N):
    # stronger than equal dimensions: every kernel vector is in the ideal span
    p = presentation(N)
    for k in range(2, 11, 2):
        _, ker = rank_and_kernel(eval_matrix(p, k))
        I = ideal_slice_matrix(p, k)
        r = rank(I) if I else 0
        assert len(ker) == r
        if ker:
            assert rank(I + ker) == r


def test_verify_level_one():
    rep = verify_presentation(1, 24)
    assert rep.passed
    assert all(r.kernel_dim == 0 for r in rep.records)


@pytest.mark.parametrize("N", [2, 4])
def test_free_levels(N):
    rep = verify_presentation(N, 24)
    assert rep.passed and all(r.kernel_dim == 0 == r.ideal_dim for r in rep.records)


def test_verify_level_six():
    rep = verify_presentation(6, 24)
    assert rep.passed
    r = rep.record(4)
    assert (r.monomial_count, r.eval_rank, r.kernel_dim, r.ideal_dim) == (6, 5, 1, 1)


def test_verify_level_eighteen():
    exact = verify_presentation(18, 8, method="exact")
    assert exact.passed
    assert verify_presentation(18, 12).passed
    assert len(exact.generators_vanish) == 15


def test_verify_methods_agree():
    for N in (7, 10):
        a = verify_presentation(N, 10, method="exact")
        b = verify_presentation(N, 10, method="modular")
        assert a.passed and b.passed
        for x, y in zip(a.records, b.records):
            assert (x.eval_rank, x.kernel_dim, x.ideal_dim) == (y.eval_rank, y.kernel_dim,
                                                                 y.ideal_dim)


def test_failure_is_reported():
    # dropping a generator of I_7 must break kernel = ideal somewhere
    from modring.presentation import Presentation
    p = presentation(7)
    short = Presentation(7, p.generators, p.relation_ideal[:-1], p.complement)
    rep = verify_presentation(short, 12, check_complement=False)
    assert not rep.passed
    assert any(r.kernel_dim > r.ideal_dim for r in rep.records)


def test_complement_hilbert_examples():
    T = 60
    h7 = A({0: 1, 4: 1}, (2, 4)) + A({6: 2}, (4, 6))
    assert complement_hilbert(7).expand(T) == h7.expand(T)
    assert complement_hilbert(12).expand(T) == A({0: 1, 2: 3}, (2, 2)).expand(T)
    assert complement_hilbert(1).expand(T) == A(1, (4, 6)).expand(T)


@pytest.mark.parametrize("N", LEVELS)
def test_complement_matches_dimensions(N):
    assert complement_hilbert(N).expand(200) == dim_series(N, 200)


@pytest.mark.parametrize("N,Y", [(3, 4), (5, 4), (6, 2), (8, 2), (9, 2)])
def test_rank_one_rule(N, Y):
    p = presentation(N)
    free, _ = p.complement[0]
    rule = rank_one_rule([p.weight_of(n) for n in free], Y)
    assert rule.expand(100) == complement_hilbert(N).expand(100) == dim_series(N, 100)


def test_monomial_count_accounting():
    for N in LEVELS:
        rep = verify_presentation(N, 12)
        for r in rep.records:
            assert r.monomial_count - r.ideal_dim == dim(N, r.weight)


def test_printed_complement_18():
    c = complement_misprint_check()
    assert c.passed
    assert c.detail["printed_fails_at"] and not c.detail["corrected_fails_at"]
