from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from modring.arith import (RHO3, RHO4, RHO5, bernoulli, character, divisors, sigma,
                           sigma_chi, tau)

LIMIT = 10 ** 4


def _sieve(limit, f):
    """sum_{d | n} f(d) for n <= limit by walking multiples, independent of divisors()."""
    out = [0] * (limit + 1)
    for d in range(1, limit + 1):
        v = f(d)
        if v:
            for m in range(d, limit + 1, d):
                out[m] += v
    return out


def _akiyama_tanigawa(n):
    # independent Bernoulli oracle (B_1 = +1/2 convention; even indices agree)
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def test_sigma_examples():
    assert sigma(1, 6) == 12
    assert sigma(3, 1) == 1
    assert sigma(3, 2) == 9


def test_tau_examples():
    assert tau(2, 4) == 1
    assert tau(5, 10) == 3
    assert tau(3, 1) == 1


def test_sigma_chi_examples():
    assert sigma_chi(RHO5, 1) == 1
    assert sigma_chi(RHO5, 2) == -1
    assert sigma_chi(RHO3, 3) == 1


@pytest.mark.parametrize("k", [0, 1, 3, 7])
def test_sigma_matches_sieve(k):
    s = _sieve(LIMIT, lambda d: d ** k)
    assert all(sigma(k, n) == s[n] for n in range(1, LIMIT + 1))


@pytest.mark.parametrize("N", [2, 3, 4, 5, 7, 9, 25])
def test_tau_matches_sieve(N):
    s = _sieve(LIMIT, lambda d: d if d % N else 0)
    assert all(tau(N, n) == s[n] for n in range(1, LIMIT + 1))


def test_divisors_sorted_and_complete():
    for n in range(1, 500):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


@pytest.mark.parametrize("N", range(2, 26))
def test_tau_level_raising(N):
    for n in range(1, LIMIT + 1):
        expected = N * tau(N, n // N) if n % N == 0 else 0
        assert tau(N * N, n) - tau(N, n) == expected


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_tau_prime_square(p):
    for n in range(1, LIMIT + 1):
        lhs = Fraction((p + 1) * tau(p, n) - tau(p * p, n), p)
        assert lhs == (sigma(1, n) if n % p else 0)


def test_sigma_multiplicative():
    for k in (0, 1, 3, 5):
        for m in range(1, 101):
            for n in range(1, 101):
                if gcd(m, n) == 1:
                    assert sigma(k, m * n) == sigma(k, m) * sigma(k, n)


def test_bernoulli_examples():
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)


def test_bernoulli_eisenstein_constants():
    assert [-Fraction(2 * k) / bernoulli(k) for k in (2, 4, 6)] == [-24, 240, -504]


@pytest.mark.parametrize("k", range(2, 31, 2))
def test_bernoulli_against_oracle(k):
    assert bernoulli(k) == _akiyama_tanigawa(k)


@pytest.mark.parametrize("k", [0, 1, 3, -2])
def test_bernoulli_rejects(k):
    with pytest.raises(ValueError):
        bernoulli(k)


@pytest.mark.parametrize("chi", [RHO3, RHO4, RHO5])
def test_character_tables(chi):
    m = chi.modulus
    for n in range(1, 4 * m):
        assert (chi(n) == 0) == (gcd(n, m) > 1)
        assert chi(n) in (-1, 0, 1)
    for a in range(1, 3 * m):
        for b in range(1, 3 * m):
            assert chi(a * b) == chi(a) * chi(b)


def test_fixed_tables():
    assert [RHO5(n) for n in range(5)] == [0, 1, -1, -1, 1]
    assert [RHO3(n) for n in range(3)] == [0, 1, -1]
    assert [RHO4(n) for n in range(4)] == [0, 1, 0, -1]
    assert character(5) is RHO5
    with pytest.raises(ValueError):
        character(7)


@settings(max_examples=200)
@given(st.integers(1, 5000))
def test_sigma_chi_is_divisor_sum(n):
    for chi in (RHO3, RHO4, RHO5):
        assert sigma_chi(chi, n) == sum(chi(d) * d for d in range(1, n + 1) if n % d == 0)
