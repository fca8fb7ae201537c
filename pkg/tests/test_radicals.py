from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abckit.radicals import build_radical_table, factorize, is_squarefree, radical


def naive_radical(n):
    """Independent oracle: product of distinct primes by bare trial division."""
    r, f = 1, 2
    while f * f <= n:
        if n % f == 0:
            r *= f
            while n % f == 0:
                n //= f
        f += 1
    return r * n if n > 1 else r


def test_radical_small_frozen():
    # rad(2..10) worked out by hand
    assert [radical(n) for n in range(2, 11)] == [2, 3, 2, 5, 6, 7, 2, 3, 10]
    assert radical(1) == 1
    assert radical(72) == 6
    assert radical(96) == 6
    assert radical(2**50) == 2
    assert radical(6**10) == 6


def test_table_matches_oracle():
    table = build_radical_table(10_000)
    assert table[0] == 0 and table[1] == 1
    for n in range(1, 10_001):
        assert table[n] == naive_radical(n)


def test_radical_uses_table_and_falls_back():
    table = build_radical_table(100)
    assert radical(96, table) == 6
    assert radical(101, table) == 101  # past the table: factored exactly
    assert radical(10**6 + 3, table) == 10**6 + 3


def test_factorize_frozen():
    assert factorize(1) == {}
    assert factorize(96) == {2: 5, 3: 1}
    assert factorize(2**50) == {2: 50}
    assert factorize(9973) == {9973: 1}
    # semiprime beyond the trial-division cap: forces the rho path
    p, q = 1_000_003, 1_000_033
    assert factorize(p * q) == {p: 1, q: 1}
    assert factorize(p * p * q) == {p: 2, q: 1}


def test_factorize_large_prime():
    # 2^61 - 1 is prime (Mersenne); exercises deterministic Miller-Rabin
    m61 = 2**61 - 1
    assert factorize(m61) == {m61: 1}
    assert radical(m61 * 4) == 2 * m61


def test_domain_errors():
    with pytest.raises(ValueError):
        radical(0)
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        build_radical_table(-1)
    with pytest.raises(ValueError):
        is_squarefree(0)


def test_is_squarefree():
    flags = [is_squarefree(n) for n in range(1, 13)]
    assert flags == [True, True, True, False, True, True, True, False, False, True, True, False]


@given(st.integers(1, 10**6))
def test_radical_divides_and_is_squarefree(n):
    r = radical(n)
    assert n % r == 0
    assert is_squarefree(r)
    assert radical(r) == r  # idempotent on squarefree values


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_radical_multiplicative_on_coprimes(a, b):
    if gcd(a, b) == 1:
        assert radical(a * b) == radical(a) * radical(b)


@given(st.integers(1, 10**5), st.integers(1, 4))
def test_radical_ignores_powers(n, k):
    assert radical(n**k) == radical(n)
