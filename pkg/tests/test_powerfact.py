from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abckit.powerfact import power_factorize, reduce_triple, verify_power_factorization


def test_parameters_from_epsilon():
    pf = power_factorize(2, 100, Fraction(3, 10))
    assert (pf.K, pf.M) == (8, 111)
    pf = power_factorize(2, 100, Fraction(1, 2))
    assert (pf.K, pf.M) == (4, 40)


def test_frozen_example_96():
    # 96 = 2^5 * 3: class products y_1 = 3, y_5 = 2; both within M
    pf = power_factorize(96, 100, Fraction(1, 2))
    assert pf.c == 1
    assert pf.nontrivial_parts == {1: 3, 5: 2}
    assert verify_power_factorization(pf).ok


def test_frozen_example_high_class():
    # 2^50 with M = 40: class 50 folds into x_4 = 2^12, leaving c = 2^2
    pf = power_factorize(2**50, 2**50, Fraction(1, 2))
    assert pf.c == 4
    assert pf.part(4) == 4096
    assert pf.nontrivial_parts == {4: 4096}
    assert verify_power_factorization(pf).ok


def test_one_and_primes():
    pf = power_factorize(1, 10, Fraction(1, 2))
    assert pf.c == 1 and set(pf.parts) == {1}
    assert verify_power_factorization(pf).ok
    pf = power_factorize(97, 100, Fraction(3, 10))
    assert pf.part(1) == 97 and pf.c == 1
    assert verify_power_factorization(pf).ok


def test_domain_errors():
    with pytest.raises(ValueError):
        power_factorize(5, 4, Fraction(1, 2))  # n > X
    with pytest.raises(ValueError):
        power_factorize(0, 4, Fraction(1, 2))
    with pytest.raises(ValueError):
        power_factorize(2, 4, Fraction(3, 5))  # epsilon > 1/2
    with pytest.raises(ValueError):
        power_factorize(2, 4, Fraction(0))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**6), st.sampled_from([Fraction(3, 10), Fraction(1, 2), Fraction(1, 7)]))
def test_invariants_hold(n, eps):
    pf = power_factorize(n, 10**6, eps)
    res = verify_power_factorization(pf)
    assert res.ok, res.failures
    assert len(pf.parts) == pf.M


def test_reduce_triple_frozen():
    red = reduce_triple(1, 8, 9, 10, Fraction(1))
    assert red.d == 40
    assert red.coefficients == (1, 1, 1)
    assert red.fa.nontrivial_parts == {}
    assert red.fb.nontrivial_parts == {3: 2}
    assert red.fc.nontrivial_parts == {2: 3}

    red = reduce_triple(5, 27, 32, 32, Fraction(1))
    assert red.coefficients == (1, 1, 1)
    assert red.fa.nontrivial_parts == {1: 5}
    assert red.fb.nontrivial_parts == {3: 3}
    assert red.fc.nontrivial_parts == {5: 2}

    red = reduce_triple(3, 125, 128, 128, Fraction(1))
    assert red.fb.nontrivial_parts == {3: 5}
    assert red.fc.nontrivial_parts == {7: 2}


def test_reduce_triple_equation_and_bounds():
    for (a, b, c, X) in [(1, 8, 9, 9), (5, 27, 32, 100), (3, 125, 128, 128), (1, 1, 2, 4)]:
        red = reduce_triple(a, b, c, X, Fraction(1, 2))
        ca, cb, cc = red.coefficients
        A = prod(x**j for j, x in enumerate(red.fa.parts, start=1))
        B = prod(x**j for j, x in enumerate(red.fb.parts, start=1))
        C = prod(x**j for j, x in enumerate(red.fc.parts, start=1))
        assert ca * A + cb * B == cc * C
        # coefficients at most X^(eps^2 / 4), checked exactly
        e2 = red.epsilon**2 / 4
        for coeff in red.coefficients:
            assert coeff ** e2.denominator <= X ** e2.numerator
        assert red.d == (10 * (red.epsilon**2 / 2) ** -2).__floor__()


def test_reduce_triple_rejects():
    with pytest.raises(ValueError):
        reduce_triple(2, 3, 6, 10, Fraction(1))  # 2 + 3 != 6
    with pytest.raises(ValueError):
        reduce_triple(2, 4, 6, 10, Fraction(1))  # not coprime
    with pytest.raises(ValueError):
        reduce_triple(1, 8, 9, 8, Fraction(1))  # c > X
    with pytest.raises(ValueError):
        reduce_triple(1, 8, 9, 9, Fraction(3, 2))  # epsilon > 1
