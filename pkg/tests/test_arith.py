import math

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from weightone.arith import d4_counts, divisor_counts, integer_root, kronecker, prime_pi, smallest_prime_factors


def euler_legendre(a, p):
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@given(st.integers(-10**6, 10**6), st.sampled_from(list(sympy.primerange(3, 400))))
def test_kronecker_matches_euler_criterion(a, p):
    assert kronecker(a, p) == euler_legendre(a, p)


@given(st.integers(-10**5, 10**5), st.integers(-10**4, 10**4))
def test_kronecker_matches_sympy(a, n):
    if n > 0 and n % 2:
        assert kronecker(a, n) == sympy.jacobi_symbol(a, n)
    # multiplicative in the bottom argument
    if n != 0:
        assert kronecker(a, 2 * n) == kronecker(a, 2) * kronecker(a, n)


@pytest.mark.parametrize("q", [7, 23, 31, 47, 71, 65539])
def test_kronecker_two(q):
    # (-q/2) Kronecker agrees with (2/q) Jacobi for q = 3 mod 4
    assert kronecker(-q, 2) == kronecker(2, q)


def test_small_values():
    assert kronecker(2, 23) == 1
    assert kronecker(5, 23) == -1
    assert kronecker(-23, 5) == -1
    assert kronecker(-23, 2) == 1
    assert kronecker(0, 1) == 1 and kronecker(4, 0) == 0


def test_divisor_sieves_against_sympy():
    d = divisor_counts(500)
    d4 = d4_counts(500)
    for n in range(1, 501):
        assert d[n] == sympy.divisor_count(n)
        brute = sum(1 for a in sympy.divisors(n) for b in sympy.divisors(n // a) for c in sympy.divisors(n // a // b))
        assert d4[n] == brute


def test_smallest_prime_factors():
    spf = smallest_prime_factors(1000)
    for n in range(2, 1001):
        assert spf[n] == min(sympy.primefactors(n))


@given(st.integers(0, 10**18), st.integers(1, 12))
def test_integer_root(n, k):
    r = integer_root(n, k)
    assert r**k <= n < (r + 1) ** k


def test_prime_pi():
    assert [prime_pi(x) for x in (1, 2, 3, 4, 10)] == [0, 1, 2, 2, 4]
