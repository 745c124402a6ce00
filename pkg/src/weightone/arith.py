"""Elementary arithmetic helpers: Kronecker symbol, prime counting, divisor sieves."""

from __future__ import annotations

import math

import numpy as np
import sympy


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), computed by quadratic reciprocity.

    Binary algorithm: strip factors of two (using (2/b) = (-1)^((b^2-1)/8)),
    then flip with reciprocity and reduce until the top argument vanishes.
    """
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0

    table2 = (0, 1, 0, -1, 0, -1, 0, 1)
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    k = 1 if v % 2 == 0 else table2[a & 7]
    if n < 0:
        n = -n
        if a < 0:
            k = -k

    a %= n
    while a != 0:
        v = 0
        while a % 2 == 0:
            a //= 2
            v += 1
        if v % 2 == 1:
            k *= table2[n & 7]
        # reciprocity: flip sign when both are 3 mod 4
        if a & n & 2:
            k = -k
        a, n = n % a, a
    return k if n == 1 else 0


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


def primes_up_to(x: int) -> list[int]:
    if x < 2:
        return []
    return list(sympy.primerange(2, x + 1))


def prime_pi(x: int) -> int:
    return int(sympy.primepi(x)) if x >= 2 else 0


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, exact."""
    if n < 0:
        raise ValueError("negative radicand")
    r = int(round(n ** (1.0 / k)))
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def divisor_counts(n_max: int) -> np.ndarray:
    """d(n) for 0 <= n <= n_max (d(0) left as 0)."""
    d = np.zeros(n_max + 1, dtype=np.int64)
    for i in range(1, n_max + 1):
        d[i::i] += 1
    return d


def d4_counts(n_max: int) -> np.ndarray:
    """Number of ordered factorizations into four factors, d4 = d * d."""
    d = divisor_counts(n_max)
    d4 = np.zeros(n_max + 1, dtype=np.int64)
    for i in range(1, n_max + 1):
        d4[i::i] += d[i] * d[1 : n_max // i + 1]
    return d4


def smallest_prime_factors(n_max: int) -> np.ndarray:
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for p in range(2, math.isqrt(n_max) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.arange(n_max + 1)
    mask = spf == 0
    spf[mask] = rest[mask]
    return spf


def sqrt_mod_prime(a: int, p: int) -> int:
    """Some square root of a modulo the prime p (a must be a residue)."""
    r = sympy.sqrt_mod(a % p, p)
    if r is None:
        raise ValueError(f"{a} is not a square modulo {p}")
    return int(r)
