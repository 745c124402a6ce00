"""Dihedral weight-one newforms as theta series of class-group characters.

Two independent constructions are provided: counting lattice points of the
reduced forms (``theta_lattice``) and building prime coefficients from the
splitting of p in Q(sqrt(-q)) then extending with the Hecke recursion
(``theta_hecke``).  Form classes are identified with ideal classes directly;
the inverse identification would swap chi for its conjugate, which yields
the same series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .arith import kronecker, primes_up_to, smallest_prime_factors, sqrt_mod_prime
from .characters import ClassCharacter, characters, conjugate, conjugate_pairs, evaluate
from .class_group import ClassGroup, QuadForm, class_group
from .cyclotomic import CycInt, ring
from .errors import IndexOutOfRange, TrivialCharacter


@dataclass(frozen=True, eq=False)
class ThetaForm:
    """Coefficients a(1..N) of one dihedral form.

    ``table[n]`` holds the power-basis coordinates of a(n) in Z[zeta_m];
    row 0 is unused and left zero.
    """

    chi: ClassCharacter
    N: int
    table: np.ndarray

    @property
    def group(self) -> ClassGroup:
        return self.chi.group

    @property
    def q(self) -> int:
        return self.chi.group.q

    @property
    def m(self) -> int:
        return self.chi.m

    @cached_property
    def char_index(self) -> int:
        return characters(self.group).index(self.chi)

    def coefficient(self, n: int) -> CycInt:
        if not 1 <= n <= self.N:
            raise IndexOutOfRange(f"n = {n} outside 1..{self.N}")
        return CycInt(self.m, self.table[n])

    def __getitem__(self, n: int) -> CycInt:
        return self.coefficient(n)

    @cached_property
    def coeffs(self) -> list[CycInt]:
        return [CycInt(self.m, row) for row in self.table[1:]]

    @cached_property
    def floats(self) -> np.ndarray:
        """Real parts of a(0..N) under the embedding zeta -> exp(2 pi i / m)."""
        return self.table @ ring(self.m).embed.real

    @cached_property
    def imag(self) -> np.ndarray:
        return self.table @ ring(self.m).embed.imag

    def is_rational(self) -> bool:
        return not self.table[:, 1:].any()

    def same_coefficients(self, other: ThetaForm) -> bool:
        n = min(self.N, other.N)
        return self.m == other.m and np.array_equal(self.table[: n + 1], other.table[: n + 1])

    def truncate(self, n: int) -> ThetaForm:
        return ThetaForm(self.chi, n, self.table[: n + 1])


def ideal_counts(G: ClassGroup, i: int, n: int) -> int:
    """Integral ideals of norm n in class i, i.e. half the representations of n by its form."""
    a, b, c = G.form(i)
    q = G.q
    count = 0
    y = 0
    while q * y * y <= 4 * a * n:
        for yy in {y, -y}:
            disc = 4 * a * n - q * yy * yy
            s = math.isqrt(disc)
            if s * s != disc:
                continue
            for t in {s, -s}:
                num = t - b * yy
                if num % (2 * a) == 0:
                    count += 1
        y += 1
    return count // 2


@lru_cache(maxsize=32)
def _class_counts(q: int, N: int) -> np.ndarray:
    """Array (N+1, h): number of ideals of norm n in each class, by lattice sieve."""
    G = class_group(q)
    out = np.zeros((N + 1, G.h), dtype=np.int64)
    for i, (a, b, c) in enumerate(G.reduced_forms):
        ymax = math.isqrt(4 * a * N // q)
        for y in range(-ymax, ymax + 1):
            rad = 4 * a * N - q * y * y
            if rad < 0:
                continue
            s = math.isqrt(rad)
            lo = -((b * y + s) // (2 * a))
            hi = (s - b * y) // (2 * a)
            if lo > hi:
                continue
            x = np.arange(lo, hi + 1, dtype=np.int64)
            vals = a * x * x + b * x * y + c * y * y
            vals = vals[(vals > 0) & (vals <= N)]
            out[:, i] += np.bincount(vals, minlength=N + 1)
    if np.any(out % 2):
        raise AssertionError("representation counts must be even")
    out //= 2
    out.flags.writeable = False
    return out


def theta_lattice(chi: ClassCharacter, N: int) -> ThetaForm:
    """a(n) = sum over classes of chi(class) * #ideals of norm n in that class."""
    if chi.is_trivial():
        raise TrivialCharacter("the trivial character gives an Eisenstein series")
    G = chi.group
    counts = _class_counts(G.q, N)
    m = chi.m
    power_counts = np.zeros((N + 1, m), dtype=np.int64)
    for i in range(G.h):
        power_counts[:, chi.zeta_power(i)] += counts[:, i]
    table = power_counts @ ring(m).matrix
    return ThetaForm(chi, N, table)


def epsilon(p: int, q: int) -> int:
    """Nebentypus (p/q)."""
    return kronecker(p, q)


def prime_ideal_class(G: ClassGroup, p: int) -> int | None:
    """Class of a prime ideal above p, or None if p is inert."""
    q = G.q
    if p == q:
        return G.index(QuadForm(q, q, (q + 1) // 4))
    if kronecker(-q, p) != 1:
        return None
    if p == 2:
        b = 1
    else:
        b = sqrt_mod_prime(-q, p)
        if b % 2 == 0:
            b += p
    c = (b * b + q) // (4 * p)
    return G.index(QuadForm(p, b, c))


def theta_hecke(chi: ClassCharacter, N: int) -> ThetaForm:
    """Same series as :func:`theta_lattice`, built from prime data and the Hecke recursion."""
    if chi.is_trivial():
        raise TrivialCharacter("the trivial character gives an Eisenstein series")
    G = chi.group
    q = G.q
    m = chi.m
    one = CycInt.from_int(m, 1)
    zero = CycInt.from_int(m, 0)
    a: list[CycInt] = [zero] * (N + 1)
    if N >= 1:
        a[1] = one
    for p in primes_up_to(N):
        cls = prime_ideal_class(G, p)
        if p == q:
            ap = evaluate(chi, cls)
        elif cls is None:
            ap = zero
        else:
            ap = evaluate(chi, cls) + evaluate(chi, G.inverse(cls))
        eps = epsilon(p, q)
        prev, cur = one, ap
        pk = p
        while pk <= N:
            a[pk] = cur
            prev, cur = cur, ap * cur - eps * prev
            pk *= p
    spf = smallest_prime_factors(N) if N >= 2 else None
    for n in range(2, N + 1):
        p = int(spf[n])
        pk = p
        while (n // pk) % p == 0:
            pk *= p
        if pk != n:
            a[n] = a[pk] * a[n // pk]
    table = np.array([x.coeffs for x in a], dtype=np.int64).reshape(N + 1, ring(m).deg)
    table[0] = 0
    return ThetaForm(chi, N, table)


def dihedral_basis(q: int, N: int) -> list[ThetaForm]:
    """One theta series per conjugate pair of nontrivial characters: (h-1)/2 forms."""
    G = class_group(q)
    forms = []
    for chi, bar in conjugate_pairs(G):
        f = theta_lattice(chi, N)
        if not f.same_coefficients(theta_lattice(bar, N)):
            raise AssertionError(f"theta of {chi} differs from its conjugate")
        forms.append(f)
    return forms


def eta_product_coefficients(q: int, N: int) -> np.ndarray:
    """Coefficients c(0..N) of x * prod_{k>=1} (1 - x^k)(1 - x^(q k))."""
    series = np.zeros(N + 1, dtype=np.int64)
    if N >= 1:
        series[1] = 1
    for k in range(1, N):
        series[k:] = series[k:] - series[:-k].copy()
        if q * k < N:
            s = q * k
            series[s:] = series[s:] - series[:-s].copy()
    return series


__all__ = [
    "ThetaForm",
    "conjugate",
    "dihedral_basis",
    "epsilon",
    "eta_product_coefficients",
    "ideal_counts",
    "prime_ideal_class",
    "theta_hecke",
    "theta_lattice",
]
