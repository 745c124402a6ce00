"""Binary quadratic forms of prime discriminant -q and their class group.

Forms are reduced in the usual sense (|b| <= a <= c, with b >= 0 on the
boundary) and composed with Dirichlet's united-form formula.  The group
structure is found by brute force from element powers, which is all that
is needed while h stays in the low thousands.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

from .arith import is_prime
from .errors import (
    DiscriminantMismatch,
    IndexOutOfRange,
    NonNegativeDiscriminant,
    NotPrime,
    TooSmall,
    WrongResidueClass,
)


@dataclass(frozen=True)
class Discriminant:
    q: int

    @property
    def D(self) -> int:
        return -self.q


def validate_discriminant(q: int) -> Discriminant:
    q = int(q)
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q % 4 != 3:
        raise WrongResidueClass(f"{q} is not 3 mod 4")
    if q < 7:
        raise TooSmall(f"q = {q} has extra units; need q >= 7")
    return Discriminant(q)


class QuadForm(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def opposite(self) -> QuadForm:
        return QuadForm(self.a, -self.b, self.c)

    def is_reduced(self) -> bool:
        a, b, c = self
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True


def principal_form(disc: Discriminant) -> QuadForm:
    return QuadForm(1, 1, (1 + disc.q) // 4)


def _normalize(a: int, b: int, c: int) -> tuple[int, int, int]:
    # bring b into (-a, a] by x -> x + r*y
    r = (a - b) // (2 * a)
    return a, b + 2 * r * a, a * r * r + b * r + c


def reduce(f: QuadForm) -> QuadForm:
    """Unique reduced form equivalent to ``f`` (positive definite only)."""
    a, b, c = f
    D = b * b - 4 * a * c
    if D >= 0:
        raise NonNegativeDiscriminant(f"discriminant {D} is not negative")
    if a <= 0:
        raise NonNegativeDiscriminant("form is not positive definite")
    a, b, c = _normalize(a, b, c)
    while a > c or (a == c and b < 0):
        a, b, c = _normalize(c, -b, a)
    return QuadForm(a, b, c)


def enumerate_reduced(disc: Discriminant) -> list[QuadForm]:
    """All reduced forms of discriminant -q, sorted by (a, b)."""
    q = disc.q
    forms = []
    a = 1
    while 3 * a * a <= q:
        for b in range(-a + 1, a + 1):
            if (b - q) % 2:
                continue
            num = b * b + q
            if num % (4 * a):
                continue
            c = num // (4 * a)
            f = QuadForm(a, b, c)
            if f.is_reduced() and math.gcd(math.gcd(a, b), c) == 1:
                forms.append(f)
        a += 1
    return forms


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        t, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def compose(f: QuadForm, g: QuadForm, disc: Discriminant) -> QuadForm:
    """Reduced representative of the product class of ``f`` and ``g``.

    With e = gcd(a1, a2, (b1+b2)/2) = u*a1 + v*a2 + w*(b1+b2)/2, the
    composite has A = a1*a2/e^2 and
    B = (u*a1*b2 + v*a2*b1 + w*(b1*b2 + D)/2) / e.
    """
    D = disc.D
    if f.disc != D or g.disc != D:
        raise DiscriminantMismatch(f"forms {f}, {g} are not of discriminant {D}")
    a1, b1, _ = f
    a2, b2, _ = g
    s = (b1 + b2) // 2
    e1, x, y = _xgcd(a1, a2)
    e, z, w = _xgcd(e1, s)
    u, v = x * z, y * z
    A = a1 * a2 // (e * e)
    num = u * a1 * b2 + v * a2 * b1 + w * (b1 * b2 + D) // 2
    B = num // e
    if num % e or (B * B - D) % (4 * A):
        raise AssertionError(f"composition of {f} and {g} failed")
    C = (B * B - D) // (4 * A)
    return reduce(QuadForm(A, B, C))


class GroupStructure(NamedTuple):
    invariant_factors: tuple[int, ...]
    generators: tuple[int, ...]
    dlog: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class ClassGroup:
    """The form class group; classes are addressed by index into ``reduced_forms``."""

    disc: Discriminant
    reduced_forms: tuple[QuadForm, ...]
    invariant_factors: tuple[int, ...] = ()
    generators: tuple[int, ...] = ()
    dlog: tuple[tuple[int, ...], ...] = ()
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index.update({f: i for i, f in enumerate(self.reduced_forms)})

    @property
    def q(self) -> int:
        return self.disc.q

    @property
    def h(self) -> int:
        return len(self.reduced_forms)

    @property
    def identity(self) -> int:
        return 0

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def index(self, f: QuadForm) -> int:
        return self._index[reduce(QuadForm(*f))]

    def form(self, i: int) -> QuadForm:
        if not 0 <= i < self.h:
            raise IndexOutOfRange(f"class index {i} outside 0..{self.h - 1}")
        return self.reduced_forms[i]

    def mul(self, i: int, j: int) -> int:
        return self._index[compose(self.form(i), self.form(j), self.disc)]

    def inverse(self, i: int) -> int:
        return self._index[reduce(self.form(i).opposite())]

    def power(self, i: int, k: int) -> int:
        k %= self.h
        result, base = self.identity, i
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def order(self, i: int) -> int:
        return element_order(self, i)

    @cached_property
    def table(self) -> list[list[int]]:
        return [[self.mul(i, j) for j in range(self.h)] for i in range(self.h)]

    def element(self, exponents) -> int:
        """Class with the given exponent vector over ``generators``."""
        x = self.identity
        for g, e in zip(self.generators, exponents):
            x = self.mul(x, self.power(g, e))
        return x

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "D": self.disc.D,
            "h": self.h,
            "forms": [list(f) for f in self.reduced_forms],
            "invariant_factors": list(self.invariant_factors),
            "generators": list(self.generators),
        }


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def element_order(G: ClassGroup, i: int) -> int:
    order = G.h
    for p in _prime_factors(G.h):
        while order % p == 0 and G.power(i, order // p) == G.identity:
            order //= p
    return order


def _sylow_basis(G: ClassGroup, p: int, v: int) -> list[tuple[int, int]]:
    """Basis of the Sylow p-subgroup as (generator, order) pairs."""
    cofactor = G.h // p**v
    sylow = sorted({G.power(x, cofactor) for x in range(G.h)})
    # span maps each element of the current subgroup to itself; only membership matters
    span = {G.identity}
    basis: list[tuple[int, int]] = []
    while len(span) < len(sylow):
        best, best_k, best_y = None, -1, None
        for x in sylow:
            k, y = 0, x
            while y not in span:
                y = G.power(y, p)
                k += 1
            if k > best_k:
                best, best_k, best_y = x, k, y
        pk = p**best_k
        # x^(p^k) = y lies in span; peel off a p^k-th root of y taken from span
        root = next(z for z in span if G.power(z, pk) == best_y)
        g = G.mul(best, G.inverse(root))
        new_span = set()
        gj = G.identity
        for _ in range(pk):
            new_span.update(G.mul(s, gj) for s in span)
            gj = G.mul(gj, g)
        span = new_span
        basis.append((g, pk))
    return basis


def group_structure(G: ClassGroup) -> GroupStructure:
    """Invariant factors d1 | d2 | ..., generators and discrete logs of every class."""
    if G.h == 1:
        return GroupStructure((), (), ((),))
    per_prime = []
    for p, v in sorted(_prime_factors(G.h).items()):
        basis = sorted(_sylow_basis(G, p, v), key=lambda t: t[1], reverse=True)
        per_prime.append(basis)
    r = max(len(b) for b in per_prime)
    factors, gens = [], []
    for i in range(r):
        d, g = 1, G.identity
        for basis in per_prime:
            if i < len(basis):
                g = G.mul(g, basis[i][0])
                d *= basis[i][1]
        factors.append(d)
        gens.append(g)
    factors.reverse()
    gens.reverse()

    dlog: list[tuple[int, ...] | None] = [None] * G.h
    for exps in itertools.product(*(range(d) for d in factors)):
        x = G.identity
        for g, e in zip(gens, exps):
            x = G.mul(x, G.power(g, e))
        if dlog[x] is not None:
            raise AssertionError("generators are not independent")
        dlog[x] = exps
    return GroupStructure(tuple(factors), tuple(gens), tuple(dlog))  # type: ignore[arg-type]


@lru_cache(maxsize=64)
def class_group(q: int) -> ClassGroup:
    """Enumerate the class group of Q(sqrt(-q)) and decompose it."""
    disc = validate_discriminant(q)
    G = ClassGroup(disc, tuple(enumerate_reduced(disc)))
    s = group_structure(G)
    return ClassGroup(disc, G.reduced_forms, s.invariant_factors, s.generators, s.dlog, G._index)


def torsion_count(G: ClassGroup, ell: int) -> int:
    """Number of classes of exact order ``ell``."""
    count = 0
    for vec in G.dlog:
        order = 1
        for e, d in zip(vec, G.invariant_factors):
            order = math.lcm(order, d // math.gcd(e, d))
        if order == ell:
            count += 1
    return count
