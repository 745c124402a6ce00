"""Polynomials P_n of the even-power Hecke recursion and synthetic coefficient streams.

For a normalized newform with nebentypus eps and x = conj(eps(p)) a(p^2),
conj(eps(p))^n a(p^(2n)) = P_n(x), where P_0 = 1, P_1 = x and
P_{n+1} = (x - 1) P_n - P_{n-1}.  Octahedral and icosahedral forms restrict
x to small finite sets, on which

    P_4 - P_2 - P_1 = x(x+1)(x-1)(x-3) + 1
    P_6 - P_4 - P_1 = x(x+1)(x-2)(x-3)(x^2-x-1) + 1

both equal 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Mapping

from .arith import kronecker
from .errors import IllegalValue, MissingCoefficient


class IntPoly:
    """Integer polynomial, coefficients in ascending degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, n: int) -> IntPoly:
        return cls((n,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _lift(self, other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation; works for any ring element supporting + and * with int."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


@lru_cache(maxsize=None)
def hecke_P(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return IntPoly.const(1)
    if n == 1:
        return IntPoly.x()
    x = IntPoly.x()
    return (x - 1) * hecke_P(n - 1) - hecke_P(n - 2)


def oct_factorization() -> IntPoly:
    x = IntPoly.x()
    return x * (x + 1) * (x - 1) * (x - 3) + 1


def ico_factorization() -> IntPoly:
    x = IntPoly.x()
    return x * (x + 1) * (x - 2) * (x - 3) * (x * x - x - 1) + 1


def oct_combination() -> IntPoly:
    return hecke_P(4) - hecke_P(2) - hecke_P(1)


def ico_combination() -> IntPoly:
    return hecke_P(6) - hecke_P(4) - hecke_P(1)


def verify_oct_identity() -> bool:
    return oct_factorization() == oct_combination()


def verify_ico_identity() -> bool:
    return ico_factorization() == ico_combination()


@total_ordering
class GoldenValue:
    """(u + v*sqrt(5)) / 2 with u = v mod 2, i.e. an element of Z[(1+sqrt 5)/2]."""

    __slots__ = ("u", "v")

    def __init__(self, u: int, v: int = 0):
        if (u - v) % 2:
            raise ValueError(f"({u} + {v}*sqrt5)/2 is not an algebraic integer")
        self.u = int(u)
        self.v = int(v)

    @classmethod
    def from_int(cls, n: int) -> GoldenValue:
        return cls(2 * n, 0)

    def _lift(self, other):
        if isinstance(other, GoldenValue):
            return other
        if isinstance(other, int):
            return GoldenValue.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GoldenValue(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return GoldenValue(-self.u, -self.v)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GoldenValue(self.u - other.u, self.v - other.v)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        u = (self.u * other.u + 5 * self.v * other.v) // 2
        v = (self.u * other.v + self.v * other.u) // 2
        return GoldenValue(u, v)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.u == other.u and self.v == other.v

    def __lt__(self, other):
        return float(self) < float(self._lift(other))

    def __hash__(self):
        return hash((self.u, self.v))

    def __float__(self):
        return (self.u + self.v * 5**0.5) / 2

    def is_integer(self) -> bool:
        return self.v == 0

    def __repr__(self):
        return f"GoldenValue({self.u}, {self.v})"

    def __str__(self):
        if self.v == 0:
            return str(self.u // 2)
        sign = "+" if self.v > 0 else "-"
        return f"({self.u} {sign} {abs(self.v)}*sqrt5)/2"


PHI_PLUS = GoldenValue(1, 1)
PHI_MINUS = GoldenValue(1, -1)

OCT_VALUES: tuple = (-1, 0, 1, 3)
ICO_VALUES: tuple = (
    GoldenValue.from_int(-1),
    GoldenValue.from_int(0),
    GoldenValue.from_int(3),
    PHI_PLUS,
    PHI_MINUS,
)

LEGAL_VALUES = {"octahedral": OCT_VALUES, "icosahedral": ICO_VALUES}
IDENTITY_EXPONENTS = {"octahedral": (8, 4, 2), "icosahedral": (12, 8, 2)}


def nebentypus_checked(p: int, q: int) -> int:
    """(p/q) by reciprocity, cross-checked against the splitting symbol (-q/p)."""
    eps = kronecker(p, q)
    split = kronecker(-q, p)
    if q % 4 == 3 and p != q and eps != split:
        raise AssertionError(f"(p/q) = {eps} but (-q/p) = {split} for p={p}, q={q}")
    return eps


@dataclass(frozen=True)
class SyntheticStream:
    """Coefficients a(p^(2k)) <= N generated from a legal choice of x_p per prime."""

    kind: str
    q: int
    assignment: Mapping[int, object]
    N: int
    coefficients: Mapping[int, object]

    def coefficient(self, n: int):
        try:
            return self.coefficients[n]
        except KeyError:
            raise MissingCoefficient(f"stream has no coefficient at n = {n}") from None

    def __getitem__(self, n: int):
        return self.coefficient(n)

    def identity_lhs(self, p: int):
        """a(p^e1) - a(p^e2) - (p/q) a(p^2) for the stream's kind."""
        e1, e2, _ = IDENTITY_EXPONENTS[self.kind]
        eps = kronecker(p, self.q)
        return self.coefficient(p**e1) - self.coefficient(p**e2) - eps * self.coefficient(p**2)


def _lift_value(kind: str, x):
    if kind == "icosahedral":
        return x if isinstance(x, GoldenValue) else GoldenValue.from_int(int(x))
    if isinstance(x, GoldenValue):
        if not x.is_integer():
            raise IllegalValue(f"{x} is not an octahedral value")
        return x.u // 2
    return int(x)


def synth_stream(kind: str, q: int, assignment: Mapping[int, object], N: int) -> SyntheticStream:
    """Build a(p^(2n)) = eps(p)^n P_n(x_p) for every assigned prime with p^(2n) <= N."""
    if kind not in LEGAL_VALUES:
        raise IllegalValue(f"unknown stream type {kind!r}")
    legal = LEGAL_VALUES[kind]
    coeffs: dict[int, object] = {}
    clean: dict[int, object] = {}
    for p, x in sorted(assignment.items()):
        if p == q:
            raise IllegalValue("the ramified prime carries no assignment")
        x = _lift_value(kind, x)
        if x not in legal:
            raise IllegalValue(f"x_{p} = {x} is not in the {kind} value set")
        clean[p] = x
        eps = nebentypus_checked(p, q)
        n, pk = 0, 1
        while pk <= N:
            coeffs[pk] = eps**n * hecke_P(n)(x)
            n += 1
            pk *= p * p
    return SyntheticStream(kind, q, clean, N, coeffs)


def all_assignments(kind: str, primes: Iterable[int]):
    primes = list(primes)
    for values in itertools.product(LEGAL_VALUES[kind], repeat=len(primes)):
        yield dict(zip(primes, values))
