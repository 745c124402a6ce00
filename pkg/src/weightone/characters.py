"""Characters of the class group with exact values in Z[zeta_m], m the group exponent."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .class_group import ClassGroup
from .cyclotomic import CycInt
from .errors import GroupMismatch, IndexOutOfRange


@dataclass(frozen=True, eq=False)
class ClassCharacter:
    group: ClassGroup
    exponents: tuple[int, ...]

    @property
    def m(self) -> int:
        """Exponent of the group; every value lives in Z[zeta_m]."""
        return self.group.exponent

    @property
    def order(self) -> int:
        order = 1
        for e, d in zip(self.exponents, self.group.invariant_factors):
            order = math.lcm(order, d // math.gcd(e, d))
        return order

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def zeta_power(self, i: int) -> int:
        """k such that chi(class i) = zeta_m^k."""
        if not 0 <= i < self.group.h:
            raise IndexOutOfRange(f"class index {i} outside 0..{self.group.h - 1}")
        m = self.m
        return sum(e * x * (m // d) for e, x, d in zip(self.exponents, self.group.dlog[i], self.group.invariant_factors)) % m

    def __call__(self, i: int) -> CycInt:
        return evaluate(self, i)

    def __eq__(self, other):
        if not isinstance(other, ClassCharacter):
            return NotImplemented
        return self.group.q == other.group.q and self.exponents == other.exponents

    def __hash__(self):
        return hash((self.group.q, self.exponents))

    def __repr__(self):
        return f"ClassCharacter(q={self.group.q}, exponents={self.exponents})"


def characters(G: ClassGroup) -> list[ClassCharacter]:
    """All h characters, trivial first, lexicographic in the exponent vector."""
    return [ClassCharacter(G, e) for e in itertools.product(*(range(d) for d in G.invariant_factors))]


def evaluate(chi: ClassCharacter, i: int) -> CycInt:
    return CycInt.zeta(chi.m, chi.zeta_power(i))


def is_conjugate_pair(chi1: ClassCharacter, chi2: ClassCharacter) -> bool:
    if chi1.group.q != chi2.group.q:
        raise GroupMismatch("characters belong to different class groups")
    return all((a + b) % d == 0 for a, b, d in zip(chi1.exponents, chi2.exponents, chi1.group.invariant_factors))


def conjugate(chi: ClassCharacter) -> ClassCharacter:
    ds = chi.group.invariant_factors
    return ClassCharacter(chi.group, tuple((-e) % d for e, d in zip(chi.exponents, ds)))


def conjugate_pairs(G: ClassGroup) -> list[tuple[ClassCharacter, ClassCharacter]]:
    """Nontrivial characters grouped into (chi, conj chi) with chi listed first."""
    seen = set()
    pairs = []
    for chi in characters(G)[1:]:
        if chi.exponents in seen:
            continue
        bar = conjugate(chi)
        seen.update({chi.exponents, bar.exponents})
        pairs.append((chi, bar))
    return pairs
