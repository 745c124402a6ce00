"""Counting schemes for exotic newforms and the resulting dimension and field-count bounds."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import asdict, dataclass, field

from .arith import integer_root, kronecker, primes_up_to
from .class_group import class_group, torsion_count
from .errors import MissingCoefficient

# Largest observed mean-value and Petersson-norm constants over the test grid,
# rounded up (see tests/test_bounds.py::test_default_constants_cover_observed).
K_PROP1_DEFAULT = 15.0
K_PROP2A_DEFAULT = 2.0e-3

KINDS = {
    # kind: (exponents, prime cutoff root) -- every range reduces to p^root <= q
    "oct": ((8, 4, 2), 8),
    "ico": ((12, 8, 2), 12),
}


@dataclass(frozen=True)
class CountingScheme:
    q: int
    N: int
    kind: str
    primes: tuple[int, ...]
    support: tuple[tuple[int, int], ...]

    @property
    def norm_sq(self) -> int:
        return sum(c * c for _, c in self.support)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "N": self.N,
            "kind": self.kind,
            "primes": list(self.primes),
            "support": [[n, c] for n, c in self.support],
            "norm_sq": self.norm_sq,
        }


def scheme_primes(q: int, kind: str) -> list[int]:
    root = KINDS[kind][1]
    return [p for p in primes_up_to(integer_root(q, root)) if p != q]


def _scheme(q: int, kind: str) -> CountingScheme:
    (e_top, e_mid, e_low) = KINDS[kind][0]
    primes = scheme_primes(q, kind)
    support = [(p**e_top, 1) for p in primes]
    support += [(p**e_mid, -1) for p in primes]
    support += [(p**e_low, -kronecker(p, q)) for p in primes]
    return CountingScheme(q, q, kind, tuple(primes), tuple(support))


def scheme_oct(q: int) -> CountingScheme:
    """c = 1 at p^8 <= q, -1 at p^4 <= q^(1/2), -(p/q) at p^2 <= q^(1/4)."""
    return _scheme(q, "oct")


def scheme_ico(q: int) -> CountingScheme:
    """c = 1 at p^12 <= q, -1 at p^8 <= q^(2/3), -(p/q) at p^2 <= q^(1/6)."""
    return _scheme(q, "ico")


def eval_scheme(scheme: CountingScheme, stream):
    """sum_n c_n a(n) over the scheme's support."""
    if isinstance(stream, Mapping):
        def lookup(n):
            try:
                return stream[n]
            except KeyError:
                raise MissingCoefficient(f"no coefficient at n = {n}") from None
    else:
        lookup = stream.coefficient
    total = 0
    for n, c in scheme.support:
        total = total + c * lookup(n)
    return total


@dataclass(frozen=True)
class DimensionBound:
    q: int
    h: int
    dihedral_dim: int
    oct_bound: float
    ico_bound: float
    total: float
    constants: dict
    oct_bound_exact: float | None = None
    ico_bound_exact: float | None = None
    trace: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def _exact_scheme_bound(K: float, q: int, scheme: CountingScheme) -> float | None:
    # #forms * (sum c a)^2 <= K (q + N) log^3 q * sum |c|^2, with sum c a = #primes
    count = len(scheme.primes)
    if count == 0:
        return None
    return K * (q + scheme.N) * math.log(q) ** 3 * scheme.norm_sq / count**2


def dimension_bound(q: int, k_prop1: float = K_PROP1_DEFAULT, k_prop2a: float = K_PROP2A_DEFAULT) -> DimensionBound:
    """Dihedral count plus the octahedral and icosahedral bounds with explicit constants.

    With N = q and the prime counts replaced by their prime-number-theorem sizes
    (8 q^(1/8)/log q and 12 q^(1/12)/log q) the scheme inequality gives
    oct <= (3/4) K q^(7/8) log^4 q and ico <= (1/2) K q^(11/12) log^4 q, K = k_prop1 * k_prop2a.
    """
    G = class_group(q)
    K = k_prop1 * k_prop2a
    L = math.log(q)
    dih = (G.h - 1) // 2
    oct_bound = 0.75 * K * q ** (7 / 8) * L**4
    ico_bound = 0.5 * K * q ** (11 / 12) * L**4
    trace = [
        f"dihedral = (h - 1)/2 = ({G.h} - 1)/2 = {dih}",
        f"K = k_prop1 * k_prop2a = {k_prop1:.12g} * {k_prop2a:.12g} = {K:.12g}",
        f"oct <= K (q + N) log^3 q * 3 pi8 / pi8^2, pi8 ~ 8 q^(1/8)/log q  ->  (3/4) K q^(7/8) log^4 q = {oct_bound:.12g}",
        f"ico <= K (q + N) log^3 q * 3 pi12 / pi12^2, pi12 ~ 12 q^(1/12)/log q  ->  (1/2) K q^(11/12) log^4 q = {ico_bound:.12g}",
    ]
    oct_exact = _exact_scheme_bound(K, q, scheme_oct(q))
    ico_exact = _exact_scheme_bound(K, q, scheme_ico(q))
    if oct_exact is not None:
        trace.append(f"oct with exact prime count {len(scheme_oct(q).primes)}: {oct_exact:.12g}")
    if ico_exact is not None:
        trace.append(f"ico with exact prime count {len(scheme_ico(q).primes)}: {ico_exact:.12g}")
    total = dih + oct_bound + ico_bound
    trace.append(f"total = {dih} + {oct_bound:.12g} + {ico_bound:.12g} = {total:.12g}")
    return DimensionBound(
        q=q,
        h=G.h,
        dihedral_dim=dih,
        oct_bound=oct_bound,
        ico_bound=ico_bound,
        total=total,
        constants={"k_prop1": k_prop1, "k_prop2a": k_prop2a},
        oct_bound_exact=oct_exact,
        ico_bound_exact=ico_exact,
        trace=trace,
    )


@dataclass(frozen=True)
class FieldCountReport:
    q: int
    h: int
    h2: int
    h3: int
    r3: int
    cubic_count_standard: int
    cubic_count_three_halves: float
    cubic_count_discrepancy: bool
    m4_bound: float
    m: int | None = None
    genus: int | None = None
    differentials_dim_bound: float | None = None

    def to_json(self) -> dict:
        return asdict(self)


def field_report(q: int, k_prop1: float = K_PROP1_DEFAULT, k_prop2a: float = K_PROP2A_DEFAULT) -> FieldCountReport:
    """Class-group torsion data, cubic and quartic field counts, and X0*(q) genus data.

    ``cubic_count_three_halves`` is the literal (3/2) h3 reading; ``cubic_count_standard``
    is (3^r3 - 1)/2 = h3/2.  Both are kept, with a flag when they differ.
    """
    G = class_group(q)
    h2 = torsion_count(G, 2)
    h3 = torsion_count(G, 3)
    r3 = sum(1 for d in G.invariant_factors if d % 3 == 0)
    if h2 != 0:
        raise AssertionError("odd class number cannot have 2-torsion")
    if h3 != 3**r3 - 1:
        raise AssertionError("3-torsion count disagrees with the 3-rank")
    standard = h3 // 2
    three_halves = 1.5 * h3
    bound = dimension_bound(q, k_prop1, k_prop2a)
    m4 = 0.75 * k_prop1 * k_prop2a * q ** (7 / 8) * math.log(q) ** 4
    m = genus = diff = None
    if (q + 1) % 24 == 0:
        m = (q + 1) // 24
        genus = m - (G.h - 1) // 2
        diff = 0.5 * bound.total - 0.25 * (G.h - 1)
    return FieldCountReport(
        q=q,
        h=G.h,
        h2=h2,
        h3=h3,
        r3=r3,
        cubic_count_standard=standard,
        cubic_count_three_halves=three_halves,
        cubic_count_discrepancy=three_halves != standard,
        m4_bound=m4,
        m=m,
        genus=genus,
        differentials_dim_bound=diff,
    )
