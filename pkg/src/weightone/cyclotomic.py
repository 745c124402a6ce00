"""Exact arithmetic in Z[zeta_m], power basis modulo the m-th cyclotomic polynomial."""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np
import sympy


class CyclotomicRing:
    """Reduction data for Z[x]/(Phi_m).  Obtain instances through :func:`ring`."""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("order must be positive")
        self.m = m
        x = sympy.Symbol("x")
        phi = [int(c) for c in sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]]
        self.phi = tuple(phi)
        self.deg = len(phi) - 1
        # row k = power-basis coordinates of x^k, 0 <= k < m
        rows = []
        for k in range(m):
            v = [0] * max(k + 1, self.deg)
            v[k] = 1
            rows.append(tuple(self._reduce_long(v)))
        self.powers = tuple(rows)
        self.matrix = np.array(rows, dtype=np.int64).reshape(m, self.deg)
        self.zeta = cmath.exp(2j * math.pi / m)
        self.embed = np.array([self.zeta**j for j in range(self.deg)], dtype=np.complex128)
        # x^j -> x^(-j) as a linear map on coordinates
        self.conj_matrix = np.array([rows[(-j) % m] for j in range(self.deg)], dtype=np.int64).reshape(
            self.deg, self.deg
        )

    def _reduce_long(self, v: list[int]) -> list[int]:
        v = list(v)
        d = self.deg
        for k in range(len(v) - 1, d - 1, -1):
            t = v[k]
            if t:
                for j in range(d + 1):
                    v[k - d + j] -= t * self.phi[j]
        return (v + [0] * d)[:d]

    def reduce(self, v) -> tuple[int, ...]:
        """Coordinates of sum_k v[k] x^k for any length of v."""
        out = [0] * self.deg
        m = self.m
        for k, t in enumerate(v):
            if t:
                for j, r in enumerate(self.powers[k % m]):
                    if r:
                        out[j] += t * r
        return tuple(out)

    def __repr__(self):
        return f"CyclotomicRing({self.m})"


@lru_cache(maxsize=None)
def ring(m: int) -> CyclotomicRing:
    return CyclotomicRing(m)


class CycInt:
    """An element of Z[zeta_m] stored as power-basis coordinates."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        R = ring(m)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != R.deg:
            coeffs = R.reduce(coeffs)
        self.m = m
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, m: int, n: int) -> CycInt:
        return cls(m, (n,) + (0,) * (ring(m).deg - 1))

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CycInt:
        return cls(m, ring(m).powers[k % m])

    @classmethod
    def from_power_counts(cls, m: int, counts) -> CycInt:
        """sum_k counts[k] * zeta^k."""
        return cls(m, ring(m).reduce(counts))

    @property
    def ring(self) -> CyclotomicRing:
        return ring(self.m)

    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.m != self.m:
                raise ValueError(f"mixing Z[zeta_{self.m}] and Z[zeta_{other.m}]")
            return other
        if isinstance(other, (int, np.integer)):
            return CycInt.from_int(self.m, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        u, v = self.coeffs, other.coeffs
        prod = [0] * (len(u) + len(v) - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    prod[i + j] += a * b
        return CycInt(self.m, self.ring.reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result, base = CycInt.from_int(self.m, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CycInt:
        R = self.ring
        out = [0] * R.deg
        for j, a in enumerate(self.coeffs):
            if a:
                for i, r in enumerate(R.powers[(-j) % R.m]):
                    out[i] += a * r
        return CycInt(self.m, out)

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = CycInt.from_int(self.m, int(other))
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __complex__(self):
        return complex(sum(c * z for c, z in zip(self.coeffs, self.ring.embed)))

    def __float__(self):
        return complex(self).real

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"CycInt({self.m}, {self.coeffs})"
