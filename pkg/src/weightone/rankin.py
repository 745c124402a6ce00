"""Rankin-Selberg coefficients b(n) and Petersson norm estimates from their mean.

phi(s) = sum b(n) n^-s = (1 + q^-s) zeta(2s) sum |a(n)|^2 n^-s has a simple
pole at s = 1 with residue 2 pi^2 <f, f> / q.  We estimate the residue R by
the Cesaro mean (2/X) sum_{n<=X} (1 - n/X) b(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import d4_counts
from .errors import InsufficientCoefficients
from .theta import ThetaForm, dihedral_basis

STABILITY_TOLERANCE = 0.1


@dataclass(frozen=True, eq=False)
class RankinSeries:
    """b(0..X), with b(0) unused.  Integer dtype when every a(n) is rational."""

    q: int
    X: int
    b: np.ndarray

    @property
    def exact(self) -> bool:
        return self.b.dtype.kind == "i"


@dataclass(frozen=True)
class PeterssonEstimate:
    value: float
    X: int
    residue: float
    stability_gap: float

    def to_json(self) -> dict:
        return {"value": self.value, "X": self.X, "residue": self.residue, "stability_gap": self.stability_gap}


def _abs_squares(f: ThetaForm, X: int) -> np.ndarray:
    if f.is_rational():
        a = f.table[: X + 1, 0]
        return a * a
    a = f.floats[: X + 1].astype(np.longdouble)
    return a * a


def b_coeffs(f: ThetaForm, X: int) -> RankinSeries:
    """b(n) = sum over n = d^2 e m, e in {1, q}, of |a(m)|^2."""
    if X > f.N:
        raise InsufficientCoefficients(f"need a(n) up to {X}, form has {f.N}")
    q = f.q
    sq = _abs_squares(f, X)
    b = np.zeros(X + 1, dtype=sq.dtype)
    d = 1
    while d * d <= X:
        for e in (1, q):
            step = d * d * e
            if step > X:
                continue
            count = X // step
            b[step : step * count + 1 : step] += sq[1 : count + 1]
        d += 1
    return RankinSeries(q, X, b)


def cesaro_residue(series: RankinSeries, X: int | None = None) -> float:
    X = series.X if X is None else X
    if X > series.X:
        raise InsufficientCoefficients(f"series has length {series.X}, need {X}")
    n = np.arange(1, X + 1, dtype=np.float64)
    w = 1.0 - n / X
    return float(2.0 / X * np.sum(w * np.asarray(series.b[1 : X + 1], dtype=np.float64)))


def petersson_from_residue(residue: float, q: int) -> float:
    return q * residue / (2 * math.pi**2)


def petersson_estimate(f: ThetaForm, X: int) -> PeterssonEstimate:
    """<f, f> from the Cesaro residue at X, with the relative gap to the estimate at X/2."""
    if X < 2:
        raise InsufficientCoefficients("X must be at least 2")
    series = b_coeffs(f, X)
    r_full = cesaro_residue(series, X)
    r_half = cesaro_residue(series, X // 2)
    value = petersson_from_residue(r_full, f.q)
    gap = abs(r_full - r_half) / abs(r_full)
    return PeterssonEstimate(value, X, r_full, gap)


def ramanujan_rankin_violations(series: RankinSeries) -> int:
    """Count of n with b(n) > 2 d4(n)."""
    d4 = d4_counts(series.X)
    b = np.asarray(series.b[1:], dtype=np.float64)
    return int(np.sum(b > 2 * d4[1:] + 1e-9))


def prop2a_ratios(qs, X: int) -> dict[int, float]:
    """max over dihedral forms of <f,f>_est / (q log^3 q), per q; q with h = 1 are skipped."""
    out = {}
    for q in qs:
        forms = dihedral_basis(q, X)
        if not forms:
            continue
        out[q] = max(petersson_estimate(f, X).value for f in forms) / (q * math.log(q) ** 3)
    return out


def prop2a_check(qs, X: int) -> float:
    ratios = prop2a_ratios(qs, X)
    return max(ratios.values()) if ratios else 0.0
