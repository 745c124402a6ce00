"""Duality between the two large-sieve type inequalities, and mean-value ratio tests.

A :class:`DualityInstance` fixes an orthonormal basis f_1..f_d and test
vectors v_1..v_N through the matrix M[i, n] = <f_i, v_n>.  The smallest
constant in

    sum_n |<u, v_n>|^2 <= Delta <u, u>             (all u)

is the top eigenvalue of M M^H; the smallest constant in

    sum_i |sum_n c_n <f_i, v_n>|^2 <= Delta |c|^2  (all c)

is the top eigenvalue of the Gram matrix G = M^H M.  The two agree since
M M^H and M^H M share their nonzero spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonHermitianGram, NonPositiveArgument
from .rankin import petersson_estimate
from .theta import ThetaForm, dihedral_basis

EULER_GAMMA = 0.57721566490153286060651209


@dataclass(frozen=True)
class DualityInstance:
    M: np.ndarray
    gram: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.M, dtype=np.complex128)
        G = np.asarray(self.gram, dtype=np.complex128)
        if M.ndim != 2 or G.shape != (M.shape[1], M.shape[1]):
            raise DimensionMismatch(f"M is {M.shape}, Gram is {G.shape}")
        scale = max(1.0, float(np.abs(G).max(initial=0.0)))
        if not np.allclose(G, G.conj().T, rtol=0, atol=1e-12 * scale):
            raise NonHermitianGram("Gram matrix is not Hermitian")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "gram", G)

    @property
    def dim(self) -> int:
        return self.M.shape[0]

    @property
    def n_vectors(self) -> int:
        return self.M.shape[1]

    @classmethod
    def from_matrix(cls, M) -> DualityInstance:
        M = np.asarray(M, dtype=np.complex128)
        return cls(M, M.conj().T @ M)

    @classmethod
    def random(cls, dim: int, n: int, rng: np.random.Generator) -> DualityInstance:
        M = rng.standard_normal((dim, n)) + 1j * rng.standard_normal((dim, n))
        return cls.from_matrix(M)


def best_constants(inst: DualityInstance) -> tuple[float, float]:
    """(Delta for the u-inequality, Delta for the c-inequality)."""
    M = inst.M
    delta_u = float(np.linalg.eigvalsh(M @ M.conj().T)[-1]) if inst.dim else 0.0
    delta_c = float(np.linalg.eigvalsh(inst.gram)[-1]) if inst.n_vectors else 0.0
    return delta_u, delta_c


def parseval_check(inst: DualityInstance, c) -> float:
    """|sum_i |(M c)_i|^2 - sum_{n,m} conj(c_n) c_m G[n, m]|."""
    c = np.asarray(c, dtype=np.complex128)
    if c.shape != (inst.n_vectors,):
        raise DimensionMismatch(f"need {inst.n_vectors} coefficients, got shape {c.shape}")
    lhs = float(np.sum(np.abs(inst.M @ c) ** 2))
    rhs = complex(c.conj() @ inst.gram @ c)
    return abs(lhs - rhs)


def exp_integral_E1(x: float) -> float:
    """E1(x) = int_1^inf exp(-x t) / t dt for x > 0.

    Power series below x = 1, modified Lentz continued fraction above.
    """
    x = float(x)
    if not x > 0:
        raise NonPositiveArgument(f"E1 needs x > 0, got {x}")
    if x <= 1.0:
        total, term, k = 0.0, 1.0, 1
        while True:
            term *= -x / k
            add = -term / k
            total += add
            if abs(add) < 1e-17 * abs(total):
                break
            k += 1
        return -EULER_GAMMA - math.log(x) + total
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-x)


def F_Y(n: int, Y: float) -> float:
    return exp_integral_E1(4 * math.pi * n * Y)


@dataclass(frozen=True)
class MeanValueReport:
    q: int
    N: int
    sum_sq: float
    petersson: float
    ratio: float

    def to_json(self) -> dict:
        return {"q": self.q, "N": self.N, "sum_sq": self.sum_sq, "petersson": self.petersson, "ratio": self.ratio}


def lemma2_ratio(f: ThetaForm, N: int, petersson: float) -> MeanValueReport:
    """sum_{n<=N} |a(n)|^2 / ((1 + N/q) <f, f>)."""
    if N > f.N:
        raise DimensionMismatch(f"form has {f.N} coefficients, need {N}")
    if not petersson > 0:
        raise NonPositiveArgument("Petersson norm estimate must be positive")
    a = f.floats[1 : N + 1]
    s = float(np.sum(a * a))
    return MeanValueReport(f.q, N, s, float(petersson), s / ((1 + N / f.q) * petersson))


def prop1_ratios(forms, norms, N: int, c_vectors) -> np.ndarray:
    """sum_f |sum_n c_n a_f(n)/|f||^2 / ((1 + N/q) |c|^2) for each row of c_vectors."""
    c_vectors = np.atleast_2d(np.asarray(c_vectors, dtype=np.complex128))
    if not forms:
        return np.zeros(len(c_vectors))
    q = forms[0].q
    A = np.array([f.floats[1 : N + 1] / math.sqrt(w) for f, w in zip(forms, norms)])
    num = np.sum(np.abs(c_vectors @ A.T) ** 2, axis=1)
    den = (1 + N / q) * np.sum(np.abs(c_vectors) ** 2, axis=1)
    return num / den


def prop1_check(q: int, N: int, trials: int = 100, X: int = 10_000, seed: int = 0) -> float:
    """Worst ratio over random complex c for the dihedral forms of level q, each normalized."""
    forms = dihedral_basis(q, max(N, X))
    if not forms:
        return 0.0
    norms = [petersson_estimate(f, X).value for f in forms]
    rng = np.random.default_rng(seed)
    c = rng.standard_normal((trials, N)) + 1j * rng.standard_normal((trials, N))
    return float(prop1_ratios(forms, norms, N, c).max())


def prop1_instance(forms, norms, N: int) -> DualityInstance:
    """Duality instance with M[f, n] = a_f(n)/|f|, so v_n = sum_f conj(a_f(n)) f/|f|."""
    A = np.array([f.floats[1 : N + 1] / math.sqrt(w) for f, w in zip(forms, norms)])
    return DualityInstance.from_matrix(A.reshape(len(forms), N))


def prop1_best_constant(q: int, N: int, X: int = 10_000) -> float:
    """Smallest K with sum_f |sum c_n a_f(n)/|f||^2 <= K (1 + N/q) |c|^2 on the dihedral subspace."""
    forms = dihedral_basis(q, max(N, X))
    if not forms:
        return 0.0
    norms = [petersson_estimate(f, X).value for f in forms]
    _, delta_c = best_constants(prop1_instance(forms, norms, N))
    return delta_c / (1 + N / q)
