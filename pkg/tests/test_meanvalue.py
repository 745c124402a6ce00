import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from weightone.errors import DimensionMismatch, NonHermitianGram, NonPositiveArgument
from weightone.meanvalue import (
    DualityInstance,
    F_Y,
    best_constants,
    exp_integral_E1,
    lemma2_ratio,
    parseval_check,
    prop1_best_constant,
    prop1_check,
)
from weightone.rankin import petersson_estimate
from weightone.theta import dihedral_basis

# adaptive quadrature of int_1^inf exp(-x t)/t dt
E1_AT_1 = 0.21938393439552029


def quad_E1(x):
    val, _ = integrate.quad(lambda t: math.exp(-x * t) / t, 1, np.inf, epsabs=0, epsrel=1e-13, limit=200)
    return val


@pytest.mark.parametrize("x", [1e-6, 0.01, 0.3, 0.99, 1.0, 1.01, 2.5, 7.0, 30.0, 200.0])
def test_E1_against_quadrature(x):
    assert exp_integral_E1(x) == pytest.approx(quad_E1(x), rel=1e-10)


def test_E1_frozen():
    assert quad_E1(1.0) == pytest.approx(E1_AT_1, rel=1e-12)
    assert exp_integral_E1(1.0) == pytest.approx(E1_AT_1, rel=1e-10)


@pytest.mark.parametrize("x", [0.5, 1, 5, 20])
def test_E1_brackets(x):
    assert math.exp(-x) / (x + 1) <= exp_integral_E1(x) <= math.exp(-x) / x


@given(st.floats(1e-4, 50), st.floats(1e-4, 50))
def test_E1_decreasing(a, b):
    if a < b:
        assert exp_integral_E1(a) > exp_integral_E1(b)


def test_E1_domain():
    with pytest.raises(NonPositiveArgument):
        exp_integral_E1(0.0)
    assert F_Y(1, 1 / (4 * math.pi)) == pytest.approx(E1_AT_1, rel=1e-10)


def test_orthonormal_vectors():
    inst = DualityInstance.from_matrix(np.eye(5)[:, :3])
    assert best_constants(inst) == pytest.approx((1.0, 1.0))


def test_single_vector():
    v = np.array([[1 + 2j], [3.0], [-1j]])
    du, dc = best_constants(DualityInstance.from_matrix(v))
    assert du == pytest.approx(15.0) and dc == pytest.approx(15.0)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 20), st.integers(1, 50), st.integers(0, 2**32 - 1))
def test_best_constants_match_svd(d, n, seed):
    rng = np.random.default_rng(seed)
    inst = DualityInstance.random(d, n, rng)
    du, dc = best_constants(inst)
    sigma = np.linalg.svd(inst.M, compute_uv=False)[0] ** 2
    assert abs(du - dc) <= 1e-9 * max(1.0, du)
    assert du == pytest.approx(sigma, rel=1e-9)
    # shared nonzero spectrum
    a = np.sort(np.linalg.eigvalsh(inst.M @ inst.M.conj().T))[::-1][: min(d, n)]
    b = np.sort(np.linalg.eigvalsh(inst.gram))[::-1][: min(d, n)]
    assert np.allclose(a, b, rtol=0, atol=1e-9 * max(1.0, du))


def brute_parseval_sides(inst, c):
    """Explicit double sums, no matrix products."""
    d, n = inst.M.shape
    lhs = sum(abs(sum(c[k] * inst.M[i, k] for k in range(n))) ** 2 for i in range(d))
    rhs = sum(c[k].conjugate() * c[l] * inst.gram[k, l] for k in range(n) for l in range(n))
    return lhs, rhs


def test_parseval():
    rng = np.random.default_rng(7)
    inst = DualityInstance.random(4, 7, rng)
    assert parseval_check(inst, np.zeros(7)) == 0
    e1 = np.zeros(7)
    e1[0] = 1
    assert parseval_check(inst, e1) < 1e-12
    assert np.sum(np.abs(inst.M[:, 0]) ** 2) == pytest.approx(inst.gram[0, 0].real)
    c = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    lhs, rhs = brute_parseval_sides(inst, c)
    assert abs(lhs - rhs) <= 1e-9 * lhs
    assert parseval_check(inst, c) <= 1e-9 * lhs
    with pytest.raises(DimensionMismatch):
        parseval_check(inst, np.ones(3))


def test_non_hermitian_rejected():
    with pytest.raises(NonHermitianGram):
        DualityInstance(np.ones((2, 2)), np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_lemma2_ratio():
    f = dihedral_basis(23, 10_000)[0]
    w = petersson_estimate(f, 10_000).value
    r1 = lemma2_ratio(f, 1, w)
    assert r1.sum_sq == 1.0
    r = lemma2_ratio(f, 23, w)
    assert r.sum_sq == float(np.sum(f.table[1:24, 0] ** 2))
    assert 0 < r.ratio < 100
    sums = [lemma2_ratio(f, N, w).sum_sq for N in range(1, 300)]
    assert all(a <= b for a, b in zip(sums, sums[1:]))


def test_prop1():
    assert prop1_check(7, 10) == 0.0
    forms = dihedral_basis(47, 10_000)
    norms = [petersson_estimate(f, 10_000).value for f in forms]
    from weightone.meanvalue import prop1_ratios

    onehot = np.zeros(47)
    onehot[0] = 1
    expected = sum(1 / w for w in norms) / (1 + 47 / 47)
    assert prop1_ratios(forms, norms, 47, onehot)[0] == pytest.approx(expected)
    worst_random = prop1_check(47, 47, trials=200)
    assert 0 < worst_random <= prop1_best_constant(47, 47) + 1e-12
