import itertools

import pytest
from hypothesis import given, strategies as st

from weightone.errors import IllegalValue, MissingCoefficient
from weightone.hecke_poly import (
    ICO_VALUES,
    OCT_VALUES,
    PHI_MINUS,
    PHI_PLUS,
    GoldenValue,
    IntPoly,
    all_assignments,
    hecke_P,
    ico_combination,
    oct_combination,
    synth_stream,
    verify_ico_identity,
    verify_oct_identity,
)


def test_P_small():
    assert hecke_P(0) == IntPoly([1])
    assert hecke_P(1) == IntPoly([0, 1])
    assert hecke_P(2).coeffs == (-1, -1, 1)
    assert hecke_P(3).coeffs == (1, -1, -2, 1)
    assert str(hecke_P(3)) == "x^3 - 2*x^2 - x + 1"


@pytest.mark.parametrize("n", range(13))
def test_degree_and_leading_coefficient(n):
    assert hecke_P(n).degree == n
    assert hecke_P(n).coeffs[-1] == 1


@given(st.integers(-10**6, 10**6), st.integers(1, 12))
def test_recursion_at_integers(x, n):
    assert hecke_P(n + 1)(x) == (x - 1) * hecke_P(n)(x) - hecke_P(n - 1)(x)


def test_identities():
    assert verify_oct_identity()
    assert verify_ico_identity()
    assert oct_combination()(0) == 1 and oct_combination()(3) == 1
    assert ico_combination()(-1) == 1
    assert ico_combination()(PHI_PLUS) == 1


def test_golden_arithmetic():
    for phi in (PHI_PLUS, PHI_MINUS):
        assert phi * phi - phi - 1 == 0
    assert PHI_PLUS * PHI_MINUS == -1
    assert PHI_PLUS + PHI_MINUS == 1
    assert abs(float(PHI_PLUS) - 1.6180339887498949) < 1e-15
    with pytest.raises(ValueError):
        GoldenValue(1, 0)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_golden_embedding(a, b, c, d):
    x = GoldenValue(2 * a + (b % 2), b)
    y = GoldenValue(2 * c + (d % 2), d)
    assert abs(float(x * y) - float(x) * float(y)) < 1e-9 * (1 + abs(float(x)) * abs(float(y)))


def test_value_sets_evaluate_to_one():
    for x in OCT_VALUES:
        assert hecke_P(4)(x) - hecke_P(2)(x) - hecke_P(1)(x) == 1
    for x in ICO_VALUES:
        assert hecke_P(6)(x) - hecke_P(4)(x) - hecke_P(1)(x) == 1


def test_oct_stream_zero_assignment():
    s = synth_stream("octahedral", 65539, {2: 0}, 65539)
    assert s.coefficient(4) == 0
    assert s.coefficient(16) == -1
    assert s.identity_lhs(2) == 1


@pytest.mark.parametrize("q", [23, 65539, 1000003])
def test_streams_satisfy_identities(q):
    for kind, root in (("octahedral", 8), ("icosahedral", 12)):
        primes = [p for p in (2, 3, 5) if p != q]
        for assignment in all_assignments(kind, primes):
            N = max(p**root for p in primes)
            s = synth_stream(kind, q, assignment, N)
            for p in primes:
                assert s.identity_lhs(p) == 1


def test_illegal_values():
    with pytest.raises(IllegalValue):
        synth_stream("octahedral", 23, {2: 2}, 100)
    with pytest.raises(IllegalValue):
        synth_stream("octahedral", 23, {2: PHI_PLUS}, 100)
    with pytest.raises(IllegalValue):
        synth_stream("icosahedral", 23, {2: 1}, 100)
    with pytest.raises(IllegalValue):
        synth_stream("tetrahedral", 23, {2: 0}, 100)
    with pytest.raises(MissingCoefficient):
        synth_stream("octahedral", 23, {2: 0}, 100).coefficient(9)
