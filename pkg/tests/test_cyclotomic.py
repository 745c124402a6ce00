import cmath

import pytest
from hypothesis import given, strategies as st

from weightone.cyclotomic import CycInt, ring

ORDERS = [1, 3, 5, 7, 9, 15, 21]


def elements(m):
    deg = ring(m).deg
    return st.lists(st.integers(-20, 20), min_size=deg, max_size=deg).map(lambda c: CycInt(m, c))


@st.composite
def triples(draw):
    m = draw(st.sampled_from(ORDERS))
    return m, draw(elements(m)), draw(elements(m)), draw(elements(m))


@given(triples())
def test_ring_axioms(t):
    m, a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0
    assert a * 1 == a


@given(triples())
def test_embedding_is_a_homomorphism(t):
    m, a, b, _ = t
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-8 * (1 + abs(complex(a)) * abs(complex(b)))
    assert abs(complex(a.conjugate()) - complex(a).conjugate()) < 1e-9 * (1 + abs(complex(a)))


@pytest.mark.parametrize("m", ORDERS)
def test_roots_of_unity(m):
    z = CycInt.zeta(m)
    assert z**m == 1
    for k in range(m):
        w = CycInt.zeta(m, k)
        assert abs(abs(complex(w)) - 1) < 1e-12
        assert abs(complex(w) - cmath.exp(2j * cmath.pi * k / m)) < 1e-12
        assert w * w.conjugate() == 1
    assert sum((CycInt.zeta(m, k) for k in range(m)), CycInt.from_int(m, 0)) == (1 if m == 1 else 0)


def test_phi_degrees():
    assert [ring(m).deg for m in (1, 3, 5, 9, 15)] == [1, 2, 4, 6, 8]


def test_str():
    assert str(CycInt.from_int(5, -3)) == "-3"
    assert str(CycInt(3, (0, 1))) == "z"
    assert str(CycInt(5, (1, 0, -2, 1))) == "1 - 2*z^2 + z^3"


def test_power_counts():
    # zeta + zeta^2 = -1 in Z[zeta_3]
    assert CycInt.from_power_counts(3, [0, 1, 1]) == -1
    assert CycInt.from_power_counts(3, [0, 1, 1]).is_rational()
