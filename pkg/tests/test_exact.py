import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ehrtrans import exact

small = st.integers(-20, 20)


def test_ceil_floor_on_fractions():
    assert exact.rational_ceil(F(-1, 2)) == 0
    assert exact.rational_floor(F(-1, 2)) == -1
    assert exact.rational_ceil(F(7, 1)) == 7


def test_primitive_and_gcd():
    assert exact.primitive((4, -6, 2)) == (2, -3, 1)
    assert exact.vector_gcd((0, 0, 9)) == 9


def test_vector_literals_round_trip():
    v = exact.parse_vector("17/100,52/100")
    assert v == (F(17, 100), F(13, 25))
    assert ",".join(map(exact.format_rational, v)) == "17/100,13/25"
    with pytest.raises(ValueError):
        exact.parse_vector("1/2,,3")


@given(small, small)
def test_xgcd_bezout(a, b):
    g, x, y = exact.xgcd(a, b)
    assert g == math.gcd(a, b)
    assert a * x + b * y == g


@given(st.lists(st.tuples(small, small, small), min_size=1, max_size=4), st.tuples(small, small, small))
def test_coset_rep_is_canonical(gens, c):
    L = exact.hnf(gens, 3)
    r = exact.canonical_coset_rep(c, L)
    # r - c lies in L, and shifting c by a lattice vector keeps the representative
    assert L.contains(tuple(x - y for x, y in zip(r, c)))
    shifted = tuple(x + 3 * g for x, g in zip(c, gens[0]))
    assert exact.canonical_coset_rep(shifted, L) == r


@given(st.lists(st.tuples(small, small), min_size=2, max_size=2))
def test_det_matches_formula(M):
    (a, b), (c, d) = M
    assert exact.det(M) == a * d - b * c


@given(st.tuples(small, small, small).filter(lambda a: math.gcd(*a) == 1))
def test_unimodular_completion(a):
    U = exact.unimodular_completion(a)
    assert abs(exact.det(U)) == 1
    first = tuple(sum(a[i] * U[i][j] for i in range(3)) for j in range(3))
    assert first == (1, 0, 0)


def test_integer_scale():
    assert exact.integer_scale((F(1, 2), F(-1, 3))) == (3, -2)
