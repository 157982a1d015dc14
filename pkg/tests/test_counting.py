from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import PAR_VERTS, Q_VERTS, T_VERTS, polytope_and_vector
from ehrtrans.counting import (
    MINUS, PLUS, boundary_count, count, count_facet, count_interior, count_partial_boundary,
)
from ehrtrans.polytope import Polytope


@pytest.mark.parametrize("verts,v,t,expected", [
    (T_VERTS, (0, 0), 1, 5),
    (T_VERTS, (0, 0), 2, 12),
    (Q_VERTS, (0, 0), 2, 7),
    (Q_VERTS, (0, 0), 1, 3),
    (PAR_VERTS, (0, 0), 1, 6),
    (T_VERTS, (1, 1), 0, 1),
    (T_VERTS, (F(1, 2), 0), 0, 0),
])
def test_known_counts(verts, v, t, expected):
    assert count(Polytope(verts), v, t) == expected
    assert oracles.count(verts, v, t) == expected


@given(polytope_and_vector(), st.integers(0, 4))
@settings(max_examples=60)
def test_count_matches_caratheodory_oracle(Pv, t):
    P, v = Pv
    assert count(P, v, t) == oracles.count(P.vertices, v, t)


@given(polytope_and_vector(dims=(2,)), st.integers(1, 4))
@settings(max_examples=40)
def test_interior_matches_oracle_2d(Pv, t):
    P, v = Pv
    assert count_interior(P, v, t) == oracles.count_interior_2d(P.vertices, v, t)


@given(polytope_and_vector(dims=(1,)), st.integers(1, 6))
def test_interior_matches_oracle_1d(Pv, t):
    P, v = Pv
    assert count_interior(P, v, t) == oracles.count_interior_1d(P.vertices, v, t)


def test_trapezoid_interior_counts(T):
    assert [count_interior(T, (0, 0), t) for t in (1, 2, 3)] == [0, 2, 7]


def test_partial_boundaries_of_trapezoid(T):
    # e_1: '-' is the edge x = 0, '+' the slanted edge x - y = 1
    assert count_partial_boundary(T, (0, 0), 1, 1, MINUS) == 2
    assert count_partial_boundary(T, (0, 0), 1, 1, PLUS) == 2
    # e_2: '-' is y = 0 together with the slanted edge, '+' is y = 1
    assert count_partial_boundary(T, (0, 0), 1, 2, MINUS) == 3
    assert count_partial_boundary(T, (0, 0), 1, 2, PLUS) == 3


def test_facet_counts_sum_over_boundary(T):
    # every boundary point of T lies on one facet, except the four vertices on two
    t = 3
    per_facet = sum(count_facet(T, j, (0, 0), t) for j in range(len(T.normals)))
    assert per_facet - 4 == boundary_count(T, (0, 0), t)


def test_bad_arguments(T):
    with pytest.raises(ValueError):
        count(T, (0, 0, 0), 1)
    with pytest.raises(ValueError):
        count(T, (0, 0), -1)
    with pytest.raises(ValueError):
        count_interior(T, (0, 0), 0)
