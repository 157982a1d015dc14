from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import data_path, polytopes
from oracles import shoelace
from ehrtrans.polytope import (
    Polytope, PolytopeError, central_symmetry, dumps, load, loads, project, project_point,
)


def test_trapezoid_facets(T):
    assert set(T.normals) == {(1, 0), (0, 1), (0, -1), (-1, 1)}
    assert T.volume == F(3, 2)
    assert T.denominator == 1


def test_rhombus_denominator_and_normals(Q):
    assert Q.denominator == 2
    assert set(Q.normals) == {(1, 2), (1, -2), (-1, 2), (-1, -2)}
    assert Q.volume == 1


def test_rhombus_relative_facet_volume(Q):
    # each edge joins (1,0) to (0,1/2): half of the primitive step (-2,1)
    assert {f.relative_volume for f in Q.facets} == {F(1, 2)}


def test_parallelogram(Par):
    assert set(Par.normals) == {(0, 1), (0, -1), (3, -1), (-3, 1)}
    assert Par.volume == 3


def test_interior_points_are_dropped():
    P = Polytope([(0, 0), (2, 0), (0, 2), (F(1, 2), F(1, 2))])
    assert len(P.vertices) == 3


def test_degenerate_input_rejected():
    with pytest.raises(PolytopeError):
        Polytope([(0, 0), (1, 1), (2, 2)])


def test_file_round_trip(T):
    assert loads(dumps(T)) == T
    assert load(data_path("trapezoid.json")) == T
    with pytest.raises(PolytopeError):
        loads('{"dimension": 2, "vertices": [["1/0", "0"]]}')
    with pytest.raises(PolytopeError):
        loads("not json")


def test_projection(T):
    assert sorted(project(T, 2).vertices) == [(F(0),), (F(2),)]
    assert project_point((F(1, 3), F(1, 5)), 1) == (F(1, 5),)


def test_central_symmetry(Q, T):
    cs = central_symmetry(Q)
    assert cs is not None and cs.shift == (0, 0)
    assert central_symmetry(T) is None


@given(polytopes(dims=(2,)))
def test_volume_against_shoelace(P):
    assert P.volume == shoelace(P.vertices)


@given(polytopes())
def test_facet_description_is_tight(P):
    for h in P.inequalities:
        vals = [h.value(v) for v in P.vertices]
        assert min(vals) == 0
    for v in P.vertices:
        assert P.contains(v)
