import os
import sys
from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from ehrtrans.polytope import Polytope, PolytopeError

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("repo", deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("repo")

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")

T_VERTS = [(0, 0), (1, 0), (2, 1), (0, 1)]
Q_VERTS = [(1, 0), (-1, 0), (0, F(1, 2)), (0, F(-1, 2))]
PAR_VERTS = [(0, 0), (1, 0), (1, 3), (2, 3)]


def rhombus(n):
    return Polytope([(1, 0), (-1, 0), (0, F(1, n)), (0, F(-1, n))])


@pytest.fixture(scope="session")
def T():
    return Polytope(T_VERTS)


@pytest.fixture(scope="session")
def Q():
    return Polytope(Q_VERTS)


@pytest.fixture(scope="session")
def Par():
    return Polytope(PAR_VERTS)


def data_path(name):
    return os.path.join(DATA, name)


# -- strategies ---------------------------------------------------------------

def rationals(den_max=4, lo=-2, hi=2):
    return st.builds(lambda n, q: F(n, q), st.integers(lo * den_max, hi * den_max), st.integers(1, den_max)).filter(
        lambda x: lo <= x <= hi
    )


def _polytope_or_none(points):
    try:
        return Polytope(points)
    except PolytopeError:
        return None


@st.composite
def polytopes(draw, dims=(1, 2, 3), den_max=4, max_vertices=None, span=2):
    d = draw(st.sampled_from(dims))
    n = draw(st.integers(d + 1, max_vertices or d + 2))
    coord = rationals(den_max, -1, 1) if d == 3 else rationals(den_max, -span, span)
    pts = draw(st.lists(st.tuples(*[coord] * d), min_size=n, max_size=n))
    P = _polytope_or_none(pts)
    assume(P is not None and len(P.normals) <= 8)
    return P


def vectors(d, den_max=4):
    return st.tuples(*[rationals(den_max, -1, 1)] * d)


@st.composite
def polytope_and_vector(draw, dims=(1, 2, 3), den_max=4):
    P = draw(polytopes(dims, den_max))
    v = draw(vectors(P.dim, den_max))
    return P, v


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num][1])
