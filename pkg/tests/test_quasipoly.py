from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from ehrtrans.quasipoly import (
    Polynomial, QuasiPolynomial, ValidationFailed, fit, format_congruence, has_gcd_property,
    interpolate, is_symmetric, minimal_period, reciprocity_transform, rescale_argument,
)

coeff = st.builds(F, st.integers(-9, 9), st.integers(1, 4))
polys = st.lists(coeff, min_size=1, max_size=4).map(Polynomial)


@given(st.lists(st.tuples(st.integers(-10, 10), st.integers(-50, 50)), min_size=1, max_size=5, unique_by=lambda p: p[0]))
def test_interpolation_matches_lagrange(points):
    p = interpolate(points)
    assert list(p.coeffs) == oracles.lagrange_coeffs(points)
    assert p(11) == oracles.lagrange_eval(points, 11)


@given(st.integers(1, 5).flatmap(lambda q: st.lists(polys, min_size=q, max_size=q)))
def test_fit_recovers_quasi_polynomial(cons):
    f = QuasiPolynomial(len(cons), tuple(cons))
    g = fit(f, f.period, 3)
    assert g == f
    assert QuasiPolynomial.from_document(g.to_document()) == f


def test_fit_rejects_wrong_degree():
    with pytest.raises(ValidationFailed):
        fit(lambda t: t ** 3, 1, 2)


def test_semantic_equality_and_minimal_period():
    p, r = Polynomial([1, 1]), Polynomial([0, 2])
    f = QuasiPolynomial(4, (p, r, p, r))
    assert minimal_period(f) == 2
    assert f == QuasiPolynomial(2, (p, r))
    assert f.minimize().period == 2
    assert f.constituent(-1) == r


def test_symmetry_and_gcd_property():
    a, b, c = Polynomial([1]), Polynomial([2]), Polynomial([3])
    assert is_symmetric(QuasiPolynomial(4, (a, b, c, b)))
    assert not is_symmetric(QuasiPolynomial(3, (a, b, c)))
    assert has_gcd_property(QuasiPolynomial(4, (a, b, c, b)))
    assert not has_gcd_property(QuasiPolynomial(5, (a, b, b, c, b)))


@given(st.integers(1, 4).flatmap(lambda q: st.lists(polys, min_size=q, max_size=q)), st.integers(0, 3))
def test_reciprocity_transform_is_an_involution(cons, d):
    f = QuasiPolynomial(len(cons), tuple(cons))
    assert reciprocity_transform(reciprocity_transform(f, d), d) == f


@given(st.integers(1, 4).flatmap(lambda q: st.lists(polys, min_size=q, max_size=q)), st.integers(1, 5), st.integers(0, 12))
def test_rescale_argument(cons, s, t):
    f = QuasiPolynomial(len(cons), tuple(cons))
    assert rescale_argument(f, s)(t) == f(s * t)


def test_congruence_display():
    a, b = Polynomial([0, F(-1, 2), F(3, 2)]), Polynomial([1])
    lines = format_congruence(QuasiPolynomial(3, (b, a, a)))
    assert lines == ["1  (t ≡ 0 (mod 3))", "3/2t^2 - 1/2t  (t ≡ 1,2 (mod 3))"]


def test_parity_helpers():
    assert Polynomial([0, 1, 0, 5]).is_odd()
    assert Polynomial([1, 0, 2]).is_even()
    assert Polynomial([1, 2, 3]).compose_scale(-1) == Polynomial([1, -2, 3])
