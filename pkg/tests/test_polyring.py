from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rinehart.polyring import Polynomial, WeightedRing, apply_derivation

from conftest import corpus_ring, corpus_rings


def count_monomials(ring, w):
    return len(ring.monomials_of_weight(w))


class TestRingConstruction:
    def test_rejects_inhomogeneous_f(self):
        with pytest.raises(ValueError, match="not weighted-homogeneous"):
            WeightedRing(["x", "y", "z"], [1, 1, 1], "x^3 + y^2")

    def test_rejects_degree_one(self):
        with pytest.raises(ValueError, match="at least 2"):
            WeightedRing(["x", "y", "z"], [1, 1, 1], "x + y")

    def test_rejects_bad_weights(self):
        with pytest.raises(ValueError):
            WeightedRing(["x", "y"], [1, 0], "x^2 + y^2")

    def test_delta_and_omega_are_exact(self, cubic):
        assert cubic.omega == [Fraction(1, 3)] * 3
        assert cubic.delta == 0
        elliptic = corpus_ring("x^3 + y^4 + z^4")
        assert elliptic.omega == [Fraction(1, 3), Fraction(1, 4), Fraction(1, 4)]
        assert elliptic.delta == Fraction(-1, 6)


class TestNormalForm:
    def test_f_reduces_to_zero(self, cubic):
        assert cubic.normal_form(cubic.f).is_zero()

    def test_ideal_member_plus_remainder(self, cubic):
        y = Polynomial.variable(3, 1)
        p = cubic.f * Polynomial.variable(3, 0) + y
        assert cubic.normal_form(p) == cubic.element("y")

    def test_x_cubed_single_division_step(self, cubic):
        # independent route: x^3 - f = -y^3 - z^3 by plain polynomial arithmetic
        x3 = Polynomial.monomial((3, 0, 0))
        expected = x3 - cubic.f
        assert expected == cubic.element("-y^3 - z^3").rep
        assert cubic.element("x^3").rep == expected

    def test_idempotent(self, cubic):
        p = cubic.element("x^4 + 2*x*y*z + z^3")
        assert cubic.normal_form(p.rep) == p

    def test_canonical_equality(self, cubic):
        a = cubic.element("x^3 + x")
        b = cubic.element("x - y^3 - z^3")
        assert a == b


class TestGradedBasis:
    def test_cubic_degree_zero(self, cubic):
        assert cubic.graded_basis(0) == [(0, 0, 0)]

    def test_cubic_degree_three_loses_lead_monomial(self, cubic):
        basis = cubic.graded_basis(3)
        assert len(basis) == 9
        assert (3, 0, 0) not in basis

    def test_elliptic_degree_two_empty(self, elliptic):
        assert elliptic.graded_basis(2) == []

    def test_negative_degree_empty(self, cubic):
        assert cubic.graded_basis(-1) == []

    @pytest.mark.parametrize("ring", corpus_rings(), ids=lambda r: r.poly_str(r.f))
    def test_dimension_from_exact_sequence(self, ring):
        # dim R_w = #monomials(w) - #monomials(w - d): f is a nonzerodivisor
        for w in range(0, 3 * ring.d + 1):
            expected = count_monomials(ring, w) - count_monomials(ring, w - ring.d)
            assert len(ring.graded_basis(w)) == expected


monomials = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
coefficients = st.fractions(min_value=-6, max_value=6, max_denominator=5)
polys = st.dictionaries(monomials, coefficients, max_size=5).map(
    lambda terms: Polynomial(3, terms))


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_normal_form_is_ring_homomorphism(p, q):
    ring = corpus_ring("x^3 + y^3 + z^3")
    nf = ring.normal_form
    assert nf(p + q) == nf(p) + nf(q)
    assert nf(p * q) == nf(p) * nf(q)


@settings(max_examples=40, deadline=None)
@given(polys)
def test_homogeneous_components_sum_back(p):
    ring = corpus_ring("x^3 + y^3 + z^3")
    element = ring.normal_form(p)
    total = ring.zero()
    for part in element.homogeneous_components().values():
        total = total + part
    assert total == element


@st.composite
def homogeneous_polys(draw):
    w = draw(st.integers(0, 6))
    ring = corpus_ring("x^3 + y^3 + z^3")
    mons = ring.monomials_of_weight(w)
    coeffs = draw(st.lists(coefficients, min_size=len(mons), max_size=len(mons)))
    return Polynomial(3, dict(zip(mons, coeffs))), w


@settings(max_examples=40, deadline=None)
@given(homogeneous_polys())
def test_euler_identity_before_reduction(pair):
    # sum_i omega_i x_i dp/dx_i = (w/d) p as plain polynomials
    p, w = pair
    ring = corpus_ring("x^3 + y^3 + z^3")
    total = Polynomial.zero(3)
    for i in range(3):
        xi = Polynomial.variable(3, i).scale(ring.omega[i])
        total = total + xi * p.partial(i)
    assert total == p.scale(Fraction(w, ring.d))


class TestHomogeneity:
    def test_product_degree_adds(self, cubic):
        a = cubic.element("x^2 + y*z")
        b = cubic.element("x + y")
        product = a * b
        assert product.weighted_degree() == 3
        assert a.weighted_degree() + b.weighted_degree() == 3

    def test_weighted_degrees_with_unequal_weights(self, elliptic):
        assert elliptic.element("x").weighted_degree() == 4
        assert elliptic.element("y*z").weighted_degree() == 6
        assert elliptic.weighted_degree((3, 0, 0)) == 12


class TestApplyDerivation:
    def test_euler_scales_by_normalized_degree(self, cubic):
        euler = [cubic.variable(i).scale(cubic.omega[i]) for i in range(3)]
        r = cubic.element("x^2*y + z^3")
        assert apply_derivation(euler, r) == r.scale(Fraction(3, 3))

    def test_kills_constants(self, cubic):
        coeffs = [cubic.element("y^2"), cubic.element("x*z"), cubic.zero()]
        assert apply_derivation(coeffs, cubic.element("5/7")).is_zero()

    def test_koszul_on_x(self, cubic):
        # D1 = f2 d/dx - f1 d/dy applied to x gives f2 = 3y^2
        d1 = [cubic.element("3*y^2"), cubic.element("-3*x^2"), cubic.zero()]
        assert apply_derivation(d1, cubic.element("x")) == cubic.element("3*y^2")
