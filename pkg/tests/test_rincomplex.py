from fractions import Fraction
from itertools import combinations

import pytest

from rinehart.derlie import OneCochain, derivation_algebra
from rinehart.polyring import Polynomial, WeightedRing
from rinehart.rincomplex import (cohomology_table, d0, d1, d1_on_generator,
                                 d1_pair, default_window, verify_degree_zero_concentration)

from conftest import corpus_ring, corpus_rings

RINGS = corpus_rings()
IDS = [r.poly_str(r.f) for r in RINGS]


class TestD0:
    def test_constants_map_to_zero(self, cubic):
        assert d0(cubic.one()).is_zero()

    def test_on_x_for_the_cubic(self, cubic):
        chain = d0(cubic.element("x"))
        assert [str(v) for v in chain.values] == ["1/3*x", "3*y^2", "3*z^2", "0"]

    @pytest.mark.parametrize("text,w", [("x*y", 2), ("x^2*z - y^3", 3)])
    def test_euler_value_is_normalized_degree(self, cubic, text, w):
        r = cubic.element(text)
        assert d0(r).values[0] == r.scale(Fraction(w, cubic.d))


class TestD1Formulas:
    def test_psi4_is_a_cocycle_when_delta_zero(self, cubic):
        algebra = derivation_algebra(cubic)
        assert d1_on_generator(algebra, 3, cubic.one()).is_zero()

    def test_row1_on_constants(self, cubic):
        algebra = derivation_algebra(cubic)
        assert d1_on_generator(algebra, 0, cubic.one()).is_zero()

    def test_row4_euler_twist(self, cubic):
        # delta = 0, so d1(r psi4)(Delta) = E(r) = (m/d) r
        algebra = derivation_algebra(cubic)
        r = cubic.element("x*y*z")
        assert d1_on_generator(algebra, 3, r).value_on_delta == r.scale(1)

    def test_row4_with_nonzero_delta(self, elliptic):
        # d1(r psi4)(Delta) = E(r) + delta*r
        algebra = derivation_algebra(elliptic)
        r = elliptic.element("y")
        expected = r.scale(Fraction(3, 12) + elliptic.delta)
        assert d1_on_generator(algebra, 3, r).value_on_delta == expected


class TestD1:
    def test_psi4_cochain_closed(self, cubic):
        algebra = derivation_algebra(cubic)
        assert d1(algebra.psi_cochain(3)).is_zero()

    def test_x_psi4(self, cubic):
        algebra = derivation_algebra(cubic)
        chain = algebra.psi_cochain(3).scale(cubic.element("x"))
        image = d1(chain)
        assert image.value_on_delta == cubic.element("1/3*x")
        assert image.degrees() == {1}

    def test_d1_preserves_degree_with_shifted_grading(self, elliptic):
        # deg Delta = 12 - 10 = 2, so a degree-w cochain maps to a
        # two-cochain whose value on Delta has weighted degree w + 2
        algebra = derivation_algebra(elliptic)
        chain = algebra.psi_cochain(0)  # degree d1 = 4
        image = d1(chain)
        assert image.is_zero() or image.degrees() == {4}

    def test_rejects_non_functional(self, cubic):
        bogus = OneCochain(cubic, [cubic.one(), cubic.zero(),
                                   cubic.zero(), cubic.zero()])
        with pytest.raises(ValueError, match="outside"):
            d1(bogus)

    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_complex_property_on_window(self, ring):
        """d1(d0(r)) = 0 for every homogeneous r in the default window.

        Batched per degree: decompose all d0 images over the spanning set
        with one elimination, then push through the generator formulas.
        """
        algebra = derivation_algebra(ring)
        lo, hi = default_window(ring)
        for w in range(max(lo, 0), hi + 1):
            basis = ring.graded_basis(w)
            if not basis:
                continue
            chains = [d0(ring.element(Polynomial.monomial(mon))) for mon in basis]
            spanning = algebra.c1_spanning(w)
            matrix = algebra.c1_matrix(w)
            rhs_rows = [list(row) for row in zip(*[algebra.c1_coords(c, w)
                                                   for c in chains])]
            solutions = matrix.solve_columns(rhs_rows)
            assert solutions is not None, f"d0 image escapes C^1 at degree {w}"
            for column in range(len(chains)):
                total = ring.zero()
                for (i, mon), coeff_row in zip(spanning, solutions):
                    c = coeff_row[column]
                    if c:
                        r = ring.element(Polynomial.monomial(mon, c))
                        total = total + d1_on_generator(algebra, i, r).value_on_delta
                assert total.is_zero(), f"d1(d0) != 0 at degree {w}"

    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_phi_relation_rows_map_to_zero(self, ring):
        # the formula map is well defined: relations among psi rows die
        algebra = derivation_algebra(ring)
        for j in range(4):
            total = ring.zero()
            for i in range(4):
                r = ring.element(algebra.factorization.phi[j][i])
                total = total + d1_on_generator(algebra, i, r).value_on_delta
            assert total.is_zero()

    @pytest.mark.parametrize("ring", RINGS[:3], ids=IDS[:3])
    def test_spanning_kernel_maps_to_zero(self, ring):
        algebra = derivation_algebra(ring)
        for w in range(0, 2 * ring.d + 1):
            spanning = algebra.c1_spanning(w)
            if not spanning:
                continue
            for vec in algebra.c1_matrix(w).kernel_basis():
                total = ring.zero()
                for (i, mon), c in zip(spanning, vec):
                    if c:
                        r = ring.element(Polynomial.monomial(mon, c))
                        total = total + d1_on_generator(algebra, i, r).value_on_delta
                assert total.is_zero()


class TestIntrinsicAgreesWithFormulas:
    @pytest.mark.parametrize("ring", RINGS[:3] + [corpus_ring("x^3 + y^4 + z^4")],
                             ids=IDS[:3] + ["x^3 + y^4 + z^4"])
    def test_pair_evaluation_matches_wedge_scaling(self, ring):
        # two routes to d1(xi)(g_i ^ g_j): the intrinsic formula, and
        # wedge_scalar * d1(xi)(Delta) from the generator formulas
        algebra = derivation_algebra(ring)
        samples = []
        for row in range(4):
            samples.append(algebra.psi_cochain(row))
            samples.append(algebra.psi_cochain(row).scale(ring.variable(0)))
        samples.append(d0(ring.element("x*y + z^2")
                          if ring.weights == [1, 1, 1] else ring.variable(2)))
        for xi in samples:
            on_delta = d1(xi).value_on_delta
            for i, j in combinations(range(4), 2):
                assert d1_pair(algebra, xi, i, j) == algebra.wedge_scalar(i, j) * on_delta


class TestCohomologyTable:
    def test_cubic_concentration(self, cubic):
        table = cohomology_table(cubic)
        assert table.totals() == (1, 1, 1)
        zero = table.record(0)
        assert (zero.dim_h0, zero.dim_h1, zero.dim_h2) == (1, 1, 1)
        assert len(table.h1_representatives) == 1
        rep = table.h1_representatives[0]
        assert rep.label == "psi4"
        algebra = derivation_algebra(cubic)
        assert rep.cochain == algebra.psi_cochain(3)
        assert table.h2_representatives == ["1"]

    @pytest.mark.parametrize("d,genus", [(3, 1), (4, 3), (5, 6), (6, 10)])
    def test_genus_sweep(self, d, genus):
        ring = corpus_ring(f"x^{d} + y^{d} + z^{d}")
        table = cohomology_table(ring)
        assert table.totals() == (1, genus, genus)
        assert table.record(0).dim_h1 == genus

    def test_elliptic_vanishing(self, elliptic):
        assert cohomology_table(elliptic).totals() == (1, 0, 0)

    def test_mixed_weights_dimension_one(self):
        ring = corpus_ring("x^2 + y^3 + z^6")
        table = cohomology_table(ring)
        assert table.totals() == (1, 1, 1)

    @pytest.mark.parametrize("weights,f,mu", [
        ([15, 10, 6], "x^2 + y^3 + z^5", 8),
        ([6, 4, 3], "x^2 + y^3 + z^4", 6),
    ])
    def test_rational_double_points_have_no_cohomology(self, weights, f, mu):
        # d - d1 - d2 - d3 < 0, so both H^1 and H^2 vanish; the window
        # here spans over ninety degrees with tiny graded pieces
        ring = WeightedRing(["x", "y", "z"], weights, f)
        report = verify_degree_zero_concentration(ring)
        assert report.passed
        assert report.table.totals() == (1, 0, 0)
        from rinehart.milnor import milnor_number, milnor_product_formula
        assert milnor_number(ring) == milnor_product_formula(ring) == mu

    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_euler_characteristic_per_degree(self, ring):
        for r in cohomology_table(ring).records:
            assert (r.dim_c0 - r.dim_c1 + r.dim_c2
                    == r.dim_h0 - r.dim_h1 + r.dim_h2)

    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_verify_degree_zero_concentration(self, ring):
        report = verify_degree_zero_concentration(ring)
        assert report.passed, [a for a in report.assertions if not a.passed]

    def test_window_override(self, cubic):
        table = cohomology_table(cubic, (-1, 2))
        assert table.window == (-1, 2)
        assert len(table.records) == 4

    def test_h2_representatives_for_quintic(self):
        ring = corpus_ring("x^5 + y^5 + z^5")
        table = cohomology_table(ring)
        # R_2 has dimension 6; representatives are its monomials
        assert len(table.h2_representatives) == 6
        assert "x*y" in table.h2_representatives
