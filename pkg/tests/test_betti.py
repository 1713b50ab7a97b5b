"""Betti tables: oracle examples, closed formulas, table algebra, cross-checks."""

import random

import pytest

from mixprod import (
    GF2,
    RATIONALS,
    BettiTable,
    FieldSpec,
    GroundSet,
    GroundTooLargeForOracle,
    Ideal,
    MixedSpec,
    Monomial,
    NotProper,
    OutOfRange,
    Polynomial,
    UnsupportedShape,
    closed_betti_block,
    closed_betti_dual_mixed,
    closed_betti_mixed,
    closed_betti_product,
    closed_betti_table,
    hilbert_numerator,
    hochster_betti,
    hochster_betti_restriction,
    is_linear_resolution,
    k_polynomial,
    make_mixed,
    minimalize,
    projective_dimension,
)

GFP = FieldSpec(32003)


def spec(n, m, *terms):
    return MixedSpec(GroundSet(n, m), tuple(terms))


class TestOracle:
    def test_pairs_ideal_three_vars(self):
        table = hochster_betti(make_mixed(spec(3, 0, (2, 0))))
        assert table.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
        assert table.ideal_totals() == [3, 2]

    def test_principal_full_product(self):
        table = hochster_betti(make_mixed(spec(3, 2, (3, 2))))
        assert table.entries == {(0, 0): 1, (1, 5): 1}

    def test_bidegree_one_product(self):
        table = hochster_betti(make_mixed(spec(2, 2, (1, 1))))
        assert table.entries == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}

    def test_rejects_improper(self):
        g = GroundSet(2, 0)
        with pytest.raises(NotProper):
            hochster_betti(Ideal(g, ()))

    def test_oracle_bound(self):
        g = GroundSet(23, 0)
        I = make_mixed(MixedSpec(g, ((23, 0),)))
        with pytest.raises(GroundTooLargeForOracle):
            hochster_betti(I)

    def test_beta_accessors(self):
        table = hochster_betti(make_mixed(spec(3, 0, (2, 0))))
        assert table.beta(1, 2) == 3
        assert table.beta_ideal(0, 2) == 3
        assert table.beta(4, 4) == 0


class TestClosedBlock:
    def test_four_vars_degree_two(self):
        assert [closed_betti_block(4, 2, i) for i in range(4)] == [6, 8, 3, 0]

    def test_principal(self):
        assert closed_betti_block(3, 3, 0) == 1
        assert all(closed_betti_block(3, 3, i) == 0 for i in range(1, 5))

    def test_kernel_dimension_case(self):
        assert closed_betti_block(3, 2, 1) == 2

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            closed_betti_block(3, 0, 0)
        with pytest.raises(OutOfRange):
            closed_betti_block(3, 4, 0)
        with pytest.raises(OutOfRange):
            closed_betti_block(3, 2, -1)


class TestClosedProduct:
    def test_square_case(self):
        assert [closed_betti_product(2, 2, 1, 1, i) for i in range(4)] == [4, 4, 1, 0]

    def test_asymmetric_case(self):
        assert [closed_betti_product(2, 2, 1, 2, i) for i in range(4)] == [2, 1, 0, 0]

    def test_principal(self):
        assert closed_betti_product(1, 1, 1, 1, 0) == 1
        assert closed_betti_product(1, 1, 1, 1, 1) == 0

    def test_degenerate_degrees_delegate(self):
        assert closed_betti_product(4, 3, 2, 0, 1) == closed_betti_block(4, 2, 1)
        assert closed_betti_product(4, 3, 0, 2, 1) == closed_betti_block(3, 2, 1)
        with pytest.raises(OutOfRange):
            closed_betti_product(4, 3, 0, 0, 0)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            closed_betti_product(2, 2, 3, 1, 0)


class TestClosedMixed:
    def test_square_mixed(self):
        values = [closed_betti_mixed(2, 2, 1, 2, 2, 1, i) for i in range(4)]
        assert values == [4, 3, 0, 0]

    def test_matches_oracle_on_five_vertices(self):
        table = hochster_betti(make_mixed(spec(3, 2, (2, 2), (3, 1))))
        for i in range(6):
            assert closed_betti_mixed(3, 2, 2, 2, 3, 1, i) == table.total(i + 1)

    def test_degree_zero_edge(self):
        # J1 + I1 in two blocks of two: the maximal ideal of four variables
        assert closed_betti_mixed(2, 2, 0, 1, 1, 0, 1) == 6
        table = hochster_betti(make_mixed(spec(2, 2, (0, 1), (1, 0))))
        for i in range(5):
            assert closed_betti_mixed(2, 2, 0, 1, 1, 0, i) == table.total(i + 1)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            closed_betti_mixed(2, 2, 1, 1, 1, 0, 1)  # q = s
        with pytest.raises(OutOfRange):
            closed_betti_mixed(2, 2, 1, 1, 2, 1, 1)  # t = r


class TestClosedDualMixed:
    def test_six_vertex_value(self):
        assert closed_betti_dual_mixed(3, 3, 2, 3, 3, 1, 1) == 21
        table = hochster_betti(make_mixed(spec(3, 3, (3, 0), (2, 1), (0, 3))))
        for i in range(7):
            assert closed_betti_dual_mixed(3, 3, 2, 3, 3, 1, i) == table.total(i + 1)

    def test_small_parameters(self):
        table = hochster_betti(make_mixed(spec(2, 2, (2, 0), (1, 1), (0, 2))))
        for i in range(5):
            assert closed_betti_dual_mixed(2, 2, 1, 2, 2, 1, i) == table.total(i + 1)

    def test_bound_violation(self):
        with pytest.raises(OutOfRange):
            closed_betti_dual_mixed(3, 3, 2, 3, 2, 1, 1)  # q = s


class TestClosedTable:
    def test_graded_two_products(self):
        table = closed_betti_table(spec(2, 2, (1, 2), (2, 1)))
        assert table.entries == {(0, 0): 1, (1, 3): 4, (2, 4): 3}

    def test_matches_oracle_graded(self):
        for s in [
            spec(3, 2, (2, 1)),
            spec(4, 0, (2, 0)),
            spec(2, 3, (1, 2), (2, 1)),
            spec(3, 3, (3, 0), (2, 1), (0, 3)),
            spec(3, 2, (0, 1), (2, 0)),  # block-power sum via the mixed formula
        ]:
            assert closed_betti_table(s).entries == hochster_betti(make_mixed(s)).entries

    def test_unsupported(self):
        with pytest.raises(UnsupportedShape):
            closed_betti_table(spec(2, 2, (0, 0)))
        with pytest.raises(UnsupportedShape):
            closed_betti_table(spec(4, 4, (1, 3), (2, 2), (3, 1)))


class TestTableAlgebra:
    def test_projective_dimension(self):
        assert projective_dimension(hochster_betti(make_mixed(spec(3, 0, (2, 0))))) == 2
        assert projective_dimension(hochster_betti(make_mixed(spec(2, 3, (2, 3))))) == 1
        assert (
            projective_dimension(hochster_betti(make_mixed(spec(2, 2, (1, 2), (2, 1)))))
            == 2
        )

    def test_linear_resolution_flags(self):
        assert is_linear_resolution(hochster_betti(make_mixed(spec(4, 0, (2, 0)))), 2)
        assert is_linear_resolution(
            hochster_betti(make_mixed(spec(2, 2, (1, 2), (2, 1)))), 3
        )
        g = GroundSet(5, 0)
        I = minimalize([Monomial(g, 0b00011), Monomial(g, 0b11100)], g)
        assert not is_linear_resolution(hochster_betti(I), 2)

    def test_table_validation(self):
        g = GroundSet(2, 0)
        with pytest.raises(ValueError):
            BettiTable(g, RATIONALS, {(0, 0): 2})
        with pytest.raises(ValueError):
            BettiTable(g, RATIONALS, {(0, 0): 1, (0, 1): 1})
        with pytest.raises(ValueError):
            BettiTable(g, RATIONALS, {(0, 0): 1, (2, 1): 1})
        with pytest.raises(ValueError):
            BettiTable(g, RATIONALS, {(0, 0): 1, (1, 2): 0})

    def test_diagram_renders(self):
        table = hochster_betti(make_mixed(spec(3, 0, (2, 0))))
        out = table.diagram()
        assert "0" in out and "3" in out and "." in out


class TestPolynomials:
    def test_polynomial_basics(self):
        p = Polynomial((1, 0, -3, 2))
        assert str(p) == "1 - 3*t^2 + 2*t^3"
        assert p.degree == 3
        assert Polynomial((0, 0)) == Polynomial(())
        assert str(Polynomial(())) == "0"
        q = Polynomial((1, -1))
        assert q * q == Polynomial((1, -2, 1))
        assert p + Polynomial((0, 0, 3, -2)) == Polynomial((1,))

    def test_principal_single_variable(self):
        g = GroundSet(1, 0)
        I = minimalize([Monomial(g, 1)], g)
        assert hilbert_numerator(I) == Polynomial((1, -1))
        assert k_polynomial(hochster_betti(I)) == Polynomial((1, -1))

    def test_pairs_ideal(self):
        I = make_mixed(spec(3, 0, (2, 0)))
        expected = Polynomial((1, 0, -3, 2))
        assert hilbert_numerator(I) == expected
        assert k_polynomial(hochster_betti(I)) == expected

    def test_bidegree_one_product(self):
        I = make_mixed(spec(2, 2, (1, 1)))
        expected = Polynomial((1, 0, -4, 4, -1))
        assert hilbert_numerator(I) == expected
        assert k_polynomial(hochster_betti(I)) == expected


class TestCrossChecks:
    def test_restriction_oracle_agrees(self):
        rng = random.Random(13)
        checked = 0
        while checked < 25:
            total = rng.randint(2, 6)
            n = rng.randint(0, total)
            g = GroundSet(n, total - n)
            gens = [
                Monomial(g, rng.randint(1, g.full_mask))
                for _ in range(rng.randint(1, 4))
            ]
            I = minimalize(gens, g)
            if not I.is_proper:
                continue
            for field in (RATIONALS, GF2):
                a = hochster_betti(I, field)
                b = hochster_betti_restriction(I, field)
                assert a.entries == b.entries
            checked += 1

    def test_block_swap_symmetry(self):
        for n, m, q, r in [(3, 2, 2, 1), (4, 2, 1, 2), (2, 3, 2, 2)]:
            a = hochster_betti(make_mixed(spec(n, m, (q, r))))
            b = hochster_betti(make_mixed(spec(m, n, (r, q))))
            totals_a = [a.total(i) for i in range(1, 8)]
            totals_b = [b.total(i) for i in range(1, 8)]
            assert totals_a == totals_b

    def test_field_independence_for_mixed_products(self):
        for s in [spec(3, 2, (2, 1)), spec(2, 2, (1, 2), (2, 1)), spec(4, 0, (2, 0))]:
            I = make_mixed(s)
            tables = [hochster_betti(I, f).entries for f in (RATIONALS, GF2, GFP)]
            assert tables[0] == tables[1] == tables[2]

    def test_characteristic_dependence_exists_in_general(self):
        # the projective-plane face ideal separates GF(2) from the rationals
        triangles = [
            (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
            (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
        ]
        g = GroundSet(6, 0)
        from mixprod import SimplicialComplex, complex_to_ideal

        D = SimplicialComplex.from_faces(g, [sum(1 << v for v in t) for t in triangles])
        I = complex_to_ideal(D)
        assert hochster_betti(I, RATIONALS).entries != hochster_betti(I, GF2).entries
