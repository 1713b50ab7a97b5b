"""Alexander duality: general algorithm, prime-intersection oracle, closed forms."""

import random

import pytest

from mixprod import (
    GroundSet,
    Ideal,
    MixedSpec,
    Monomial,
    NotProper,
    OutOfRange,
    UnsupportedShape,
    closed_dual,
    dual,
    dual_prime_intersection,
    intersect_ideals,
    make_mixed,
    minimalize,
)


def random_proper(rng, size):
    n = rng.randint(0, size)
    g = GroundSet(n, size - n)
    gens = [Monomial(g, rng.randint(1, g.full_mask)) for _ in range(rng.randint(1, 5))]
    I = minimalize(gens, g)
    return I if I.is_proper else None


class TestDual:
    def test_maximal_ideal(self):
        I = make_mixed(MixedSpec(GroundSet(3, 0), ((1, 0),)))
        assert dual(I).gens_strings() == ["x1*x2*x3"]

    def test_self_dual(self):
        I = make_mixed(MixedSpec(GroundSet(3, 0), ((2, 0),)))
        assert dual(I) == I

    def test_product(self):
        I = make_mixed(MixedSpec(GroundSet(2, 2), ((1, 1),)))
        assert dual(I).gens_strings() == ["x1*x2", "y1*y2"]

    def test_rejects_improper(self):
        g = GroundSet(2, 0)
        with pytest.raises(NotProper):
            dual(Ideal(g, ()))
        with pytest.raises(NotProper):
            dual(Ideal(g, (Monomial(g, 0),)))

    def test_involution_random(self):
        rng = random.Random(3)
        checked = 0
        while checked < 80:
            I = random_proper(rng, rng.randint(2, 10))
            if I is None:
                continue
            assert dual(dual(I)) == I
            checked += 1

    def test_involution_exhaustive_three_vertices(self):
        g = GroundSet(3, 0)
        seen = set()
        for mask in range(1, 1 << 7):
            gens = [Monomial(g, s) for s in range(1, 8) if mask & (1 << (s - 1))]
            I = minimalize(gens, g)
            if not I.is_proper or I in seen:
                continue
            seen.add(I)
            assert dual(dual(I)) == I

    def test_prime_intersection_agreement(self):
        rng = random.Random(17)
        checked = 0
        while checked < 60:
            I = random_proper(rng, rng.randint(2, 8))
            if I is None:
                continue
            assert dual(I) == dual_prime_intersection(I)
            checked += 1


class TestIntersect:
    def test_basic(self):
        g = GroundSet(3, 0)
        A = minimalize([Monomial(g, 0b011)], g)
        B = minimalize([Monomial(g, 0b110)], g)
        assert intersect_ideals(A, B).gens_strings() == ["x1*x2*x3"]

    def test_zero_and_unit(self):
        g = GroundSet(2, 0)
        A = minimalize([Monomial(g, 1)], g)
        zero = Ideal(g, ())
        unit = Ideal(g, (Monomial(g, 0),))
        assert intersect_ideals(A, zero).is_zero
        assert intersect_ideals(unit, A) == A


class TestClosedDual:
    def test_block_power(self):
        spec = MixedSpec(GroundSet(5, 0), ((2, 0),))
        assert closed_dual(spec).terms == ((4, 0),)

    def test_y_block_power(self):
        spec = MixedSpec(GroundSet(2, 5), ((0, 2),))
        assert closed_dual(spec).terms == ((0, 4),)

    def test_power_sum(self):
        spec = MixedSpec(GroundSet(3, 2), ((2, 0), (0, 1)))
        assert closed_dual(spec).terms == ((2, 2),)

    def test_product(self):
        spec = MixedSpec(GroundSet(2, 2), ((1, 1),))
        assert closed_dual(spec).terms == ((0, 2), (2, 0))

    def test_two_products(self):
        spec = MixedSpec(GroundSet(3, 3), ((1, 3), (2, 1)))
        assert closed_dual(spec).terms == ((0, 3), (2, 1), (3, 0))

    def test_unit_rejected(self):
        with pytest.raises(OutOfRange):
            closed_dual(MixedSpec(GroundSet(2, 2), ((0, 0),)))

    def test_unsupported_shapes(self):
        g = GroundSet(3, 3)
        with pytest.raises(UnsupportedShape):
            closed_dual(MixedSpec(g, ((1, 2), (3, 0))))  # product plus block power
        with pytest.raises(UnsupportedShape):
            closed_dual(MixedSpec(g, ((0, 3), (1, 2), (3, 0))))

    def test_matches_general_dual_small(self):
        for n in range(1, 4):
            for m in range(0, 3):
                g = GroundSet(n, m)
                specs = [MixedSpec(g, ((q, 0),)) for q in range(1, n + 1)]
                specs += [MixedSpec(g, ((q, r),)) for q in range(1, n + 1) for r in range(1, m + 1)]
                specs += [
                    MixedSpec(g, ((q, 0), (0, r)))
                    for q in range(1, n + 1)
                    for r in range(1, m + 1)
                ]
                for spec in specs:
                    assert make_mixed(closed_dual(spec)) == dual(make_mixed(spec))

    def test_dual_is_an_involution_symbolically(self):
        spec = MixedSpec(GroundSet(4, 3), ((2, 2),))
        assert closed_dual(closed_dual(spec)) == spec
