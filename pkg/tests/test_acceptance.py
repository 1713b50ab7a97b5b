"""Acceptance criteria: every closed result proven against the brute-force
machinery at desk scale, plus the independent cross-checks.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
PASS/FAIL lines and timings.
"""

import time
from math import comb

import pytest

from mixprod import (
    GF2,
    RATIONALS,
    FieldSpec,
    GroundSet,
    MixedSpec,
    closed_betti_mixed,
    closed_betti_table,
    closed_type,
    hochster_betti,
    is_linear_resolution,
    make_mixed,
    projective_dimension,
)
from mixprod.verify import (
    SweepContext,
    check_betti_block,
    check_betti_product,
    check_betti_triple_sum,
    check_betti_two_products,
    check_cm_classification,
    check_cm_dimension,
    check_cm_type,
    check_dual_block,
    check_dual_power_sum,
    check_dual_product,
    check_dual_two_products,
    check_gorenstein_census,
    check_involution,
    check_kpolynomial_identity,
    check_linear_resolutions,
    check_oracle_agreement,
    check_skeleton_homology,
    grounds,
    product_specs,
    random_corpus,
    two_product_specs,
)

GFP = FieldSpec(32003)
MAX_VERTICES = 7


def _report(number, name, results, started):
    elapsed = time.time() - started
    ok = all(r.passed for r in results)
    cases = sum(r.cases for r in results)
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number} {name}: {status} ({cases} cases, {elapsed:.2f}s)")
    for r in results:
        assert r.passed, r.line()


@pytest.fixture(scope="module")
def ctx_rat():
    return SweepContext(RATIONALS)


@pytest.fixture(scope="module")
def ctx_gf2():
    return SweepContext(GF2)


@pytest.fixture(scope="module")
def ctx_gfp():
    return SweepContext(GFP)


def test_criterion_1_duality_sweep():
    started = time.time()
    results = [
        check_dual_block(MAX_VERTICES),
        check_dual_power_sum(MAX_VERTICES),
        check_dual_product(MAX_VERTICES),
        check_dual_two_products(MAX_VERTICES),
    ]
    _report(1, "duality-sweep", results, started)


def _betti_checks(ctx):
    return [
        check_betti_block(MAX_VERTICES, ctx),
        check_betti_product(MAX_VERTICES, ctx),
        check_betti_two_products(MAX_VERTICES, ctx),
        check_betti_triple_sum(MAX_VERTICES, ctx),
    ]


def test_criterion_2_betti_sweep(ctx_rat):
    started = time.time()
    results = _betti_checks(ctx_rat)
    # spot checks one level above the sweep
    for ground, terms in [
        ((4, 4), ((1, 2), (3, 1))),
        ((4, 4), ((2, 2),)),
        ((8, 0), ((3, 0),)),
        ((5, 3), ((3, 0), (2, 1), (0, 3))),
    ]:
        spec = MixedSpec(GroundSet(*ground), terms)
        oracle = hochster_betti(make_mixed(spec))
        assert closed_betti_table(spec).entries == oracle.entries, spec
    _report(2, "betti-sweep", results, started)


def test_criterion_3_specific_tables():
    started = time.time()
    spec = MixedSpec(GroundSet(4, 0), ((2, 0),))
    oracle = hochster_betti(make_mixed(spec))
    assert oracle.entries == {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}
    assert closed_betti_table(spec).entries == oracle.entries

    spec = MixedSpec(GroundSet(2, 2), ((1, 1),))
    oracle = hochster_betti(make_mixed(spec))
    assert oracle.entries == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    assert closed_betti_table(spec).entries == oracle.entries
    print(f"ACCEPTANCE 3 specific-tables: PASS (2 cases, {time.time() - started:.2f}s)")


def test_criterion_4_linear_resolution_shape(ctx_rat):
    started = time.time()
    results = [check_linear_resolutions(MAX_VERTICES, ctx_rat)]
    # the two-product sums with a single generating degree are also linear
    # exactly when the middle degree collapses; check the oracle diagonal
    # only for the single-degree classes required here
    for g in grounds(MAX_VERTICES):
        for spec in product_specs(g):
            (q, r), = spec.terms
            table = ctx_rat.oracle(spec)
            assert is_linear_resolution(table, q + r)
    _report(4, "linear-resolution-shape", results, started)


def test_criterion_5_cm_and_type(ctx_rat):
    started = time.time()
    results = [
        check_cm_classification(MAX_VERTICES, ctx_rat),
        check_cm_dimension(MAX_VERTICES),
        check_cm_type(MAX_VERTICES, ctx_rat),
    ]
    # pinned values: type of the near-principal two-product sum is m + n - 1
    from mixprod import cm_type

    for (n, m), expected in [((2, 2), 3), ((2, 3), 4), ((3, 3), 5)]:
        spec = MixedSpec(GroundSet(n, m), ((n - 1, m), (n, m - 1)))
        assert closed_type(spec) == expected
        assert cm_type(make_mixed(spec)) == expected
    # type of a block power is a binomial coefficient
    for n in range(1, MAX_VERTICES + 1):
        for q in range(1, n + 1):
            spec = MixedSpec(GroundSet(n, 0), ((q, 0),))
            assert closed_type(spec) == comb(n - 1, n - q)
            assert cm_type(make_mixed(spec)) == comb(n - 1, n - q)
    _report(5, "cm-and-type", results, started)


def test_criterion_6_gorenstein_census(ctx_rat):
    started = time.time()
    results = [check_gorenstein_census(MAX_VERTICES, ctx_rat)]
    _report(6, "gorenstein-census", results, started)


def test_criterion_7_independent_cross_checks():
    started = time.time()
    corpus = random_corpus(500, 8, seed=20240901)
    results = [
        check_kpolynomial_identity(corpus),
        check_involution(corpus),
        check_oracle_agreement([i for i in corpus if i.ground.size <= 6]),
    ]
    _report(7, "independent-cross-checks", results, started)


def test_criterion_8_homology_kernel_law():
    started = time.time()
    results = [check_skeleton_homology(9)]
    _report(8, "homology-kernel-law", results, started)


def test_criterion_9_field_robustness(ctx_rat, ctx_gf2, ctx_gfp):
    started = time.time()
    results = []
    for ctx in (ctx_gf2, ctx_gfp):
        results += _betti_checks(ctx)
        results += [
            check_cm_classification(MAX_VERTICES, ctx),
            check_cm_type(MAX_VERTICES, ctx),
            check_linear_resolutions(MAX_VERTICES, ctx),
        ]
    # identical numbers across the three fields, entry by entry
    for g in grounds(MAX_VERTICES):
        specs = list(product_specs(g))
        specs += [s for s, _p in two_product_specs(g, allow_boundary=True)]
        for spec in specs:
            a = ctx_rat.oracle(spec).entries
            b = ctx_gf2.oracle(spec).entries
            c = ctx_gfp.oracle(spec).entries
            assert a == b == c, spec
    _report(9, "field-robustness", results, started)


def test_criterion_3_specific_table_values_match_closed_forms():
    # the (6, 8, 3) and (4, 4, 1) rows restated through the closed formulas
    from mixprod import closed_betti_block, closed_betti_product

    assert [closed_betti_block(4, 2, i) for i in range(3)] == [6, 8, 3]
    assert [closed_betti_product(2, 2, 1, 1, i) for i in range(3)] == [4, 4, 1]
