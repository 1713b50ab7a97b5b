"""Exhaustive desk-scale verification sweeps.

Every closed formula in the package (duals, Betti numbers, Cohen-Macaulay
classification and type, the Gorenstein census, the skeleton homology law) is
checked against the brute-force machinery over all in-range parameters on
every ground set up to a vertex budget. The CLI `verify` subcommand and the
acceptance test suite both run through this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from math import comb
from multiprocessing import Pool

from .alexander import closed_dual, dual
from .betti import (
    BettiTable,
    closed_betti_block,
    closed_betti_dual_mixed,
    closed_betti_mixed,
    closed_betti_product,
    closed_betti_table,
    hilbert_numerator,
    hochster_betti,
    is_linear_resolution,
    k_polynomial,
    projective_dimension,
)
from .cm import classify_cm, closed_type
from .core import GroundSet, Ideal, MixedSpec, Monomial, krull_dim, make_mixed, minimalize
from .exprs import format_spec
from .homology import RATIONALS, FieldSpec, homology_from_faces

MAX_REPORTED_FAILURES = 8


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail) -> None:
        self.cases += 1
        if not ok:
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(str(detail() if callable(detail) else detail))
            else:
                self.failures.append("...")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name} ({self.cases} cases)"
        if not self.passed:
            shown = [f for f in self.failures if f != "..."]
            out += f": {len(shown)}+ failures, e.g. {shown[0]}"
        return out


def grounds(max_vertices: int):
    for total in range(1, max_vertices + 1):
        for n in range(total + 1):
            yield GroundSet(n, total - n)


def block_specs(g: GroundSet):
    for q in range(1, g.n + 1):
        yield MixedSpec(g, ((q, 0),))
    for r in range(1, g.m + 1):
        yield MixedSpec(g, ((0, r),))


def power_sum_specs(g: GroundSet):
    for q in range(1, g.n + 1):
        for r in range(1, g.m + 1):
            yield MixedSpec(g, ((q, 0), (0, r)))


def product_specs(g: GroundSet):
    for q in range(1, g.n + 1):
        for r in range(1, g.m + 1):
            yield MixedSpec(g, ((q, r),))


def two_product_specs(g: GroundSet, allow_boundary: bool = False):
    """Specs I_q J_r + I_s J_t with q < s and t < r; degree 0 ends optional."""
    low = 0 if allow_boundary else 1
    for q in range(low, g.n):
        for s in range(q + 1, g.n + 1):
            for t in range(low, g.m):
                for r in range(t + 1, g.m + 1):
                    yield MixedSpec(g, ((q, r), (s, t))), (q, r, s, t)


def triple_sum_specs(g: GroundSet):
    """Specs I_s + I_q*J_t + J_r with 1 <= q < s <= n, 1 <= t < r <= m."""
    for q in range(1, g.n):
        for s in range(q + 1, g.n + 1):
            for t in range(1, g.m):
                for r in range(t + 1, g.m + 1):
                    yield MixedSpec(g, ((s, 0), (q, t), (0, r))), (q, r, s, t)


class SweepContext:
    """Cache of oracle Betti tables shared by the checks of one sweep."""

    def __init__(self, field: FieldSpec = RATIONALS):
        self.field = field
        self.tables: dict = {}

    def _key(self, spec: MixedSpec):
        return (spec.ground.n, spec.ground.m, spec.terms)

    def oracle(self, spec: MixedSpec) -> BettiTable:
        key = self._key(spec)
        table = self.tables.get(key)
        if table is None:
            table = hochster_betti(make_mixed(spec), self.field)
            self.tables[key] = table
        return table

    def prefetch(self, specs, jobs: int = 1) -> None:
        todo = []
        seen = set()
        for spec in specs:
            key = self._key(spec)
            if key not in self.tables and key not in seen:
                seen.add(key)
                todo.append((key, self.field.char))
        if jobs <= 1 or len(todo) < 2 * jobs:
            for key, _char in todo:
                self.oracle(MixedSpec(GroundSet(key[0], key[1]), key[2]))
            return
        with Pool(jobs) as pool:
            for key, entries in pool.imap_unordered(_oracle_task, todo, chunksize=8):
                ground = GroundSet(key[0], key[1])
                self.tables[key] = BettiTable(ground, self.field, entries)


def _oracle_task(args):
    key, char = args
    n, m, terms = key
    spec = MixedSpec(GroundSet(n, m), terms)
    table = hochster_betti(make_mixed(spec), FieldSpec(char))
    return key, table.entries


def _all_betti_specs(max_vertices: int):
    for g in grounds(max_vertices):
        yield from block_specs(g)
        yield from product_specs(g)
        for spec, _params in two_product_specs(g, allow_boundary=True):
            yield spec
        for spec, _params in triple_sum_specs(g):
            yield spec


# ---------------------------------------------------------------- duality


def check_dual_block(max_vertices: int) -> CheckResult:
    res = CheckResult("dual-block-power")
    for g in grounds(max_vertices):
        for spec in block_specs(g):
            lhs = make_mixed(closed_dual(spec))
            rhs = dual(make_mixed(spec))
            res.record(lhs == rhs, lambda: f"{g} {format_spec(spec)}")
    return res


def check_dual_power_sum(max_vertices: int) -> CheckResult:
    res = CheckResult("dual-power-sum")
    for g in grounds(max_vertices):
        for spec in power_sum_specs(g):
            lhs = make_mixed(closed_dual(spec))
            rhs = dual(make_mixed(spec))
            res.record(lhs == rhs, lambda: f"{g} {format_spec(spec)}")
    return res


def check_dual_product(max_vertices: int) -> CheckResult:
    res = CheckResult("dual-product")
    for g in grounds(max_vertices):
        for spec in product_specs(g):
            lhs = make_mixed(closed_dual(spec))
            rhs = dual(make_mixed(spec))
            res.record(lhs == rhs, lambda: f"{g} {format_spec(spec)}")
    return res


def check_dual_two_products(max_vertices: int) -> CheckResult:
    res = CheckResult("dual-two-products")
    for g in grounds(max_vertices):
        for spec, _params in two_product_specs(g):
            lhs = make_mixed(closed_dual(spec))
            rhs = dual(make_mixed(spec))
            res.record(lhs == rhs, lambda: f"{g} {format_spec(spec)}")
    return res


# ---------------------------------------------------------------- Betti


def _compare_tables(res: CheckResult, ctx: SweepContext, spec: MixedSpec) -> None:
    oracle = ctx.oracle(spec)
    closed = closed_betti_table(spec, ctx.field)
    res.record(
        oracle.entries == closed.entries,
        lambda: f"{spec.ground} {format_spec(spec)}: "
        f"oracle {sorted(oracle.entries.items())} != closed {sorted(closed.entries.items())}",
    )


def check_betti_block(max_vertices: int, ctx: SweepContext) -> CheckResult:
    """Closed block-power formula against the oracle, graded and by totals."""
    res = CheckResult("betti-block-power")
    for g in grounds(max_vertices):
        for spec in block_specs(g):
            _compare_tables(res, ctx, spec)
            (q, r), = spec.terms
            size, deg = (g.n, q) if r == 0 else (g.m, r)
            oracle = ctx.oracle(spec)
            for i in range(size - deg + 2):
                want = closed_betti_block(size, deg, i)
                got = oracle.total(i + 1)
                res.record(
                    want == got,
                    lambda: f"{g} {format_spec(spec)} i={i}: {got} != {want}",
                )
    return res


def check_betti_product(max_vertices: int, ctx: SweepContext) -> CheckResult:
    res = CheckResult("betti-product")
    for g in grounds(max_vertices):
        for spec in product_specs(g):
            _compare_tables(res, ctx, spec)
            (q, r), = spec.terms
            oracle = ctx.oracle(spec)
            for i in range(g.size + 1):
                want = closed_betti_product(g.n, g.m, q, r, i)
                got = oracle.total(i + 1)
                res.record(
                    want == got,
                    lambda: f"{g} {format_spec(spec)} i={i}: {got} != {want}",
                )
    return res


def check_betti_two_products(max_vertices: int, ctx: SweepContext) -> CheckResult:
    """Two-product sums, including the block-degree-0 boundary cases."""
    res = CheckResult("betti-two-products")
    for g in grounds(max_vertices):
        for spec, (q, r, s, t) in two_product_specs(g, allow_boundary=True):
            _compare_tables(res, ctx, spec)
            oracle = ctx.oracle(spec)
            for i in range(g.size + 1):
                want = closed_betti_mixed(g.n, g.m, q, r, s, t, i)
                got = oracle.total(i + 1)
                res.record(
                    want == got,
                    lambda: f"{g} {format_spec(spec)} i={i}: {got} != {want}",
                )
    return res


def check_betti_triple_sum(max_vertices: int, ctx: SweepContext) -> CheckResult:
    res = CheckResult("betti-triple-sum")
    for g in grounds(max_vertices):
        for spec, (q, r, s, t) in triple_sum_specs(g):
            _compare_tables(res, ctx, spec)
            oracle = ctx.oracle(spec)
            for i in range(g.size + 1):
                want = closed_betti_dual_mixed(g.n, g.m, q, r, s, t, i)
                got = oracle.total(i + 1)
                res.record(
                    want == got,
                    lambda: f"{g} {format_spec(spec)} i={i}: {got} != {want}",
                )
    return res


def check_linear_resolutions(max_vertices: int, ctx: SweepContext) -> CheckResult:
    """Block powers and products resolve linearly from their generating degree."""
    res = CheckResult("linear-resolutions")
    for g in grounds(max_vertices):
        for spec in list(block_specs(g)) + list(product_specs(g)):
            (q, r), = spec.terms
            table = ctx.oracle(spec)
            res.record(
                is_linear_resolution(table, q + r),
                lambda: f"{g} {format_spec(spec)} not {q + r}-linear",
            )
    return res


# ---------------------------------------------------------------- CM


def _cm_specs(g: GroundSet):
    """All classified shapes: block powers, products, mixed sums and mirrors."""
    yield from block_specs(g)
    yield from product_specs(g)
    for q in range(1, g.n):
        for s in range(q + 1, g.n + 1):
            for r in range(1, g.m + 1):
                yield MixedSpec(g, ((q, r), (s, 0)))
    for t in range(1, g.m):
        for r in range(t + 1, g.m + 1):
            for s in range(1, g.n + 1):
                yield MixedSpec(g, ((0, r), (s, t)))
    for spec, _params in two_product_specs(g):
        yield spec


def _table_is_cm(table: BettiTable, ideal: Ideal) -> bool:
    depth = ideal.ground.size - projective_dimension(table)
    return depth == krull_dim(ideal)


def check_cm_classification(max_vertices: int, ctx: SweepContext) -> CheckResult:
    res = CheckResult("cm-classification")
    for g in grounds(max_vertices):
        for spec in _cm_specs(g):
            ideal = make_mixed(spec)
            verdict = classify_cm(spec)
            actual = _table_is_cm(ctx.oracle(spec), ideal)
            res.record(
                verdict == actual,
                lambda: f"{g} {format_spec(spec)}: classified {verdict}, oracle {actual}",
            )
    return res


def check_cm_type(max_vertices: int, ctx: SweepContext) -> CheckResult:
    res = CheckResult("cm-type")
    for g in grounds(max_vertices):
        for spec in _cm_specs(g):
            if not classify_cm(spec):
                continue
            table = ctx.oracle(spec)
            got = table.total(projective_dimension(table))
            want = closed_type(spec)
            res.record(
                want == got,
                lambda: f"{g} {format_spec(spec)}: type {got} != formula {want}",
            )
    return res


def check_cm_dimension(max_vertices: int) -> CheckResult:
    """Stated dimensions: block powers everywhere, other shapes on the CM locus."""
    res = CheckResult("cm-dimension")
    for g in grounds(max_vertices):
        n, m = g.n, g.m
        for q in range(1, n + 1):
            dim = krull_dim(make_mixed(MixedSpec(g, ((q, 0),))))
            res.record(dim == m + q - 1, lambda: f"{g} I{q}: dim {dim}")
        for r in range(1, m + 1):
            dim = krull_dim(make_mixed(MixedSpec(g, ((0, r),))))
            res.record(dim == n + r - 1, lambda: f"{g} J{r}: dim {dim}")
        if n >= 1 and m >= 1:
            dim = krull_dim(make_mixed(MixedSpec(g, ((n, m),))))
            res.record(dim == n + m - 1, lambda: f"{g} In*Jm: dim {dim}")
        if m >= 1:
            for q in range(1, n):
                spec = MixedSpec(g, ((q, m), (q + 1, 0)))
                dim = krull_dim(make_mixed(spec))
                res.record(
                    dim == m + q - 1, lambda: f"{g} {format_spec(spec)}: dim {dim}"
                )
        if n >= 2 and m >= 2:
            spec = MixedSpec(g, ((n - 1, m), (n, m - 1)))
            dim = krull_dim(make_mixed(spec))
            res.record(dim == m + n - 2, lambda: f"{g} {format_spec(spec)}: dim {dim}")
    return res


def check_gorenstein_census(max_vertices: int, ctx: SweepContext) -> CheckResult:
    """Gorenstein exactly at: top or linear block power (on its own block),
    and the principal full product on mixed grounds."""
    res = CheckResult("gorenstein-census")
    for g in grounds(max_vertices):
        if g.m == 0:
            candidates = [(MixedSpec(g, ((q, 0),)), q in (1, g.n)) for q in range(1, g.n + 1)]
        elif g.n == 0:
            candidates = [(MixedSpec(g, ((0, r),)), r in (1, g.m)) for r in range(1, g.m + 1)]
        else:
            candidates = []
            for spec in _cm_specs(g):
                q, r = spec.terms[0]
                if len(spec.terms) == 1 and (q == 0 or r == 0):
                    continue  # pure block powers are censused on their own block
                candidates.append((spec, spec.terms == ((g.n, g.m),)))
        for spec, expected in candidates:
            table = ctx.oracle(spec)
            ideal = make_mixed(spec)
            is_gor = (
                _table_is_cm(table, ideal)
                and table.total(projective_dimension(table)) == 1
            )
            res.record(
                is_gor == expected,
                lambda: f"{g} {format_spec(spec)}: gorenstein {is_gor}, census says {expected}",
            )
    return res


# ---------------------------------------------------------------- homology law


def check_skeleton_homology(max_total: int = 9, field: FieldSpec = RATIONALS) -> CheckResult:
    """Skeleta of simplexes: all reduced homology vanishes below the top,
    where the dimension is C(v-1, i) for the (i-1)-skeleton on v vertices."""
    res = CheckResult("skeleton-homology")
    for v in range(2, max_total + 1):
        for i in range(v):
            faces = [s for s in range(1 << v) if s.bit_count() <= i]
            dims = homology_from_faces(faces, field)
            expected = [0] * (i + 1)
            expected[i] = comb(v - 1, i)
            res.record(
                dims == expected,
                lambda: f"skeleton v={v} i={i}: {dims} != {expected}",
            )
    return res


# ---------------------------------------------------------------- cross-checks


def random_proper_ideal(rng: random.Random, ground: GroundSet) -> Ideal:
    """A random proper square-free ideal: a few nonempty supports, minimalized."""
    full = ground.full_mask
    count = rng.randint(1, 6)
    gens = []
    for _ in range(count):
        s = rng.randint(1, full)
        gens.append(Monomial(ground, s))
    return minimalize(gens, ground)


def random_corpus(count: int, max_vertices: int, seed: int) -> list[Ideal]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        total = rng.randint(2, max_vertices)
        n = rng.randint(0, total)
        ideal = random_proper_ideal(rng, GroundSet(n, total - n))
        if ideal.is_proper:
            out.append(ideal)
    return out


def check_kpolynomial_identity(
    corpus, field: FieldSpec = RATIONALS
) -> CheckResult:
    """k-polynomial of the oracle table equals the face-counted Hilbert numerator."""
    res = CheckResult("kpolynomial-identity")
    for ideal in corpus:
        lhs = k_polynomial(hochster_betti(ideal, field))
        rhs = hilbert_numerator(ideal)
        res.record(lhs == rhs, lambda: f"{ideal.ground} <{ideal}>: {lhs} != {rhs}")
    return res


def check_involution(corpus) -> CheckResult:
    res = CheckResult("dual-involution")
    for ideal in corpus:
        res.record(dual(dual(ideal)) == ideal, lambda: f"{ideal.ground} <{ideal}>")
    return res


def check_oracle_agreement(corpus, field: FieldSpec = RATIONALS) -> CheckResult:
    """Link-based oracle equals the induced-subcomplex oracle."""
    from .betti import hochster_betti_restriction

    res = CheckResult("oracle-cross-agreement")
    for ideal in corpus:
        a = hochster_betti(ideal, field)
        b = hochster_betti_restriction(ideal, field)
        res.record(
            a.entries == b.entries,
            lambda: f"{ideal.ground} <{ideal}>: {sorted(a.entries.items())} != "
            f"{sorted(b.entries.items())}",
        )
    return res


# ---------------------------------------------------------------- driver


def run_all(
    max_vertices: int = 7, field: FieldSpec = RATIONALS, jobs: int = 1
) -> list[CheckResult]:
    """Run every proposition sweep; results in a fixed, deterministic order."""
    ctx = SweepContext(field)
    ctx.prefetch(_all_betti_specs(max_vertices), jobs)
    for g in grounds(max_vertices):
        ctx.prefetch(_cm_specs(g), jobs)
    return [
        check_dual_block(max_vertices),
        check_dual_power_sum(max_vertices),
        check_dual_product(max_vertices),
        check_dual_two_products(max_vertices),
        check_betti_block(max_vertices, ctx),
        check_betti_product(max_vertices, ctx),
        check_betti_two_products(max_vertices, ctx),
        check_betti_triple_sum(max_vertices, ctx),
        check_linear_resolutions(max_vertices, ctx),
        check_cm_classification(max_vertices, ctx),
        check_cm_dimension(max_vertices),
        check_cm_type(max_vertices, ctx),
        check_gorenstein_census(max_vertices, ctx),
        check_skeleton_homology(min(max_vertices + 2, 9), field),
    ]
