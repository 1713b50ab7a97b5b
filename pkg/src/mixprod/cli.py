"""Command-line interface.

Subcommands: dual, betti, cm, hilbert, verify. Ideals are given either as a
mixed-product expression (``"I2*J1 + I3"`` with --n/--m) or as an explicit
generator list (``--gens "x1*x2, y1*y2"``) for oracle-only runs. Exit codes:
0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .alexander import closed_dual, dual
from .betti import (
    ORACLE_LIMIT,
    closed_betti_table,
    hilbert_numerator,
    hochster_betti,
    k_polynomial,
    projective_dimension,
)
from .cm import classify_cm, closed_type, oracle_cm_summary
from .core import ENUM_LIMIT, GroundSet, Ideal, MixedSpec, Monomial, make_mixed, minimalize
from .errors import MixprodError, NotCM, UnsupportedShape
from .exprs import format_spec, parse_ideal_expr
from .homology import RATIONALS, FieldSpec
from .verify import run_all

EXPAND_LIMIT = 200_000


def _add_ideal_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("expr", nargs="?", help="mixed-product expression, e.g. 'I2*J1 + I3'")
    sub.add_argument("--n", type=int, required=True, help="number of x-variables")
    sub.add_argument("--m", type=int, required=True, help="number of y-variables")
    sub.add_argument(
        "--gens",
        help="comma-separated square-free generators, e.g. 'x1*x2, y1*y2'",
    )
    sub.add_argument(
        "--field",
        type=FieldSpec.parse,
        default=RATIONALS,
        help="coefficient field: rat (default), gf2 or gfp:<p>",
    )
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixprod",
        description="Exact duality, Betti numbers and Cohen-Macaulay data "
        "for square-free monomial ideals in two variable blocks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_dual = subs.add_parser("dual", help="Alexander dual (closed form and general)")
    _add_ideal_arguments(p_dual)
    p_dual.set_defaults(func=cmd_dual)

    p_betti = subs.add_parser("betti", help="graded Betti table of S/I")
    _add_ideal_arguments(p_betti)
    p_betti.add_argument(
        "--method",
        choices=["auto", "closed", "hochster", "both"],
        default="auto",
        help="closed formulas, the homology oracle, or both (compared)",
    )
    p_betti.set_defaults(func=cmd_betti)

    p_cm = subs.add_parser("cm", help="dimension, depth, CM status, type")
    _add_ideal_arguments(p_cm)
    p_cm.add_argument(
        "--method",
        choices=["auto", "closed", "hochster", "both"],
        default="auto",
    )
    p_cm.set_defaults(func=cmd_cm)

    p_hilb = subs.add_parser(
        "hilbert", help="Hilbert-series numerator, cross-checked against the Betti table"
    )
    _add_ideal_arguments(p_hilb)
    p_hilb.set_defaults(func=cmd_hilbert)

    p_verify = subs.add_parser(
        "verify", help="sweep all closed formulas against the oracle"
    )
    p_verify.add_argument("--max-vertices", type=int, default=7)
    p_verify.add_argument(
        "--field", type=FieldSpec.parse, default=RATIONALS,
        help="coefficient field: rat (default), gf2 or gfp:<p>",
    )
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel oracle workers")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    return parser


class _Input:
    """Resolved ideal input: a symbolic spec, an expanded ideal, or both."""

    def __init__(self, ground: GroundSet, spec: MixedSpec | None, ideal: Ideal | None):
        self.ground = ground
        self.spec = spec
        self._ideal = ideal

    @property
    def expr(self) -> str | None:
        return format_spec(self.spec) if self.spec is not None else None

    def ideal(self) -> Ideal:
        if self._ideal is None:
            if self.spec.generator_count() > EXPAND_LIMIT:
                raise MixprodError(
                    f"expansion would exceed {EXPAND_LIMIT} generators; "
                    "only closed-form methods apply at this size"
                )
            self._ideal = make_mixed(self.spec)
        return self._ideal

    def gens_strings(self) -> list[str]:
        if self._ideal is None and self.spec.generator_count() > EXPAND_LIMIT:
            return []
        return self.ideal().gens_strings()

    def json_ideal(self) -> dict:
        return {"expr": self.expr, "gens": self.gens_strings()}


def _resolve_input(args) -> _Input:
    ground = GroundSet(args.n, args.m)
    if args.expr is not None and args.gens is not None:
        raise _Usage("give either an expression or --gens, not both")
    if args.expr is None and args.gens is None:
        raise _Usage("an ideal is required: an expression or --gens")
    if args.expr is not None:
        return _Input(ground, parse_ideal_expr(args.expr, ground), None)
    gens = [
        Monomial.parse(part, ground)
        for part in args.gens.split(",")
        if part.strip()
    ]
    if not gens:
        raise MixprodError("--gens lists no generators")
    return _Input(ground, None, minimalize(gens, ground))


class _Usage(Exception):
    pass


def _emit(payload: dict, human: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _betti_json(table) -> dict:
    out: dict[str, dict[str, int]] = {}
    for (i, j), v in sorted(table.entries.items()):
        out.setdefault(str(i), {})[str(j)] = v
    return out


def cmd_dual(args) -> int:
    inp = _resolve_input(args)
    dual_expr = None
    dual_spec = None
    if inp.spec is not None:
        try:
            dual_spec = closed_dual(inp.spec)
            dual_expr = format_spec(dual_spec)
        except UnsupportedShape:
            dual_spec = None
    dual_gens: list[str] = []
    agree = None
    general = None
    expandable = inp.spec is None or inp.spec.generator_count() <= EXPAND_LIMIT
    if inp.ground.size <= ENUM_LIMIT and expandable:
        general = dual(inp.ideal())
    if general is not None:
        dual_gens = general.gens_strings()
        if dual_spec is not None:
            agree = make_mixed(dual_spec) == general
    elif dual_spec is not None and dual_spec.generator_count() <= EXPAND_LIMIT:
        dual_gens = make_mixed(dual_spec).gens_strings()
    if dual_expr is None and general is None:
        raise MixprodError("no closed dual shape and the ground set is too "
                           "large for the general algorithm")
    payload = {
        "n": inp.ground.n,
        "m": inp.ground.m,
        "ideal": inp.json_ideal(),
        "dual": {"expr": dual_expr, "gens": dual_gens},
        "agree": agree,
    }
    lines = [f"ideal: {inp.expr or ', '.join(inp.gens_strings())}"]
    if dual_expr is not None:
        lines.append(f"dual expression: {dual_expr}")
    lines.append(f"dual generators: {', '.join(dual_gens) if dual_gens else '(not expanded)'}")
    if agree is not None:
        lines.append("closed and general duals " + ("EQUAL" if agree else "DIFFER"))
    _emit(payload, "\n".join(lines), args.json)
    if agree is False:
        return 1
    return 0


def _pick_method(args, inp: _Input) -> str:
    method = args.method
    oracle_ok = inp.ground.size <= ORACLE_LIMIT and (
        inp.spec is None or inp.spec.generator_count() <= EXPAND_LIMIT
    )
    if method == "auto":
        if inp.spec is None:
            return "hochster"
        try:
            closed_betti_table(inp.spec)
            closed_ok = True
        except MixprodError:
            closed_ok = False
        if closed_ok:
            return "both" if oracle_ok else "closed"
        return "hochster"
    if method in ("closed", "both") and inp.spec is None:
        raise MixprodError("closed formulas need a mixed-product expression")
    return method


def cmd_betti(args) -> int:
    inp = _resolve_input(args)
    method = _pick_method(args, inp)
    closed = oracle = None
    if method in ("closed", "both"):
        closed = closed_betti_table(inp.spec, args.field)
    if method in ("hochster", "both"):
        oracle = hochster_betti(inp.ideal(), args.field)
    agree = None
    if method == "both":
        agree = closed.entries == oracle.entries
    table = oracle if oracle is not None else closed
    payload = {
        "n": inp.ground.n,
        "m": inp.ground.m,
        "ideal": inp.json_ideal(),
        "betti": _betti_json(table),
        "pd": projective_dimension(table),
        "field": args.field.tag,
        "method": method,
        "agree": agree,
    }
    lines = [f"ideal: {inp.expr or ', '.join(inp.gens_strings())}"]
    if method == "both":
        lines.append("closed and oracle tables " + ("EQUAL" if agree else "DIFFER"))
    if agree is False:
        lines += ["closed:", closed.diagram(), "oracle:", oracle.diagram()]
    else:
        lines.append(table.diagram())
    totals = ", ".join(str(v) for v in table.ideal_totals())
    lines.append(f"ideal Betti numbers: ({totals})")
    lines.append(f"pd S/I = {projective_dimension(table)}")
    _emit(payload, "\n".join(lines), args.json)
    return 1 if agree is False else 0


def cmd_cm(args) -> int:
    inp = _resolve_input(args)
    method = _pick_method(args, inp)
    if method == "closed":
        verdict = classify_cm(inp.spec)
        ctype = closed_type(inp.spec) if verdict else None
        payload = {
            "n": inp.ground.n,
            "m": inp.ground.m,
            "ideal": inp.json_ideal(),
            "cm": verdict,
            "type": ctype,
            "field": args.field.tag,
            "method": method,
            "agree": None,
        }
        human = [f"ideal: {inp.expr}", f"cm: {verdict}"]
        if ctype is not None:
            human.append(f"type: {ctype}")
        _emit(payload, "\n".join(human), args.json)
        return 0
    summary = oracle_cm_summary(inp.ideal(), args.field)
    agree = None
    if method == "both":
        try:
            verdict = classify_cm(inp.spec)
            closed_t = closed_type(inp.spec) if verdict else None
            agree = verdict == summary["cm"] and (
                not verdict or closed_t == summary["type"]
            )
        except UnsupportedShape:
            agree = None
    payload = {
        "n": inp.ground.n,
        "m": inp.ground.m,
        "ideal": inp.json_ideal(),
        "betti": _betti_json(summary["table"]),
        "pd": summary["pd"],
        "depth": summary["depth"],
        "dim": summary["dim"],
        "cm": summary["cm"],
        "type": summary["type"],
        "gorenstein": summary["gorenstein"],
        "field": args.field.tag,
        "method": method,
        "agree": agree,
    }
    lines = [
        f"ideal: {inp.expr or ', '.join(inp.gens_strings())}",
        f"dim S/I = {summary['dim']}",
        f"depth S/I = {summary['depth']}",
        f"pd S/I = {summary['pd']}",
        f"cohen-macaulay: {summary['cm']}",
    ]
    if summary["type"] is not None:
        lines.append(f"type: {summary['type']}")
    lines.append(f"gorenstein: {summary['gorenstein']}")
    if agree is not None:
        lines.append("classification and oracle " + ("AGREE" if agree else "DISAGREE"))
    _emit(payload, "\n".join(lines), args.json)
    return 1 if agree is False else 0


def cmd_hilbert(args) -> int:
    inp = _resolve_input(args)
    ideal = inp.ideal()
    numerator = hilbert_numerator(ideal)
    kpoly = k_polynomial(hochster_betti(ideal, args.field))
    agree = numerator == kpoly
    payload = {
        "n": inp.ground.n,
        "m": inp.ground.m,
        "ideal": inp.json_ideal(),
        "hilbert": {
            "numerator": list(numerator.coeffs),
            "k_polynomial": list(kpoly.coeffs),
            "agree": agree,
        },
        "field": args.field.tag,
    }
    human = "\n".join(
        [
            f"ideal: {inp.expr or ', '.join(inp.gens_strings())}",
            f"hilbert numerator: {numerator}",
            f"k-polynomial:      {kpoly}",
            "face count and Betti table " + ("EQUAL" if agree else "DIFFER"),
        ]
    )
    _emit(payload, human, args.json)
    return 0 if agree else 1


def cmd_verify(args) -> int:
    results = run_all(args.max_vertices, args.field, args.jobs)
    if args.json:
        payload = {
            "field": args.field.tag,
            "max_vertices": args.max_vertices,
            "backend": kernels.backend_name(),
            "checks": [
                {
                    "name": r.name,
                    "cases": r.cases,
                    "passed": r.passed,
                    "failures": r.failures,
                }
                for r in results
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(
            f"verification sweep: max-vertices={args.max_vertices} "
            f"field={args.field.tag} kernels={kernels.backend_name()}"
        )
        for r in results:
            print(r.line())
        total = sum(r.cases for r in results)
        bad = sum(1 for r in results if not r.passed)
        print(f"{len(results)} checks, {total} cases, {bad} failing checks")
    return 1 if any(not r.passed for r in results) else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as e:
        parser.error(str(e))  # exits with code 2
        return 2
    except (MixprodError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
