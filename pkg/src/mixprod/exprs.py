"""The mixed-ideal expression grammar.

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'I' uint | 'J' uint

Whitespace is ignored. Each term may use each block at most once; degrees are
checked against the ground set. Errors carry the byte offset of the problem.
"""

from __future__ import annotations

from .core import GroundSet, MixedSpec
from .errors import DegreeOutOfRange, ExprSyntaxError, RepeatedBlock


def parse_ideal_expr(text: str, ground: GroundSet) -> MixedSpec:
    """Parse an expression like ``I2*J1 + I3`` into a normalized MixedSpec."""
    pos = 0
    end = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < end and text[pos].isspace():
            pos += 1

    def parse_factor() -> tuple[str, int, int]:
        nonlocal pos
        skip_ws()
        if pos >= end:
            raise ExprSyntaxError("expected 'I<d>' or 'J<d>'", pos)
        block = text[pos]
        if block not in "IJ":
            raise ExprSyntaxError(f"expected 'I' or 'J', found {block!r}", pos)
        start = pos
        pos += 1
        digits = pos
        while pos < end and text[pos].isdigit():
            pos += 1
        if pos == digits:
            raise ExprSyntaxError(f"expected a degree after {block!r}", pos)
        degree = int(text[digits:pos])
        bound = ground.n if block == "I" else ground.m
        if degree > bound:
            raise DegreeOutOfRange(
                f"{block}{degree} exceeds the block size {bound}", start
            )
        return block, degree, start

    def parse_term() -> tuple[int, int]:
        nonlocal pos
        q: int | None = None
        r: int | None = None

        def absorb() -> None:
            nonlocal q, r
            block, degree, start = parse_factor()
            if block == "I":
                if q is not None:
                    raise RepeatedBlock("the x-block appears twice in a term", start)
                q = degree
            else:
                if r is not None:
                    raise RepeatedBlock("the y-block appears twice in a term", start)
                r = degree

        absorb()
        while True:
            skip_ws()
            if pos < end and text[pos] == "*":
                pos += 1
                absorb()
            else:
                break
        return (q or 0, r or 0)

    terms = [parse_term()]
    skip_ws()
    while pos < end:
        if text[pos] != "+":
            raise ExprSyntaxError(f"expected '+' or end of input, found {text[pos]!r}", pos)
        pos += 1
        terms.append(parse_term())
        skip_ws()
    return MixedSpec(ground, tuple(terms))


def format_term(q: int, r: int) -> str:
    if q and r:
        return f"I{q}*J{r}"
    if q:
        return f"I{q}"
    if r:
        return f"J{r}"
    return "I0"


def format_spec(spec: MixedSpec) -> str:
    """Canonical expression string; reparsing yields an identical spec.

    Terms print x-heavy first (descending x-degree), so a dual of a product
    reads ``I2 + J2`` rather than the storage order.
    """
    if not spec.terms:
        return "0"
    shown = sorted(spec.terms, key=lambda t: (-t[0], t[1]))
    return " + ".join(format_term(q, r) for q, r in shown)
