"""Depth, Cohen-Macaulay classification, type and the Gorenstein predicate.

Two routes are provided: exact field-dependent computations through the Betti
oracle (`depth_of_quotient`, `is_cm`, `cm_type`, `is_gorenstein`), and pure
parameter arithmetic for the classified mixed-product shapes (`classify_cm`,
`closed_type`), which works at any ground size.
"""

from __future__ import annotations

from math import comb

from .betti import BettiTable, hochster_betti, projective_dimension
from .core import Ideal, MixedSpec, krull_dim
from .errors import NotCM, NotProper, UnsupportedShape
from .homology import RATIONALS, FieldSpec


def depth_of_quotient(I: Ideal, field: FieldSpec = RATIONALS) -> int:
    """depth S/I = (number of variables) - projective dimension of S/I."""
    if not I.is_proper:
        raise NotProper("depth needs a proper ideal")
    return I.ground.size - projective_dimension(hochster_betti(I, field))


def is_cm(I: Ideal, field: FieldSpec = RATIONALS) -> bool:
    """Cohen-Macaulay test: depth equals Krull dimension."""
    return depth_of_quotient(I, field) == krull_dim(I)


def cm_type(I: Ideal, field: FieldSpec = RATIONALS) -> int:
    """The last total Betti number of S/I; defined only in the CM case."""
    if not I.is_proper:
        raise NotProper("type needs a proper ideal")
    table = hochster_betti(I, field)
    depth = I.ground.size - projective_dimension(table)
    if depth != krull_dim(I):
        raise NotCM("depth differs from dimension")
    return table.total(table.max_index())


def is_gorenstein(I: Ideal, field: FieldSpec = RATIONALS) -> bool:
    """Cohen-Macaulay of type 1."""
    if not I.is_proper:
        raise NotProper("Gorenstein test needs a proper ideal")
    table = hochster_betti(I, field)
    depth = I.ground.size - projective_dimension(table)
    if depth != krull_dim(I):
        return False
    return table.total(table.max_index()) == 1


def _match_shape(spec: MixedSpec):
    """Classify a normalized spec into one of the parameter shapes.

    Returns (shape, params) with shape one of:
      "block-x"  [(q, 0)]                      params (n, q)
      "block-y"  [(0, r)]                      params (m, r)
      "product"  [(q, r)], q, r >= 1           params (n, m, q, r)
      "mixed-x"  [(q, r), (s, 0)], q >= 1      params (n, m, q, r, s)
      "mixed-y"  [(0, r), (s, t)], t >= 1      params (n, m, r, s, t)
      "mixed"    [(q, r), (s, t)], q, t >= 1   params (n, m, q, r, s, t)
    """
    n, m = spec.ground.n, spec.ground.m
    terms = spec.terms
    if len(terms) == 1:
        (q, r), = terms
        if q == 0 and r == 0:
            raise UnsupportedShape("the unit ideal is not classified")
        if r == 0:
            return "block-x", (n, q)
        if q == 0:
            return "block-y", (m, r)
        return "product", (n, m, q, r)
    if len(terms) == 2:
        (q, r), (s, t) = terms
        if q >= 1 and t >= 1:
            return "mixed", (n, m, q, r, s, t)
        if q >= 1 and t == 0:
            return "mixed-x", (n, m, q, r, s)
        if q == 0 and t >= 1:
            return "mixed-y", (n, m, r, s, t)
    raise UnsupportedShape(f"no classification for terms {terms}")


def classify_cm(spec: MixedSpec) -> bool:
    """Cohen-Macaulay verdict by parameter arithmetic alone.

    Covers block powers (always CM), products (CM only for the principal
    bidegree (n, m)), a product plus a power of the same block (CM iff the
    power exceeds the product's block degree by one and the other block is
    full), and two products (CM only at (n-1, m, n, m-1)). The sum of two
    pure block powers and the three-term dual shape are not classified.
    """
    shape, params = _match_shape(spec)
    if shape in ("block-x", "block-y"):
        return True
    if shape == "product":
        n, m, q, r = params
        return q == n and r == m
    if shape == "mixed-x":
        n, m, q, r, s = params
        return s == q + 1 and r == m
    if shape == "mixed-y":
        n, m, r, s, t = params
        return r == t + 1 and s == n
    n, m, q, r, s, t = params
    return (q, r, s, t) == (n - 1, m, n, m - 1)


def closed_type(spec: MixedSpec) -> int:
    """Cohen-Macaulay type by closed formula; raises NotCM off the CM locus."""
    if not classify_cm(spec):
        raise NotCM(f"terms {spec.terms} are not Cohen-Macaulay")
    shape, params = _match_shape(spec)
    if shape == "block-x":
        n, q = params
        return comb(n - 1, n - q)
    if shape == "block-y":
        m, r = params
        return comb(m - 1, m - r)
    if shape == "product":
        return 1
    if shape == "mixed-x":
        n, _m, q, _r, _s = params
        return comb(n - 1, n - q) + comb(n - 1, n - q - 1)
    if shape == "mixed-y":
        _n, m, _r, _s, t = params
        return comb(m - 1, m - t) + comb(m - 1, m - t - 1)
    n, m = spec.ground.n, spec.ground.m
    return m + n - 1


def oracle_cm_summary(I: Ideal, field: FieldSpec = RATIONALS) -> dict:
    """dim/depth/pd/cm/type/gorenstein in one oracle pass (CLI convenience)."""
    if not I.is_proper:
        raise NotProper("Cohen-Macaulay data needs a proper ideal")
    table = hochster_betti(I, field)
    pd = projective_dimension(table)
    dim = krull_dim(I)
    depth = I.ground.size - pd
    cm = depth == dim
    last = table.total(pd)
    return {
        "table": table,
        "pd": pd,
        "dim": dim,
        "depth": depth,
        "cm": cm,
        "type": last if cm else None,
        "gorenstein": cm and last == 1,
    }
