"""Alexander duality: the general bitset algorithm and the closed forms.

The general `dual` runs one subset sweep; the symbolic `closed_dual` never
expands generators, so duality of mixed products costs O(1) at any ground
size. The fold over variable primes (`dual_prime_intersection`) is kept as an
independent test oracle.
"""

from __future__ import annotations

from .core import (
    GroundSet,
    Ideal,
    MixedSpec,
    Monomial,
    SimplicialComplex,
    bits_of,
    complex_to_ideal,
    minimalize,
)
from .errors import NotProper, OutOfRange, UnsupportedShape


def dual(I: Ideal) -> Ideal:
    """The Alexander dual of a proper square-free ideal.

    Combinatorially: the dual complex consists of the complements of the
    non-faces, so its facets are the complements of the generators, and the
    dual ideal is that complex's face ideal. Applying it twice restores `I`.
    """
    if not I.is_proper:
        raise NotProper("Alexander duality needs a proper ideal")
    full = I.ground.full_mask
    facets = sorted((full ^ s for s in I.supports()), key=lambda s: (s.bit_count(), s))
    return complex_to_ideal(SimplicialComplex(I.ground, tuple(facets)))


def variable_prime(ground: GroundSet, support: int) -> Ideal:
    """The prime generated by the variables in `support`."""
    gens = tuple(Monomial(ground, 1 << v) for v in bits_of(support))
    return Ideal(ground, gens)


def intersect_ideals(A: Ideal, B: Ideal) -> Ideal:
    """Intersection of square-free monomial ideals via pairwise unions."""
    if A.ground != B.ground:
        raise ValueError("ideals on different ground sets")
    if A.is_zero or B.is_zero:
        return Ideal(A.ground, ())
    if A.is_unit:
        return B
    if B.is_unit:
        return A
    gens = [
        Monomial(A.ground, a | b) for a in A.supports() for b in B.supports()
    ]
    return minimalize(gens, A.ground)


def dual_prime_intersection(I: Ideal) -> Ideal:
    """Test oracle for `dual`: fold the intersection of variable primes."""
    if not I.is_proper:
        raise NotProper("Alexander duality needs a proper ideal")
    out = None
    for s in I.supports():
        prime = variable_prime(I.ground, s)
        out = prime if out is None else intersect_ideals(out, prime)
    return out


def closed_dual(spec: MixedSpec) -> MixedSpec:
    """Symbolic Alexander dual of the supported mixed-product shapes.

    Shapes and their duals, with block sizes (n, m):

    * one block power [(q, 0)] or [(0, r)]     -> the complementary power
    * a sum of block powers [(q, 0), (0, r)]   -> the product [(n-q+1, m-r+1)]
    * a product [(q, r)], q, r >= 1            -> the sum of complementary powers
    * two products [(q, r), (s, t)], q, t >= 1 -> the three-term shape
      [(n-q+1, 0), (n-s+1, m-r+1), (0, m-t+1)]

    Anything else (in particular two-term shapes touching a block-degree 0)
    is left to the general `dual`.
    """
    n, m = spec.ground.n, spec.ground.m
    terms = spec.terms
    if len(terms) == 1:
        (q, r), = terms
        if q == 0 and r == 0:
            raise OutOfRange("block degrees must be at least 1, got the unit ideal")
        if r == 0:
            return MixedSpec(spec.ground, ((n - q + 1, 0),))
        if q == 0:
            return MixedSpec(spec.ground, ((0, m - r + 1),))
        return MixedSpec(spec.ground, ((n - q + 1, 0), (0, m - r + 1)))
    if len(terms) == 2:
        (q1, r1), (q2, r2) = terms
        if q1 == 0 and r2 == 0:
            # sum of pure block powers: J_{r1} + I_{q2}
            return MixedSpec(spec.ground, ((n - q2 + 1, m - r1 + 1),))
        if q1 >= 1 and r2 >= 1:
            q, r, s, t = q1, r1, q2, r2
            return MixedSpec(
                spec.ground,
                ((n - q + 1, 0), (n - s + 1, m - r + 1), (0, m - t + 1)),
            )
        raise UnsupportedShape(
            f"no closed dual for terms {terms}; use the general dual"
        )
    raise UnsupportedShape(f"no closed dual for terms {terms}; use the general dual")
