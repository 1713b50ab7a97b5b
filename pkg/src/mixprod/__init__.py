"""Exact toolkit for square-free monomial ideals in two variable blocks.

Alexander duality (general and closed-form), graded Betti numbers (a
Hochster-formula oracle plus closed formulas for mixed products of the block
Veronese ideals), Cohen-Macaulay classification and type, and exhaustive
desk-scale verification sweeps tying the two routes together.
"""

from .alexander import closed_dual, dual, dual_prime_intersection, intersect_ideals
from .betti import (
    BettiTable,
    Polynomial,
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
    projective_dimension,
)
from .cm import (
    classify_cm,
    closed_type,
    cm_type,
    depth_of_quotient,
    is_cm,
    is_gorenstein,
)
from .core import (
    GroundSet,
    Ideal,
    MixedSpec,
    Monomial,
    SimplicialComplex,
    complex_to_ideal,
    ideal_to_complex,
    krull_dim,
    make_mixed,
    minimalize,
)
from .errors import (
    DegreeOutOfRange,
    ExprSyntaxError,
    GroundTooLarge,
    GroundTooLargeForOracle,
    InvalidTerm,
    MixedGroundSets,
    MixprodError,
    NotAFace,
    NotCM,
    NotProper,
    OutOfRange,
    RepeatedBlock,
    UnsupportedShape,
    VoidComplex,
)
from .exprs import format_spec, parse_ideal_expr
from .homology import (
    GF2,
    RATIONALS,
    ChainComplex,
    FieldSpec,
    SignMatrix,
    chain_complex,
    link,
    matrix_rank,
    reduced_homology_dims,
)

__version__ = "0.1.0"
