"""Graded Betti tables: the Hochster-formula oracle and the closed formulas.

Tables are stored for the quotient S/I (so beta(0, 0) = 1 always); the
generator-side convention beta_i(I)_j = beta_{i+1, j}(S/I) is available
through `beta_ideal`. The closed formulas cover mixed products of the
square-free Veronese ideals of the two blocks; the oracle covers every
proper square-free ideal at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import GroundSet, Ideal, MixedSpec, SimplicialComplex, ideal_to_complex
from .errors import (
    GroundTooLargeForOracle,
    NotProper,
    OutOfRange,
    UnsupportedShape,
)
from .homology import RATIONALS, FieldSpec, homology_from_faces

ORACLE_LIMIT = 22
RESTRICTION_ORACLE_LIMIT = 16


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class Polynomial:
    """A univariate integer polynomial in t, trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "Polynomial":
        if not terms:
            return cls(())
        out = [0] * (max(terms) + 1)
        for k, v in terms.items():
            out[k] = v
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for k, v in enumerate(other.coeffs):
            a[k] += v
        return Polynomial(tuple(a))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in enumerate(self.coeffs):
            if v == 0:
                continue
            if k == 0:
                body = str(abs(v))
            else:
                t = "t" if k == 1 else f"t^{k}"
                body = t if abs(v) == 1 else f"{abs(v)}*{t}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)


@dataclass(frozen=True, eq=True)
class BettiTable:
    """Sparse graded Betti numbers of S/I over a fixed field."""

    ground: GroundSet
    field: FieldSpec
    entries: dict

    def __post_init__(self) -> None:
        if self.entries.get((0, 0)) != 1 or any(
            i == 0 and (i, j) != (0, 0) for (i, j) in self.entries
        ):
            raise ValueError("row i=0 must be exactly beta_{0,0} = 1")
        for (i, j), v in self.entries.items():
            if v <= 0:
                raise ValueError(f"non-positive entry at {(i, j)}")
            if i >= 1 and j < i:
                raise ValueError(f"entry at {(i, j)} below the degree bound j >= i")

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def beta_ideal(self, i: int, j: int) -> int:
        """Generator-side convention: beta_i(I)_j = beta_{i+1,j}(S/I)."""
        return self.beta(i + 1, j)

    def total(self, i: int) -> int:
        return sum(v for (k, _j), v in self.entries.items() if k == i)

    def max_index(self) -> int:
        return max(i for (i, _j) in self.entries)

    def ideal_totals(self) -> list[int]:
        """[beta_0(I), beta_1(I), ...] up to the projective dimension."""
        top = self.max_index()
        return [self.total(i + 1) for i in range(top)]

    def diagram(self) -> str:
        """Betti diagram: column i, row j - i (the usual display layout)."""
        top_i = self.max_index()
        rows = sorted({j - i for (i, j) in self.entries})
        width = max(
            len(str(max(self.entries.values()))),
            len(str(top_i)),
            len(str(rows[-1])),
        ) + 2
        lines = ["".join(str(i).rjust(width) for i in ["", *range(top_i + 1)])]
        for d in range(rows[0], rows[-1] + 1):
            cells = [str(d).rjust(width - 1) + ":"]
            for i in range(top_i + 1):
                v = self.beta(i, i + d)
                cells.append((str(v) if v else ".").rjust(width))
            lines.append("".join(cells))
        return "\n".join(lines)


def projective_dimension(table: BettiTable) -> int:
    """Largest homological index with a nonzero entry."""
    return table.max_index()


def is_linear_resolution(table: BettiTable, d: int) -> bool:
    """True iff every syzygy entry sits on the diagonal j = d + i - 1.

    `d` is the common degree of the generators; in the generator-side
    convention this says beta_i(I) is concentrated in degree d + i.
    """
    return all(j == d + i - 1 for (i, j) in table.entries if i >= 1)


def k_polynomial(table: BettiTable) -> Polynomial:
    """Alternating sum sum_{i,j} (-1)^i beta_{i,j} t^j."""
    terms: dict[int, int] = {}
    for (i, j), v in table.entries.items():
        terms[j] = terms.get(j, 0) + (v if i % 2 == 0 else -v)
    return Polynomial.from_dict(terms)


def hilbert_numerator(I: Ideal) -> Polynomial:
    """(1-t)^(n+m) times the Hilbert series of S/I, by face enumeration.

    Uses only the face-counting sweep, no homology, so it cross-checks the
    Betti oracle through the identity with `k_polynomial`.
    """
    if not I.is_proper:
        raise NotProper("Hilbert numerator needs a proper ideal")
    size = I.ground.size
    counts = [0] * (size + 1)
    for f in ideal_to_complex(I).faces():
        counts[f.bit_count()] += 1
    coeffs = [0] * (size + 1)
    for d, cnt in enumerate(counts):
        if cnt == 0:
            continue
        for k in range(size - d + 1):
            coeffs[d + k] += cnt * (-1) ** k * comb(size - d, k)
    return Polynomial(tuple(coeffs))


def _dual_complex(I: Ideal) -> SimplicialComplex:
    full = I.ground.full_mask
    facets = sorted((full ^ s for s in I.supports()), key=lambda s: (s.bit_count(), s))
    return SimplicialComplex(I.ground, tuple(facets))


def hochster_betti(I: Ideal, field: FieldSpec = RATIONALS) -> BettiTable:
    """Betti table of S/I by summing link homology over the dual complex.

    For every face of the dual complex, the reduced homology of its link
    lands in the column whose degree is the complement's cardinality; faces
    absent from the dual complex contribute nothing and are skipped.
    """
    if not I.is_proper:
        raise NotProper("Betti oracle needs a proper ideal")
    size = I.ground.size
    if size > ORACLE_LIMIT:
        raise GroundTooLargeForOracle(
            f"{size} vertices exceed the oracle bound of {ORACLE_LIMIT}"
        )
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    faces = _dual_complex(I).faces()
    for tau in faces:
        degree = size - tau.bit_count()
        link_faces = [f ^ tau for f in faces if f & tau == tau]
        dims = homology_from_faces(link_faces, field)
        for idx, v in enumerate(dims):
            if v:
                key = (idx + 1, degree)
                entries[key] = entries.get(key, 0) + v
    return BettiTable(I.ground, field, entries)


def hochster_betti_restriction(I: Ideal, field: FieldSpec = RATIONALS) -> BettiTable:
    """Second oracle: Betti table via homology of all induced subcomplexes.

    Independent of the link-based route (it never touches the dual complex),
    so agreement between the two is a real cross-check. Costs a homology
    computation per subset of the ground set.
    """
    if not I.is_proper:
        raise NotProper("Betti oracle needs a proper ideal")
    size = I.ground.size
    if size > RESTRICTION_ORACLE_LIMIT:
        raise GroundTooLargeForOracle(
            f"{size} vertices exceed the restriction-oracle bound of "
            f"{RESTRICTION_ORACLE_LIMIT}"
        )
    faces = ideal_to_complex(I).faces()
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for sigma in range(1 << size):
        sub = [f for f in faces if f & ~sigma == 0]
        dims = homology_from_faces(sub, field)
        degree = sigma.bit_count()
        for idx, v in enumerate(dims):
            if not v:
                continue
            i = degree - idx - 1
            if i >= 0:
                key = (i + 1, degree)
                entries[key] = entries.get(key, 0) + v
    return BettiTable(I.ground, field, entries)


def closed_betti_block(n: int, q: int, i: int) -> int:
    """beta_i of the degree-q square-free Veronese ideal in an n-variable block.

    The value C(n, q+i) * C(q+i-1, i); it sits in degree q + i and vanishes
    once q + i exceeds n.
    """
    if not 1 <= q <= n:
        raise OutOfRange(f"need 1 <= q <= n, got q={q}, n={n}")
    if i < 0:
        raise OutOfRange(f"negative homological index i={i}")
    return binom(n, q + i) * binom(q + i - 1, i)


def closed_betti_product(n: int, m: int, q: int, r: int, i: int) -> int:
    """beta_i of the product of block Veronese ideals of degrees (q, r).

    Degenerate block degrees delegate: q = 0 reduces to the y-block alone and
    r = 0 to the x-block alone. The value sits in degree q + r + i.
    """
    if i < 0:
        raise OutOfRange(f"negative homological index i={i}")
    if q == 0 and r == 0:
        raise OutOfRange("q = r = 0 denotes the unit ideal")
    if q == 0:
        return closed_betti_block(m, r, i)
    if r == 0:
        return closed_betti_block(n, q, i)
    if not 1 <= q <= n or not 1 <= r <= m:
        raise OutOfRange(f"need 1 <= q <= n and 1 <= r <= m, got {(q, r, n, m)}")
    total = 0
    for j in range(i + 1):
        k = i - j
        total += (
            binom(n, q + j)
            * binom(m, r + k)
            * binom(q + j - 1, j)
            * binom(r + k - 1, k)
        )
    return total


def closed_betti_mixed(n: int, m: int, q: int, r: int, s: int, t: int, i: int) -> int:
    """beta_i of the two-term sum I_q*J_r + I_s*J_t with q < s and t < r.

    For i >= 1 this is beta_i(I_q J_r) + beta_i(I_s J_t) + beta_{i-1}(I_s J_r);
    i = 0 counts the generators, whose bidegree classes cannot overlap.
    """
    if not (0 <= q < s <= n) or not (0 <= t < r <= m):
        raise OutOfRange(f"need 0 <= q < s <= n and 0 <= t < r <= m, got {(q, r, s, t)}")
    if i < 0:
        raise OutOfRange(f"negative homological index i={i}")
    if i == 0:
        return binom(n, q) * binom(m, r) + binom(n, s) * binom(m, t)
    return (
        closed_betti_product(n, m, q, r, i)
        + closed_betti_product(n, m, s, t, i)
        + closed_betti_product(n, m, s, r, i - 1)
    )


def closed_betti_dual_mixed(
    n: int, m: int, q: int, r: int, s: int, t: int, i: int
) -> int:
    """beta_i of the three-term sum I_s + I_q*J_t + J_r (the dual shape).

    Requires 1 <= q < s <= n and 1 <= t < r <= m. For i >= 1 the value is
    beta_i(I_s) + beta_i(I_q J_t) + beta_i(J_r)
    + beta_{i-1}(I_q J_r) + beta_{i-1}(I_s J_t);
    i = 0 again counts generators.
    """
    if not (1 <= q < s <= n) or not (1 <= t < r <= m):
        raise OutOfRange(f"need 1 <= q < s <= n and 1 <= t < r <= m, got {(q, r, s, t)}")
    if i < 0:
        raise OutOfRange(f"negative homological index i={i}")
    if i == 0:
        return binom(n, s) + binom(n, q) * binom(m, t) + binom(m, r)
    return (
        closed_betti_block(n, s, i)
        + closed_betti_product(n, m, q, t, i)
        + closed_betti_block(m, r, i)
        + closed_betti_product(n, m, q, r, i - 1)
        + closed_betti_product(n, m, s, t, i - 1)
    )


def closed_betti_table(spec: MixedSpec, field: FieldSpec = RATIONALS) -> BettiTable:
    """Graded Betti table assembled from the closed formulas.

    Supports the closed-form shapes: a single term, any normalized two-term
    sum, and the three-term dual shape [(0, r), (q, t), (s, 0)]. Each summand
    formula is placed in the degree its linear resolution dictates.
    """
    n, m = spec.ground.n, spec.ground.m
    terms = spec.terms
    entries: dict[tuple[int, int], int] = {(0, 0): 1}

    def put(i: int, j: int, v: int) -> None:
        if v:
            key = (i + 1, j)
            entries[key] = entries.get(key, 0) + v

    bound = n + m + 1
    if len(terms) == 1:
        (q, r), = terms
        if q == 0 and r == 0:
            raise UnsupportedShape("the unit ideal has no Betti table")
        for i in range(bound):
            put(i, q + r + i, closed_betti_product(n, m, q, r, i))
    elif len(terms) == 2:
        (q, r), (s, t) = terms
        put(0, q + r, binom(n, q) * binom(m, r))
        put(0, s + t, binom(n, s) * binom(m, t))
        for i in range(1, bound):
            put(i, q + r + i, closed_betti_product(n, m, q, r, i))
            put(i, s + t + i, closed_betti_product(n, m, s, t, i))
            put(i, s + r + i - 1, closed_betti_product(n, m, s, r, i - 1))
    elif len(terms) == 3:
        (z, r), (q, t), (s, z2) = terms
        if z != 0 or z2 != 0:
            raise UnsupportedShape(f"no closed form for terms {terms}")
        put(0, s, binom(n, s))
        put(0, q + t, binom(n, q) * binom(m, t))
        put(0, r, binom(m, r))
        for i in range(1, bound):
            put(i, s + i, closed_betti_block(n, s, i))
            put(i, q + t + i, closed_betti_product(n, m, q, t, i))
            put(i, r + i, closed_betti_block(m, r, i))
            put(i, q + r + i - 1, closed_betti_product(n, m, q, r, i - 1))
            put(i, s + t + i - 1, closed_betti_product(n, m, s, t, i - 1))
    else:
        raise UnsupportedShape(f"no closed form for terms {terms}")
    return BettiTable(spec.ground, field, entries)
