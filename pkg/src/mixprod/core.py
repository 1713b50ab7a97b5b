"""Square-free monomials, ideals and simplicial complexes on a two-block variable set.

All vertex sets are bitsets over a single ground set: bits 0..n-1 are the
x-block, bits n..n+m-1 the y-block. Everything downstream (duality, homology,
Betti tables) operates on these integers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import (
    GroundTooLarge,
    GroundTooLargeForOracle,
    InvalidTerm,
    MixedGroundSets,
    NotProper,
)

BITSET_WIDTH = 64

# Ceiling for the operations that sweep all 2^(n+m) subsets (Stanley-Reisner
# conversions, the general dual, Krull dimension). Beyond this the sweep is
# hopeless regardless of implementation.
ENUM_LIMIT = 25


@dataclass(frozen=True)
class GroundSet:
    """n x-variables followed by m y-variables, at most 64 in total."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0:
            raise ValueError(f"negative block size: n={self.n}, m={self.m}")
        if self.n + self.m == 0:
            raise ValueError("ground set needs at least one variable")
        if self.n + self.m > BITSET_WIDTH:
            raise GroundTooLarge(
                f"{self.n + self.m} variables exceed the {BITSET_WIDTH}-bit bound"
            )

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def x_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def y_mask(self) -> int:
        return self.full_mask ^ self.x_mask

    def var_name(self, index: int) -> str:
        if not 0 <= index < self.size:
            raise IndexError(index)
        if index < self.n:
            return f"x{index + 1}"
        return f"y{index - self.n + 1}"


def bits_of(mask: int):
    """Yield the set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


_VAR_RE = re.compile(r"([xy])([1-9]\d*)")


@dataclass(frozen=True)
class Monomial:
    """A square-free monomial, stored as the bitset of the variables it uses."""

    ground: GroundSet
    support: int

    def __post_init__(self) -> None:
        if not 0 <= self.support <= self.ground.full_mask:
            raise ValueError(f"support {self.support:#x} lies outside the ground set")

    @property
    def degree(self) -> int:
        return self.support.bit_count()

    @property
    def bidegree(self) -> tuple[int, int]:
        return (
            (self.support & self.ground.x_mask).bit_count(),
            (self.support & self.ground.y_mask).bit_count(),
        )

    @property
    def is_unit(self) -> bool:
        return self.support == 0

    def sort_key(self) -> tuple[int, int]:
        return (self.degree, self.support)

    def __str__(self) -> str:
        if self.support == 0:
            return "1"
        return "*".join(self.ground.var_name(i) for i in bits_of(self.support))

    @classmethod
    def parse(cls, text: str, ground: GroundSet) -> "Monomial":
        """Parse the `x1*x2*y1` interchange form (`1` is the unit monomial)."""
        body = text.strip()
        if body == "1":
            return cls(ground, 0)
        support = 0
        for part in body.split("*"):
            token = part.strip()
            match = _VAR_RE.fullmatch(token)
            if match is None:
                raise ValueError(f"bad variable {token!r} in monomial {text!r}")
            block, index = match.group(1), int(match.group(2))
            block_size = ground.n if block == "x" else ground.m
            if index > block_size:
                raise ValueError(
                    f"{token} outside the ground set (n={ground.n}, m={ground.m})"
                )
            bit = index - 1 if block == "x" else ground.n + index - 1
            if support & (1 << bit):
                raise ValueError(f"repeated variable {token} in {text!r}")
            support |= 1 << bit
        return cls(ground, support)


@dataclass(frozen=True)
class Ideal:
    """A square-free monomial ideal, held by its minimal generators.

    `gens` is canonical: sorted by (degree, support bitset), no generator's
    support containing another's. The empty tuple is the zero ideal; the
    single unit monomial is the unit ideal.
    """

    ground: GroundSet
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if any(g.ground != self.ground for g in self.gens):
            raise MixedGroundSets("generator on a different ground set")
        keys = [g.sort_key() for g in self.gens]
        if keys != sorted(set(keys)):
            raise ValueError("generators not in canonical order")
        if len(self.gens) > 1 and self.gens[0].is_unit:
            raise ValueError("unit generator in a multi-generator ideal")

    @property
    def kind(self) -> str:
        if not self.gens:
            return "zero"
        if self.gens[0].is_unit:
            return "unit"
        return "proper"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].is_unit

    @property
    def is_proper(self) -> bool:
        return bool(self.gens) and not self.gens[0].is_unit

    def supports(self) -> tuple[int, ...]:
        return tuple(g.support for g in self.gens)

    def gens_strings(self) -> list[str]:
        return [str(g) for g in self.gens]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(self.gens_strings())


def minimalize(gens, ground: GroundSet | None = None) -> Ideal:
    """Drop every monomial whose support contains another's and classify the rest.

    The ground set is taken from the monomials; it must be passed explicitly
    when `gens` is empty (the zero ideal).
    """
    supports = []
    for g in gens:
        if ground is None:
            ground = g.ground
        elif g.ground != ground:
            raise MixedGroundSets("generators on different ground sets")
        supports.append(g.support)
    if ground is None:
        raise ValueError("empty generating set needs an explicit ground set")
    kept: list[int] = []
    for s in sorted(set(supports), key=lambda v: (v.bit_count(), v)):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return Ideal(ground, tuple(Monomial(ground, s) for s in kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the ground set, stored by its facets.

    No facets at all is the void complex; the single empty facet is the
    irrelevant complex {∅}.
    """

    ground: GroundSet
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        keys = [(f.bit_count(), f) for f in self.facets]
        if keys != sorted(set(keys)):
            raise ValueError("facets not in canonical order")

    @classmethod
    def from_faces(cls, ground: GroundSet, faces) -> "SimplicialComplex":
        """Build a complex from any face collection, keeping the maximal ones."""
        ordered = sorted(set(faces), key=lambda s: -s.bit_count())
        kept: list[int] = []
        for s in ordered:
            if not any(s & k == s for k in kept):
                kept.append(s)
        kept.sort(key=lambda s: (s.bit_count(), s))
        return cls(ground, tuple(kept))

    @property
    def kind(self) -> str:
        if not self.facets:
            return "void"
        if self.facets == (0,):
            return "irrelevant"
        return "nonempty"

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    def is_face(self, f: int) -> bool:
        return any(f & F == f for F in self.facets)

    def faces(self) -> list[int]:
        """All faces, sorted by (cardinality, bitset value)."""
        out: set[int] = set()
        for F in self.facets:
            s = F
            while True:
                out.add(s)
                if s == 0:
                    break
                s = (s - 1) & F
        return sorted(out, key=lambda f: (f.bit_count(), f))

    def face_string(self, f: int) -> str:
        if f == 0:
            return "{}"
        return "{" + ",".join(self.ground.var_name(i) for i in bits_of(f)) + "}"

    def __str__(self) -> str:
        if self.is_void:
            return "void"
        return ", ".join(self.face_string(f) for f in self.facets)


def _require_enumerable(ground: GroundSet) -> None:
    if ground.size > ENUM_LIMIT:
        raise GroundTooLargeForOracle(
            f"{ground.size} vertices exceed the 2^{ENUM_LIMIT} subset sweep budget"
        )


def _popcounts(size: int) -> np.ndarray:
    counts = np.zeros(1 << size, dtype=np.uint8)
    values = np.arange(1 << size, dtype=np.uint32)
    for _ in range(size):
        counts += (values & 1).astype(np.uint8)
        values >>= 1
    return counts


def _nonface_flags(ground: GroundSet, gen_supports) -> np.ndarray:
    """Boolean array over all subsets: True iff the subset contains a generator."""
    size = ground.size
    flags = np.zeros(1 << size, dtype=bool)
    for s in gen_supports:
        flags[s] = True
    for b in range(size):
        shaped = flags.reshape(-1, 2, 1 << b)
        shaped[:, 1, :] |= shaped[:, 0, :]
    return flags


def ideal_to_complex(I: Ideal) -> SimplicialComplex:
    """The complex whose faces are the subsets containing no generator.

    The zero ideal yields the full simplex; the unit ideal is rejected since
    no complex has it as its face ideal.
    """
    if I.is_unit:
        raise NotProper("the unit ideal corresponds to no simplicial complex")
    _require_enumerable(I.ground)
    size = I.ground.size
    nonface = _nonface_flags(I.ground, I.supports())
    facet = ~nonface
    nonface_view = nonface
    for b in range(size):
        f3 = facet.reshape(-1, 2, 1 << b)
        n3 = nonface_view.reshape(-1, 2, 1 << b)
        # a face missing bit b stays maximal only if adding b leaves the complex
        f3[:, 0, :] &= n3[:, 1, :]
    facets = [int(v) for v in np.nonzero(facet)[0]]
    facets.sort(key=lambda s: (s.bit_count(), s))
    return SimplicialComplex(I.ground, tuple(facets))


def complex_to_ideal(D: SimplicialComplex) -> Ideal:
    """The face ideal: generated by the minimal non-faces of `D`.

    The void complex yields the unit ideal and the full simplex the zero ideal.
    """
    _require_enumerable(D.ground)
    size = D.ground.size
    face = np.zeros(1 << size, dtype=bool)
    for F in D.facets:
        face[F] = True
    for b in range(size):
        shaped = face.reshape(-1, 2, 1 << b)
        shaped[:, 0, :] |= shaped[:, 1, :]
    minimal = ~face
    for b in range(size):
        m3 = minimal.reshape(-1, 2, 1 << b)
        f3 = face.reshape(-1, 2, 1 << b)
        # a non-face containing bit b is minimal only if dropping b gives a face
        m3[:, 1, :] &= f3[:, 0, :]
    supports = [int(v) for v in np.nonzero(minimal)[0]]
    supports.sort(key=lambda s: (s.bit_count(), s))
    return Ideal(D.ground, tuple(Monomial(D.ground, s) for s in supports))


def krull_dim(I: Ideal) -> int:
    """Krull dimension of the quotient by `I`: the largest face cardinality."""
    if I.is_unit:
        raise NotProper("the unit ideal has no face ring")
    if I.is_zero:
        return I.ground.size
    _require_enumerable(I.ground)
    nonface = _nonface_flags(I.ground, I.supports())
    counts = _popcounts(I.ground.size)
    return int(counts[~nonface].max())


@dataclass(frozen=True)
class MixedSpec:
    """A sum of terms I_q*J_r recorded by bidegree, kept in normal form.

    Normal form: degrees within the block bounds (a term with q > n or r > m
    generates the zero ideal and is dropped), no term componentwise >= another
    (its ideal is contained in the other's), terms sorted ascending. The term
    (0, 0) denotes the whole ring and therefore swallows every other term.
    """

    ground: GroundSet
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n, m = self.ground.n, self.ground.m
        cleaned: list[tuple[int, int]] = []
        for term in self.terms:
            try:
                q, r = term
            except (TypeError, ValueError):
                raise InvalidTerm(f"bad term {term!r}") from None
            if not isinstance(q, int) or not isinstance(r, int) or q < 0 or r < 0:
                raise InvalidTerm(f"bad term {term!r}")
            if q > n or r > m:
                continue
            if (q, r) not in cleaned:
                cleaned.append((q, r))
        kept = [
            t
            for t in cleaned
            if not any(o != t and o[0] <= t[0] and o[1] <= t[1] for o in cleaned)
        ]
        kept.sort()
        object.__setattr__(self, "terms", tuple(kept))

    @property
    def is_unit(self) -> bool:
        return self.terms == ((0, 0),)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def generator_count(self) -> int:
        n, m = self.ground.n, self.ground.m
        return sum(math.comb(n, q) * math.comb(m, r) for q, r in self.terms)

    def mirrored(self) -> "MixedSpec":
        """The same ideal with the x- and y-blocks swapped."""
        return MixedSpec(
            GroundSet(self.ground.m, self.ground.n),
            tuple((r, q) for q, r in self.terms),
        )


def make_mixed(spec: MixedSpec) -> Ideal:
    """Expand a mixed-product description into its minimal generating set."""
    ground = spec.ground
    n, m = ground.n, ground.m
    supports: list[int] = []
    for q, r in spec.terms:
        if q == 0 and r == 0:
            return Ideal(ground, (Monomial(ground, 0),))
        for xs in combinations(range(n), q):
            xmask = 0
            for i in xs:
                xmask |= 1 << i
            for ys in combinations(range(n, n + m), r):
                mask = xmask
                for j in ys:
                    mask |= 1 << j
                supports.append(mask)
    # normalized terms are pairwise incomparable, so bidegree classes cannot
    # divide each other and the union is already minimal
    supports.sort(key=lambda s: (s.bit_count(), s))
    return Ideal(ground, tuple(Monomial(ground, s) for s in supports))
