"""Exact reduced simplicial homology: links, boundary matrices, ranks.

The augmented chain complex is used throughout (C_{-1} is the field), so the
irrelevant complex {∅} has a single homology class in degree -1 and cones are
acyclic. Ranks are computed exactly: fraction-free integer elimination over
the rationals, bit-packed elimination over GF(2), modular elimination over
GF(p).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .core import SimplicialComplex, bits_of
from .errors import NotAFace, VoidComplex


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0 or p % 3 == 0:
        return False
    d = 5
    while d * d <= p:
        if p % d == 0 or p % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: characteristic 0 (rationals) or a prime p < 2^31."""

    char: int

    def __post_init__(self) -> None:
        if self.char == 0:
            return
        if self.char >= 1 << 31 or not _is_prime(self.char):
            raise ValueError(f"characteristic {self.char} is not a prime below 2^31")

    @property
    def tag(self) -> str:
        if self.char == 0:
            return "rat"
        if self.char == 2:
            return "gf2"
        return f"gfp:{self.char}"

    @classmethod
    def parse(cls, tag: str) -> "FieldSpec":
        if tag == "rat":
            return RATIONALS
        if tag == "gf2":
            return GF2
        if tag.startswith("gfp:"):
            return cls(int(tag[4:]))
        raise ValueError(f"unknown field {tag!r} (expected rat, gf2 or gfp:<p>)")


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class SignMatrix:
    """A sparse matrix with entries in {-1, 0, +1}, stored by columns."""

    nrows: int
    ncols: int
    cols: tuple[tuple[tuple[int, int], ...], ...]

    def to_rows(self) -> list[list[int]]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, sign in col:
                rows[i][j] = sign
        return rows

    def compose(self, other: "SignMatrix") -> dict[tuple[int, int], int]:
        """Entries of self @ other (used to assert that boundaries square to zero)."""
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out: dict[tuple[int, int], int] = {}
        for j, col in enumerate(other.cols):
            for k, s1 in col:
                for i, s2 in self.cols[k]:
                    key = (i, j)
                    v = out.get(key, 0) + s1 * s2
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        return out


def matrix_rank(matrix, field: FieldSpec = RATIONALS) -> int:
    """Exact rank over the given field of a SignMatrix or a dense row list."""
    if isinstance(matrix, SignMatrix):
        nrows, ncols = matrix.nrows, matrix.ncols
        if nrows == 0 or ncols == 0:
            return 0
        if field.char == 2:
            bitrows = [0] * nrows
            for j, col in enumerate(matrix.cols):
                for i, _sign in col:
                    bitrows[i] |= 1 << j
            return kernels.rank_gf2(bitrows, ncols)
        rows = matrix.to_rows()
    else:
        rows = [list(r) for r in matrix]
        if not rows or not rows[0]:
            return 0
        ncols = len(rows[0])
        if field.char == 2:
            bitrows = []
            for row in rows:
                bits = 0
                for j, v in enumerate(row):
                    if v % 2:
                        bits |= 1 << j
                bitrows.append(bits)
            return kernels.rank_gf2(bitrows, ncols)
    if field.char == 0:
        return kernels.rank_int(rows)
    return kernels.rank_mod(rows, field.char)


@dataclass(frozen=True)
class ChainComplex:
    """Augmented chain complex of a complex: dimensions and boundary matrices.

    `dims[k]` is dim C_{k-1} (so `dims[0]` = dim C_{-1} = 1) and
    `boundaries[j]` is the matrix of ∂_j : C_j -> C_{j-1}; `boundaries[0]`
    is the augmentation row.
    """

    dims: tuple[int, ...]
    boundaries: tuple[SignMatrix, ...]

    @property
    def top_dim(self) -> int:
        return len(self.dims) - 2

    def dim_c(self, j: int) -> int:
        return self.dims[j + 1]

    def boundary(self, j: int) -> SignMatrix:
        return self.boundaries[j]

    def homology(self, field: FieldSpec = RATIONALS) -> list[int]:
        """[dim H̃_{-1}, dim H̃_0, ..., dim H̃_top] over `field`."""
        ranks = [matrix_rank(b, field) for b in self.boundaries] + [0]
        out = [self.dims[0] - ranks[0]]
        for j in range(self.top_dim + 1):
            out.append(self.dims[j + 1] - ranks[j] - ranks[j + 1])
        return out


def _boundary_matrices(faces) -> tuple[list[list[int]], list[SignMatrix]]:
    """Faces grouped by cardinality plus all boundary matrices, ∂_0 included."""
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    top = max(by_size)
    layers = [sorted(by_size.get(d, [])) for d in range(top + 1)]
    index = [{f: i for i, f in enumerate(layer)} for layer in layers]
    matrices: list[SignMatrix] = []
    for d in range(1, top + 1):
        lower = index[d - 1]
        cols = []
        for f in layers[d]:
            col = []
            sign = 1
            for v in bits_of(f):
                col.append((lower[f ^ (1 << v)], sign))
                sign = -sign
            cols.append(tuple(col))
        matrices.append(SignMatrix(len(layers[d - 1]), len(layers[d]), tuple(cols)))
    return layers, matrices


def chain_complex(D: SimplicialComplex) -> ChainComplex:
    """The augmented chain complex of a nonvoid complex."""
    if D.is_void:
        raise VoidComplex("the void complex has no chain complex")
    layers, matrices = _boundary_matrices(D.faces())
    return ChainComplex(tuple(len(layer) for layer in layers), tuple(matrices))


def homology_from_faces(faces, field: FieldSpec = RATIONALS) -> list[int]:
    """Reduced homology dimensions computed straight from a face list.

    The face list must be subset-closed and contain the empty face. Cones and
    0-dimensional complexes are dispatched without any matrix work; this is
    the hot path under the Betti-number oracle.
    """
    top = 0
    for f in faces:
        c = f.bit_count()
        if c > top:
            top = c
    if top == 0:
        return [1]
    if top == 1:
        return [0, len(faces) - 2]
    face_set = set(faces)
    union = 0
    for f in faces:
        union |= f
    for v in bits_of(union):
        bit = 1 << v
        if all(f & bit or (f | bit) in face_set for f in faces):
            return [0] * (top + 1)
    layers, matrices = _boundary_matrices(faces)
    ranks = [1]  # the augmentation has rank 1 once vertices exist
    ranks += [matrix_rank(mat, field) for mat in matrices[1:]]
    ranks.append(0)
    out = [0]  # H̃_{-1} = 1 - rank(∂_0) = 0 here
    for j in range(top):
        out.append(len(layers[j + 1]) - ranks[j] - ranks[j + 1])
    return out


def reduced_homology_dims(D: SimplicialComplex, field: FieldSpec = RATIONALS) -> list[int]:
    """[dim H̃_{-1}, dim H̃_0, ..., dim H̃_{dim D}] over `field`."""
    if D.is_void:
        raise VoidComplex("the void complex has no reduced homology")
    return homology_from_faces(D.faces(), field)


def link(D: SimplicialComplex, f: int) -> SimplicialComplex:
    """The link of a face: all g disjoint from f with g ∪ f in the complex."""
    if not D.is_face(f):
        raise NotAFace(f"{D.face_string(f) if not D.is_void else f} is not a face")
    candidates = [F ^ f for F in D.facets if F & f == f]
    return SimplicialComplex.from_faces(D.ground, candidates)
