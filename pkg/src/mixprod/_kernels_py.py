"""Pure-Python exact rank kernels.

Fallback for the compiled module built from `_kernels.pyx`; both expose the
same three functions. All arithmetic is exact. `rank_int` works on unbounded
Python integers, so it is also the escape hatch when the compiled
fraction-free elimination declines a matrix whose minors outgrow 64 bits.
"""

from __future__ import annotations

import numpy as np


def rank_gf2(rows: list[int], ncols: int) -> int:
    """Rank over GF(2) of rows given as bitmasks."""
    pivots: dict[int, int] = {}
    for row in rows:
        v = row
        while v:
            top = v.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = v
                break
            v ^= piv
    return len(pivots)


def rank_mod(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p), p an odd prime below 2^31.

    Vectorized elimination on int64: entries stay below p, so the products
    formed while clearing a column stay below 2^62 and never overflow.
    """
    if not rows or not rows[0]:
        return 0
    mat = np.array(rows, dtype=np.int64) % p
    nrows, ncols = mat.shape
    rank = 0
    for col in range(ncols):
        pivs = np.nonzero(mat[rank:, col])[0]
        if pivs.size == 0:
            continue
        piv = rank + int(pivs[0])
        if piv != rank:
            mat[[rank, piv]] = mat[[piv, rank]]
        inv = pow(int(mat[rank, col]), p - 2, p)
        below = mat[rank + 1 :, col]
        if below.size:
            factors = below * inv % p
            mat[rank + 1 :, col:] = (
                mat[rank + 1 :, col:] - factors[:, None] * mat[rank, col:]
            ) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_int(rows: list[list[int]]) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Full pivoting; pivots of absolute value 1 are preferred, which keeps the
    intermediate minors small on the sparse sign matrices this package feeds
    in. Exact for arbitrary integer entries.
    """
    mat = [list(row) for row in rows if any(row)]
    if not mat:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    while rank < nrows and rank < ncols:
        piv = None
        for r in range(rank, nrows):
            row = mat[r]
            for c in range(rank, ncols):
                v = row[c]
                if v:
                    if piv is None or v == 1 or v == -1:
                        piv = (r, c)
                    if v == 1 or v == -1:
                        break
            if piv is not None and mat[piv[0]][piv[1]] in (1, -1):
                break
        if piv is None:
            break
        pr, pc = piv
        if pr != rank:
            mat[rank], mat[pr] = mat[pr], mat[rank]
        if pc != rank:
            for row in mat:
                row[rank], row[pc] = row[pc], row[rank]
        pivot = mat[rank][rank]
        prow = mat[rank]
        tail = prow[rank + 1 :]
        for r in range(rank + 1, nrows):
            row = mat[r]
            factor = row[rank]
            if factor == 0 and pivot == prev:
                continue
            if prev == 1:
                row[rank + 1 :] = [
                    a * pivot - factor * b for a, b in zip(row[rank + 1 :], tail)
                ]
            else:
                row[rank + 1 :] = [
                    (a * pivot - factor * b) // prev
                    for a, b in zip(row[rank + 1 :], tail)
                ]
            row[rank] = 0
        prev = pivot
        rank += 1
    return rank
