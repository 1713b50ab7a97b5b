# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact rank kernels (see `_kernels_py` for the pure fallback)."""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    ctypedef long long int128 "__int128"

# |entry| must stay below this during fraction-free elimination so the
# next update's products fit in __int128 and results round-trip to int64
DEF BAREISS_BOUND = 4611686018427387904  # 2**62


def rank_gf2(rows, int ncols):
    """Rank over GF(2); rows are Python int bitmasks with `ncols` columns."""
    cdef int nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef int words = (ncols + 63) >> 6
    cdef uint64_t *mat = <uint64_t *> PyMem_Malloc(nrows * words * sizeof(uint64_t))
    if mat is NULL:
        raise MemoryError()
    cdef int i, w, r, col, piv
    cdef uint64_t bit
    cdef object row
    try:
        for i in range(nrows):
            row = rows[i]
            for w in range(words):
                mat[i * words + w] = <uint64_t> ((row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
        rank = 0
        for col in range(ncols):
            w = col >> 6
            bit = (<uint64_t> 1) << (col & 63)
            piv = -1
            for r in range(rank, nrows):
                if mat[r * words + w] & bit:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for i in range(words):
                    mat[piv * words + i], mat[rank * words + i] = (
                        mat[rank * words + i], mat[piv * words + i])
            for r in range(rank + 1, nrows):
                if mat[r * words + w] & bit:
                    for i in range(words):
                        mat[r * words + i] ^= mat[rank * words + i]
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        PyMem_Free(mat)


cdef int64_t _modpow(int64_t base, int64_t exp, int64_t p) noexcept:
    cdef int64_t acc = 1
    base %= p
    while exp > 0:
        if exp & 1:
            acc = acc * base % p
        base = base * base % p
        exp >>= 1
    return acc


def rank_mod(rows, long long p):
    """Rank over GF(p), p an odd prime below 2^31."""
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0
    cdef int ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef int64_t *mat = <int64_t *> PyMem_Malloc(nrows * ncols * sizeof(int64_t))
    if mat is NULL:
        raise MemoryError()
    cdef int i, j, r, col, piv, rank
    cdef int64_t inv, f, v
    cdef object row
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                mat[i * ncols + j] = <int64_t> (row[j] % p)
        rank = 0
        for col in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if mat[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(col, ncols):
                    mat[piv * ncols + j], mat[rank * ncols + j] = (
                        mat[rank * ncols + j], mat[piv * ncols + j])
            inv = _modpow(mat[rank * ncols + col], p - 2, p)
            for r in range(rank + 1, nrows):
                v = mat[r * ncols + col]
                if v != 0:
                    f = v * inv % p
                    for j in range(col, ncols):
                        mat[r * ncols + j] = (
                            mat[r * ncols + j] - f * mat[rank * ncols + j]) % p
                        if mat[r * ncols + j] < 0:
                            mat[r * ncols + j] += p
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        PyMem_Free(mat)


def rank_int(rows):
    """Rank over the rationals by fraction-free elimination on int64.

    Returns -1 when an input entry or an intermediate minor leaves the
    64-bit safe range; the caller then falls back to the pure kernel,
    which runs on unbounded integers.
    """
    cdef int nrows_all = len(rows)
    if nrows_all == 0:
        return 0
    cdef int ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef int64_t *mat = <int64_t *> PyMem_Malloc(nrows_all * ncols * sizeof(int64_t))
    if mat is NULL:
        raise MemoryError()
    cdef int i, j, r, c, rank, pr, pc, unit_found
    cdef int64_t pivot, prev, factor, v
    cdef int128 num
    cdef object row
    try:
        try:
            for i in range(nrows_all):
                row = rows[i]
                for j in range(ncols):
                    v = row[j]
                    if v >= BAREISS_BOUND or v <= -BAREISS_BOUND:
                        return -1
                    mat[i * ncols + j] = v
        except OverflowError:
            return -1
        nrows = nrows_all
        rank = 0
        prev = 1
        while rank < nrows and rank < ncols:
            pr = -1
            pc = -1
            unit_found = 0
            for r in range(rank, nrows):
                for c in range(rank, ncols):
                    v = mat[r * ncols + c]
                    if v != 0:
                        if pr < 0 or v == 1 or v == -1:
                            pr = r
                            pc = c
                        if v == 1 or v == -1:
                            unit_found = 1
                            break
                if unit_found:
                    break
            if pr < 0:
                break
            if pr != rank:
                for j in range(ncols):
                    mat[pr * ncols + j], mat[rank * ncols + j] = (
                        mat[rank * ncols + j], mat[pr * ncols + j])
            if pc != rank:
                for i in range(nrows):
                    mat[i * ncols + pc], mat[i * ncols + rank] = (
                        mat[i * ncols + rank], mat[i * ncols + pc])
            pivot = mat[rank * ncols + rank]
            for r in range(rank + 1, nrows):
                factor = mat[r * ncols + rank]
                if factor == 0 and pivot == prev:
                    continue
                for c in range(rank + 1, ncols):
                    num = (<int128> mat[r * ncols + c]) * pivot
                    num -= (<int128> factor) * mat[rank * ncols + c]
                    # the division by the previous pivot is exact; skip the
                    # slow int128 divide in the dominant unit-pivot case
                    if prev == -1:
                        num = -num
                    elif prev != 1:
                        num //= prev
                    if num >= BAREISS_BOUND or num <= -BAREISS_BOUND:
                        return -1
                    mat[r * ncols + c] = <int64_t> num
                mat[r * ncols + rank] = 0
            prev = pivot
            rank += 1
        return rank
    finally:
        PyMem_Free(mat)
