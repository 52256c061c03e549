# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled orbit enumeration over structured wreath generators.

A generator is given by per-block digit tables ``tables[g, i, :]`` (block
size ``B``) and a block permutation ``tops[g, :]``; a point code is ``k``
base-``B`` digits with block 0 most significant.  Explicit permutations are
the case ``k == 1``.

Breadth-first search runs level by level.  Images of a slice of the current
level are computed (in parallel when ``threads > 1``) into a buffer, then
claimed serially in buffer order, so labels and queue order do not depend on
the thread count.
"""

import numpy as np
from cython.parallel cimport prange
from libc.stdint cimport int32_t, int64_t

DEF CHUNK = 65536
DEF MAX_BLOCKS = 64


cdef inline void _images(const int32_t[:, :, ::1] tables, const int32_t[:, ::1] tops,
                         const int64_t[::1] pw, int64_t B, int k, int ngen, int shift,
                         int64_t pt, int64_t* out) noexcept nogil:
    # decode the digits once, then form every generator's image from them
    cdef int64_t digs[MAX_BLOCKS]
    cdef int64_t x = pt, acc, mask = B - 1
    cdef int i, g
    if shift > 0:
        for i in range(k - 1, -1, -1):
            digs[i] = x & mask
            x >>= shift
    else:
        for i in range(k - 1, -1, -1):
            digs[i] = x % B
            x //= B
    for g in range(ngen):
        acc = 0
        for i in range(k):
            acc += tables[g, i, digs[i]] * pw[tops[g, i]]
        out[g] = acc


cdef int64_t _bfs(const int32_t[:, :, ::1] tables, const int32_t[:, ::1] tops,
                  const int64_t[::1] pw, int64_t B, int k, int64_t seed, int32_t label,
                  int32_t[::1] labels, int64_t[::1] queue, int64_t[::1] buf,
                  int nthreads) noexcept nogil:
    cdef int ngen = tables.shape[0]
    cdef int64_t head = 0, tail = 1, level_end, start, stop, n, t, img
    cdef int shift = _log2_exact(B)
    queue[0] = seed
    labels[seed] = label
    while head < tail:
        level_end = tail
        start = head
        while start < level_end:
            stop = start + CHUNK
            if stop > level_end:
                stop = level_end
            n = stop - start
            if nthreads > 1:
                for t in prange(n, num_threads=nthreads, schedule="static"):
                    _images(tables, tops, pw, B, k, ngen, shift, queue[start + t], &buf[t * ngen])
            else:
                for t in range(n):
                    _images(tables, tops, pw, B, k, ngen, shift, queue[start + t], &buf[t * ngen])
            for t in range(n * ngen):
                img = buf[t]
                if labels[img] < 0:
                    labels[img] = label
                    queue[tail] = img
                    tail += 1
            start = stop
        head = level_end
    return tail


cdef inline int _log2_exact(int64_t B) noexcept nogil:
    # shift width when B is a power of two, else 0
    cdef int s = 0
    if B < 2 or (B & (B - 1)) != 0:
        return 0
    while (<int64_t>1 << s) < B:
        s += 1
    return s


def _check_blocks(int k):
    if k > MAX_BLOCKS:
        raise ValueError(f"at most {MAX_BLOCKS} blocks are supported, got {k}")


def _powers(int64_t B, int k):
    pw = np.empty(k, dtype=np.int64)
    cdef int i
    for i in range(k):
        pw[i] = B ** (k - 1 - i)
    return pw


def orbit_labels(tables, tops, int64_t B, int k, int threads=1):
    """Label every point by orbit; return ``(labels, reps, sizes)``.

    Orbits are numbered in order of their least point, which is the
    representative.
    """
    _check_blocks(k)
    cdef const int32_t[:, :, ::1] tv = np.ascontiguousarray(tables, dtype=np.int32)
    cdef const int32_t[:, ::1] pv = np.ascontiguousarray(tops, dtype=np.int32)
    cdef int64_t N = B ** k
    cdef int64_t[::1] pw = _powers(B, k)
    labels_arr = np.full(N, -1, dtype=np.int32)
    cdef int32_t[::1] labels = labels_arr
    cdef int64_t[::1] queue = np.empty(N, dtype=np.int64)
    cdef int64_t[::1] buf = np.empty(CHUNK * max(tv.shape[0], 1), dtype=np.int64)
    cdef int64_t s = 0, size
    cdef int32_t nlab = 0
    cdef int nthreads = threads
    reps = []
    sizes = []
    while s < N:
        with nogil:
            while s < N and labels[s] >= 0:
                s += 1
            if s < N:
                size = _bfs(tv, pv, pw, B, k, s, nlab, labels, queue, buf, nthreads)
        if s < N:
            reps.append(s)
            sizes.append(size)
            nlab += 1
            s += 1
    return labels_arr, reps, sizes


def orbit_size(tables, tops, int64_t B, int k, int64_t seed, int threads=1):
    """Size of the orbit of ``seed`` alone."""
    _check_blocks(k)
    cdef const int32_t[:, :, ::1] tv = np.ascontiguousarray(tables, dtype=np.int32)
    cdef const int32_t[:, ::1] pv = np.ascontiguousarray(tops, dtype=np.int32)
    cdef int64_t N = B ** k
    cdef int64_t[::1] pw = _powers(B, k)
    cdef int32_t[::1] labels = np.full(N, -1, dtype=np.int32)
    cdef int64_t[::1] queue = np.empty(N, dtype=np.int64)
    cdef int64_t[::1] buf = np.empty(CHUNK * max(tv.shape[0], 1), dtype=np.int64)
    cdef int64_t size
    with nogil:
        size = _bfs(tv, pv, pw, B, k, seed, 0, labels, queue, buf, threads)
    return size
