# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled wedge enumeration and violation-counter updates."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


cdef inline bint _adjacent(const i64[::1] indptr, const i64[::1] indices, i64 a, i64 b) nogil:
    # binary search for b in the sorted neighbor list of a
    cdef i64 lo = indptr[a], hi = indptr[a + 1], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if indices[mid] < b:
            lo = mid + 1
        else:
            hi = mid
    return lo < indptr[a + 1] and indices[lo] == b


def enumerate_wedges(const i64[::1] indptr, const i64[::1] indices, const i64[::1] adj_eid):
    cdef i64 n = indptr.shape[0] - 1
    cdef i64 v, i, j, lo, hi, a, b, d, cap = 0, t = 0
    for v in range(n):
        d = indptr[v + 1] - indptr[v]
        cap += d * (d - 1) // 2
    center_a = np.empty(cap, dtype=np.int64)
    tlo_a = np.empty(cap, dtype=np.int64)
    thi_a = np.empty(cap, dtype=np.int64)
    elo_a = np.empty(cap, dtype=np.int64)
    ehi_a = np.empty(cap, dtype=np.int64)
    cdef i64[::1] center = center_a, tlo = tlo_a, thi = thi_a, elo = elo_a, ehi = ehi_a
    with nogil:
        for v in range(n):
            lo = indptr[v]
            hi = indptr[v + 1]
            for i in range(lo, hi):
                a = indices[i]
                for j in range(i + 1, hi):
                    b = indices[j]
                    # search from the lower-degree tip
                    if indptr[a + 1] - indptr[a] <= indptr[b + 1] - indptr[b]:
                        if _adjacent(indptr, indices, a, b):
                            continue
                    elif _adjacent(indptr, indices, b, a):
                        continue
                    center[t] = v
                    tlo[t] = a
                    thi[t] = b
                    elo[t] = adj_eid[i]
                    ehi[t] = adj_eid[j]
                    t += 1
    return center_a[:t].copy(), tlo_a[:t].copy(), thi_a[:t].copy(), elo_a[:t].copy(), ehi_a[:t].copy()


def demote(i64 e, cnp.uint8_t[::1] strong, i64[::1] counts, const i64[::1] ptr,
           const i64[::1] wids, const i64[::1] elo, const i64[::1] ehi):
    cdef i64 k, w, sister, gain = 0
    with nogil:
        strong[e] = 0
        for k in range(ptr[e], ptr[e + 1]):
            w = wids[k]
            sister = ehi[w] if elo[w] == e else elo[w]
            if strong[sister]:
                counts[sister] -= 1
                gain += 1
        counts[e] = 0
    return gain


def count_violations(const cnp.uint8_t[::1] strong, const i64[::1] elo, const i64[::1] ehi):
    cdef i64 w, total = 0
    with nogil:
        for w in range(elo.shape[0]):
            if strong[elo[w]] and strong[ehi[w]]:
                total += 1
    return total
