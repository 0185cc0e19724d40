# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row/column permutation search on integer label matrices."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef void _isort(long *v, int n) noexcept nogil:
    cdef int i, j
    cdef long t
    for i in range(1, n):
        t = v[i]
        j = i - 1
        while j >= 0 and v[j] > t:
            v[j + 1] = v[j]
            j -= 1
        v[j + 1] = t


cdef bint _refine(long *ka, long *kb, long *out_a, long *out_b,
                  long *sa, long *sb, int n) noexcept nogil:
    cdef int i, lo, hi, mid, m
    for i in range(n):
        sa[i] = ka[i]
        sb[i] = kb[i]
    _isort(sa, n)
    _isort(sb, n)
    for i in range(n):
        if sa[i] != sb[i]:
            return False
    # unique in place
    m = 1
    for i in range(1, n):
        if sa[i] != sa[m - 1]:
            sa[m] = sa[i]
            m += 1
    for i in range(n):
        lo = 0
        hi = m - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if sa[mid] < ka[i]:
                lo = mid + 1
            else:
                hi = mid
        out_a[i] = lo
        lo = 0
        hi = m - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if sa[mid] < kb[i]:
                lo = mid + 1
            else:
                hi = mid
        out_b[i] = lo
    return True


cdef bint _rec(int i, int n, long nl, long[:, ::1] la, long[:, ::1] lb,
               long[::1] row_a, long[::1] row_b, long *cls, long *scratch,
               int *used, long *rmap) noexcept nogil:
    # cls holds (n + 1) levels of 2n class ids: level i at cls[2*n*i]
    cdef long *ca = cls + 2 * n * i
    cdef long *cb = ca + n
    cdef long *na = ca + 2 * n
    cdef long *nb = na + n
    cdef long *ka = scratch
    cdef long *kb = scratch + n
    cdef long *sa = scratch + 2 * n
    cdef long *sb = scratch + 3 * n
    cdef int b, j
    if i == n:
        return True
    for b in range(n):
        if used[b] or row_b[b] != row_a[i]:
            continue
        for j in range(n):
            ka[j] = ca[j] * nl + la[i, j]
            kb[j] = cb[j] * nl + lb[b, j]
        if not _refine(ka, kb, na, nb, sa, sb, n):
            continue
        used[b] = 1
        rmap[i] = b
        if _rec(i + 1, n, nl, la, lb, row_a, row_b, cls, scratch, used, rmap):
            return True
        used[b] = 0
    return False


def search(la, lb, row_a, row_b, col_a, col_b, long nlabels):
    cdef long[:, ::1] A = np.ascontiguousarray(la, dtype=np.int_)
    cdef long[:, ::1] B = np.ascontiguousarray(lb, dtype=np.int_)
    cdef long[::1] RA = np.ascontiguousarray(row_a, dtype=np.int_)
    cdef long[::1] RB = np.ascontiguousarray(row_b, dtype=np.int_)
    cdef long[::1] CA = np.ascontiguousarray(col_a, dtype=np.int_)
    cdef long[::1] CB = np.ascontiguousarray(col_b, dtype=np.int_)
    cdef int n = A.shape[0]
    cdef int j, k
    cdef bint ok
    cdef long *cls = <long *> malloc(sizeof(long) * 2 * n * (n + 1))
    cdef long *scratch = <long *> malloc(sizeof(long) * 4 * n)
    cdef long *rmap = <long *> malloc(sizeof(long) * n)
    cdef int *used = <int *> malloc(sizeof(int) * n)
    if not cls or not scratch or not rmap or not used:
        free(cls); free(scratch); free(rmap); free(used)
        raise MemoryError()
    try:
        for j in range(n):
            scratch[j] = CA[j]
            scratch[n + j] = CB[j]
            used[j] = 0
        ok = _refine(scratch, scratch + n, cls, cls + n,
                     scratch + 2 * n, scratch + 3 * n, n)
        if ok:
            with nogil:
                ok = _rec(0, n, nlabels, A, B, RA, RB, cls, scratch, used, rmap)
        if not ok:
            return None
        last = cls + 2 * n * n
        r = np.empty(n, dtype=np.intp)
        c = np.full(n, -1, dtype=np.intp)
        taken = [False] * n
        for j in range(n):
            r[j] = rmap[j]
            for k in range(n):
                if not taken[k] and last[n + k] == last[j]:
                    taken[k] = True
                    c[j] = k
                    break
        return r, c
    finally:
        free(cls); free(scratch); free(rmap); free(used)
