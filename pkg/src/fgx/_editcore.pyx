# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Wagner-Fischer kernels: full and banded edit distance.

Contracts mirror fgx._editpure exactly; fgx.kernels picks whichever module
imports. Inputs are byte strings, arithmetic is 64-bit, the banded variant
returns -1 once the distance provably exceeds the bound.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

cdef long long _INF = (<long long> 1) << 40


def wf_distance(const unsigned char[::1] a, const unsigned char[::1] b):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    if n == 0:
        return m
    if m == 0:
        return n
    cdef long long *prev = <long long *> PyMem_Malloc((m + 1) * sizeof(long long))
    cdef long long *cur = <long long *> PyMem_Malloc((m + 1) * sizeof(long long))
    cdef long long *tmp
    if prev == NULL or cur == NULL:
        PyMem_Free(prev)
        PyMem_Free(cur)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef long long best, cand
    cdef unsigned char ai
    for j in range(m + 1):
        prev[j] = j
    for i in range(1, n + 1):
        ai = a[i - 1]
        cur[0] = i
        for j in range(1, m + 1):
            best = prev[j] + 1
            cand = cur[j - 1] + 1
            if cand < best:
                best = cand
            cand = prev[j - 1] + (0 if b[j - 1] == ai else 1)
            if cand < best:
                best = cand
            cur[j] = best
        tmp = prev
        prev = cur
        cur = tmp
    cdef long long res = prev[m]
    PyMem_Free(prev)
    PyMem_Free(cur)
    return res


def wf_distance_banded(const unsigned char[::1] a, const unsigned char[::1] b, long long bound):
    if bound < 0:
        return -1
    cdef const unsigned char[::1] av = a
    cdef const unsigned char[::1] bv = b
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t m = bv.shape[0]
    if m < n:
        av, bv = bv, av
        n, m = m, n
    cdef long long gap = m - n
    if gap > bound:
        return -1
    if n == 0:
        return m if m <= bound else -1
    cdef long long p = (bound - gap) // 2
    cdef long long q = (bound + gap) // 2
    cdef Py_ssize_t width = <Py_ssize_t> (p + q + 1)
    cdef long long *prev = <long long *> PyMem_Malloc((width + 1) * sizeof(long long))
    cdef long long *cur = <long long *> PyMem_Malloc((width + 1) * sizeof(long long))
    cdef long long *tmp
    if prev == NULL or cur == NULL:
        PyMem_Free(prev)
        PyMem_Free(cur)
        raise MemoryError()
    cdef Py_ssize_t i, d, dlo, dhi, hi0
    cdef long long j, jlo, vlo, vhi, best, cand, rowmin, res
    cdef unsigned char ai
    for d in range(width + 1):
        prev[d] = _INF
        cur[d] = _INF
    hi0 = <Py_ssize_t> min(<long long> (width - 1), p + m)
    for d in range(<Py_ssize_t> p, hi0 + 1):
        prev[d] = d - p
    for i in range(1, n + 1):
        ai = av[i - 1]
        jlo = i - p
        vlo = jlo if jlo > 0 else 0
        vhi = i + q
        if m < vhi:
            vhi = m
        if vlo > vhi:
            PyMem_Free(prev)
            PyMem_Free(cur)
            return -1
        dlo = <Py_ssize_t> (vlo - jlo)
        dhi = <Py_ssize_t> (vhi - jlo)
        if dlo > 0:
            cur[dlo - 1] = _INF
        if dhi + 1 <= width:
            cur[dhi + 1] = _INF
        rowmin = _INF
        for d in range(dlo, dhi + 1):
            j = jlo + d
            if j == 0:
                best = i
            else:
                best = prev[d + 1] + 1
                if d > dlo:
                    cand = cur[d - 1] + 1
                    if cand < best:
                        best = cand
                cand = prev[d] + (0 if bv[j - 1] == ai else 1)
                if cand < best:
                    best = cand
            cur[d] = best
            if best < rowmin:
                rowmin = best
        if rowmin > bound:
            PyMem_Free(prev)
            PyMem_Free(cur)
            return -1
        tmp = prev
        prev = cur
        cur = tmp
    res = prev[<Py_ssize_t> (m - (n - p))]
    PyMem_Free(prev)
    PyMem_Free(cur)
    return res if res <= bound else -1
