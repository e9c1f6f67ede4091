"""Numpy fallback for the string-DP kernels.

Same contracts as the compiled module fgx._editcore: distances over byte
strings, int64 arithmetic, banded variant returning -1 when the distance
exceeds the bound. Callers go through fgx.kernels, never import this directly
except for benchmarks and backend-equivalence tests.
"""

from __future__ import annotations

import numpy as np

_INF = np.int64(1) << 40


def wf_distance(a: bytes, b: bytes) -> int:
    """Full Wagner-Fischer distance, two rows, vectorized per row.

    The insertion recurrence cur[j] = min(cand[j], cur[j-1] + 1) is a prefix
    minimum after subtracting the column ramp: with g[j] = cur[j] - j it
    collapses to g = cummin(cand - ramp), which numpy evaluates in one pass.
    """
    n, m = len(a), len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    av = np.frombuffer(a, dtype=np.uint8)
    bv = np.frombuffer(b, dtype=np.uint8)
    ramp = np.arange(m + 1, dtype=np.int64)
    prev = ramp.copy()
    cur = np.empty(m + 1, dtype=np.int64)
    g = np.empty(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        neq = bv != av[i - 1]
        cand = np.minimum(prev[1:] + 1, prev[:-1] + neq)
        g[0] = i
        np.subtract(cand, ramp[1:], out=g[1:])
        np.minimum.accumulate(g, out=g)
        np.add(g, ramp, out=cur)
        prev, cur = cur, prev
    return int(prev[m])


def wf_distance_banded(a: bytes, b: bytes, bound: int) -> int:
    """Ukkonen band: exact distance if <= bound, else -1.

    Rows run along the shorter string. A cell (i, j) can contribute to a
    <=bound solution only if j - i lies in [-p, q] with p = (bound - gap)//2
    and q = (bound + gap)//2 where gap = len difference; everything outside
    stays at +inf. Row minima are nondecreasing, so the scan stops early once
    a whole row exceeds the bound.
    """
    if bound < 0:
        return -1
    n, m = len(a), len(b)
    if m < n:
        a, b, n, m = b, a, m, n
    gap = m - n
    if gap > bound:
        return -1
    if n == 0:
        return m if m <= bound else -1
    p = (bound - gap) // 2
    q = (bound + gap) // 2
    width = p + q + 1
    av = np.frombuffer(a, dtype=np.uint8)
    bv = np.frombuffer(b, dtype=np.uint8)
    ramp = np.arange(width, dtype=np.int64)
    prev = np.full(width + 1, _INF, dtype=np.int64)
    hi0 = min(width - 1, p + m)
    prev[p : hi0 + 1] = np.arange(hi0 - p + 1, dtype=np.int64)
    neq = np.empty(width, dtype=np.int64)
    for i in range(1, n + 1):
        jlo = i - p  # column at band offset 0
        vlo = max(jlo, 0)
        vhi = min(i + q, m)
        if vlo > vhi:
            return -1
        neq.fill(_INF)
        blo = max(vlo, 1)
        if blo <= vhi:
            seg = bv[blo - 1 : vhi]
            neq[blo - jlo : vhi - jlo + 1] = seg != av[i - 1]
        cand = np.minimum(prev[1 : width + 1] + 1, prev[0:width] + neq)
        if jlo <= 0:
            cand[-jlo] = i  # cell (i, 0)
        g = cand - ramp
        np.minimum.accumulate(g, out=g)
        row = g + ramp
        if vlo > jlo:
            row[: vlo - jlo] = _INF
        if jlo + width - 1 > vhi:
            row[vhi - jlo + 1 :] = _INF
        if int(row.min()) > bound:
            return -1
        prev[:width] = row
    res = int(prev[m - (n - p)])
    return res if res <= bound else -1
