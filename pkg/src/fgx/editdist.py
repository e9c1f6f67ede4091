"""Edit distance: production kernels, brute oracles, alignment framework, and
block-level coarse alignments.

The alignment view: an alignment of a and b is a set of index pairs, strictly
increasing in both coordinates; its cost is the number of mismatched aligned
pairs plus one per unaligned symbol. The minimum over all alignments equals
the edit distance, which the exhaustive enumerator certifies on small inputs.

Coarse alignments lift this to whole gadget blocks: each term pairs a run of
x-blocks with one y-block or one x-block with a run of y-blocks, the terms
tile a window of x-blocks and all of y's blocks in order, and the cost is the
sum of blockwise string distances.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from fgx import kernels

_INF = 1 << 60
ALIGN_BRUTE_MAX = 6
RECURSION_ORACLE_MAX = 16
COARSE_BRUTE_MAX_L = 3


class AlignmentError(ValueError):
    pass


def edit_distance(a, b) -> int:
    return kernels.wf_distance(a, b)


def edit_distance_banded(a, b, bound: int) -> int | None:
    """Exact distance when <= bound, else None ('exceeds')."""
    if bound < 0:
        raise AlignmentError("band bound must be nonnegative")
    return kernels.wf_distance_banded(a, b, bound)


def edit_distance_brute(a: str, b: str) -> int:
    """Oracle: plain exponential recursion, no memo. Tiny inputs only."""
    if len(a) + len(b) > RECURSION_ORACLE_MAX:
        raise AlignmentError(f"recursion oracle capped at total length {RECURSION_ORACLE_MAX}")

    def rec(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        sub = rec(i - 1, j - 1) + (a[i - 1] != b[j - 1])
        dele = rec(i - 1, j) + 1
        ins = rec(i, j - 1) + 1
        return min(sub, dele, ins)

    return rec(len(a), len(b))


def align_cost(a: str, b: str, pairs) -> int:
    """Cost of one alignment: mismatches among aligned pairs plus unaligned mass.

    pairs is a sequence of 1-based (i, j) index pairs, strictly increasing in
    both coordinates.
    """
    pts = [(int(i), int(j)) for i, j in pairs]
    n, m = len(a), len(b)
    for (i1, j1), (i2, j2) in zip(pts, pts[1:]):
        if i2 <= i1 or j2 <= j1:
            raise AlignmentError("alignment pairs must strictly increase in both coordinates")
    mism = 0
    for i, j in pts:
        if not (1 <= i <= n and 1 <= j <= m):
            raise AlignmentError(f"pair ({i},{j}) out of range")
        mism += a[i - 1] != b[j - 1]
    return mism + n + m - 2 * len(pts)


def align_min_brute(a: str, b: str) -> int:
    """Oracle: minimum of align_cost over every alignment (lengths <= 6)."""
    n, m = len(a), len(b)
    if max(n, m) > ALIGN_BRUTE_MAX:
        raise AlignmentError(f"alignment enumeration capped at length {ALIGN_BRUTE_MAX}")
    best = n + m  # the empty alignment
    for k in range(1, min(n, m) + 1):
        for ia in combinations(range(1, n + 1), k):
            for jb in combinations(range(1, m + 1), k):
                cost = n + m - 2 * k
                if cost >= best:
                    continue
                for i, j in zip(ia, jb):
                    if a[i - 1] != b[j - 1]:
                        cost += 1
                if cost < best:
                    best = cost
    return best


def coarse_validate(C, n_lo: int, n_hi: int, m: int) -> list[str]:
    """Check a coarse alignment against a window [n_lo, n_hi] of x-blocks and
    y-blocks [1, m]: nonempty terms, each term one-to-run or run-to-one, both
    sides tiled exactly in order."""
    violations = []
    terms = [(tuple(int(v) for v in p), tuple(int(v) for v in q)) for p, q in C]
    if not terms:
        return ["no terms"]
    if n_lo > n_hi:
        violations.append(f"empty window [{n_lo}, {n_hi}]")
    for idx, (p, q) in enumerate(terms):
        if not p or not q:
            violations.append(f"term {idx + 1} has an empty side")
        if len(p) > 1 and len(q) > 1:
            violations.append(f"term {idx + 1} pairs a run with a run")
    flat_p = [v for p, _ in terms for v in p]
    flat_q = [v for _, q in terms for v in q]
    if flat_p != list(range(n_lo, n_hi + 1)):
        violations.append(
            f"x-side must tile [{n_lo}, {n_hi}] in order, got {flat_p}"
        )
    if flat_q != list(range(1, m + 1)):
        violations.append(f"y-side must tile [1, {m}] in order, got {flat_q}")
    return violations


def coarse_edit_cost(inst, C) -> int:
    """Sum of blockwise string distances over the terms of C.

    inst provides x_block(i) and y_block(j) (1-based); C must already pass
    coarse_validate for its window.
    """
    total = 0
    for p, q in C:
        u = "".join(inst.x_block(i) for i in p)
        v = "".join(inst.y_block(j) for j in q)
        total += kernels.wf_distance(u, v)
    return total


def coarse_min_brute(inst) -> int:
    """Oracle: minimum coarse cost over every window and every term split.

    Enumerates, for each window start, all ways to consume the window and all
    m y-blocks by terms of shape (run of x-blocks, one y-block) or (one
    x-block, run of >= 2 y-blocks). Distances are cached per block-run pair.
    Capped at m <= COARSE_BRUTE_MAX_L.
    """
    m = inst.n_y_blocks
    nb = inst.n_x_blocks
    if m > COARSE_BRUTE_MAX_L:
        raise AlignmentError(f"coarse brute force capped at {COARSE_BRUTE_MAX_L} y-blocks")
    xcat = {}
    ycat = {}

    def xrun(i1: int, i2: int) -> str:
        key = (i1, i2)
        if key not in xcat:
            xcat[key] = "".join(inst.x_block(i) for i in range(i1, i2 + 1))
        return xcat[key]

    def yrun(j1: int, j2: int) -> str:
        key = (j1, j2)
        if key not in ycat:
            ycat[key] = "".join(inst.y_block(j) for j in range(j1, j2 + 1))
        return ycat[key]

    dist_cache = {}

    def term_cost(i1, i2, j1, j2) -> int:
        key = (i1, i2, j1, j2)
        if key not in dist_cache:
            dist_cache[key] = kernels.wf_distance(xrun(i1, i2), yrun(j1, j2))
        return dist_cache[key]

    @lru_cache(maxsize=None)
    def rest(p: int, q: int) -> int:
        # cheapest tiling of x-blocks p.. and y-blocks q..m; the window ends
        # at whatever x-block the final term consumes
        if q > m:
            return 0
        cands = []
        for i2 in range(p, nb + 1):  # run of x-blocks vs one y-block
            cands.append(term_cost(p, i2, q, q) + rest(i2 + 1, q + 1))
        if p <= nb:
            for j2 in range(q + 1, m + 1):  # one x-block vs run of >= 2 y-blocks
                cands.append(term_cost(p, p, q, j2) + rest(p + 1, j2 + 1))
        return min(cands) if cands else _INF

    best = min(rest(start, 1) for start in range(1, nb + 1))
    if best >= _INF:
        raise AlignmentError("no coarse alignment exists")
    return best
