"""Conversions between grid paths and coarse block alignments.

Forward: a path point (i, j) touches x-block i+j-1 and y-block j, so same-row
points emit one ((i+j-1), (j)) term, a downward jump merges its two endpoints
into one (p-run, j) term, and an upward jump (which stays on one anti-diagonal)
merges them into one (p, q-run) term. Backward: each term contributes its two
extreme points (min p - min q + 1, min q) and (max p - max q + 1, max q).

A term is usable by the backward direction only if every index difference
a - b (a in p, b in q) lands in [0, K-1]; classify_terms labels the offenders.
"""

from __future__ import annotations

from fgx.pathcost import validate_path

TERM_GOOD = "good"
TERM_LOW = "low"  # some a - b < 0
TERM_HIGH = "high"  # some a - b >= K
TERM_MIXED = "mixed"  # both excursions


class ConvertError(ValueError):
    pass


def path_to_coarse(path, K: int, L: int):
    """Forward conversion; accepts every legal path, including paths whose
    final transition is a jump (both endpoints fold into the jump term)."""
    violations = validate_path(path, K, L)
    if violations:
        raise ConvertError("; ".join(violations))
    pts = [tuple(int(v) for v in p) for p in path]
    terms = []
    idx = 0
    while idx < len(pts):
        i, j = pts[idx]
        if idx == len(pts) - 1:
            terms.append(((i + j - 1,), (j,)))
            idx += 1
            continue
        i2, j2 = pts[idx + 1]
        if i2 == i:
            terms.append(((i + j - 1,), (j,)))
            idx += 1
        elif i2 > i:  # downward jump: p-run at the shared column
            terms.append((tuple(range(i + j - 1, i2 + j2 - 1 + 1)), (j,)))
            idx += 2
        else:  # upward jump: q-run on the shared anti-diagonal
            terms.append(((i + j - 1,), tuple(range(j, j2 + 1))))
            idx += 2
    return tuple(terms)


def coarse_window(C) -> tuple[int, int, int]:
    """(n_lo, n_hi, m) spanned by a coarse alignment."""
    ps = [v for p, _ in C for v in p]
    qs = [v for _, q in C for v in q]
    if not ps or not qs:
        raise ConvertError("empty coarse alignment")
    return min(ps), max(ps), max(qs)


def classify_terms(C, K: int, L: int):
    """Label each term by where its index differences a - b fall relative to
    the legal band [0, K-1]."""
    labels = []
    for p, q in C:
        if not p or not q:
            raise ConvertError("term with an empty side")
        if max(q) > L:
            raise ConvertError(f"y-block index {max(q)} exceeds L={L}")
        diffs = [a - b for a in p for b in q]
        low = any(d < 0 for d in diffs)
        high = any(d >= K for d in diffs)
        if low and high:
            labels.append(TERM_MIXED)
        elif low:
            labels.append(TERM_LOW)
        elif high:
            labels.append(TERM_HIGH)
        else:
            labels.append(TERM_GOOD)
    return tuple(labels)


def coarse_to_path(C, K: int | None = None):
    """Backward conversion; requires every term to classify good.

    K defaults to 2m - 1 with m the largest y-block index. The two extreme
    points of each term coincide for one-to-one terms and are deduplicated.
    """
    terms = [(tuple(int(v) for v in p), tuple(int(v) for v in q)) for p, q in C]
    if not terms:
        raise ConvertError("empty coarse alignment")
    m = max(v for _, q in terms for v in q)
    if K is None:
        K = 2 * m - 1
    labels = classify_terms(terms, K, m)
    bad = [(idx + 1, lab) for idx, lab in enumerate(labels) if lab != TERM_GOOD]
    if bad:
        raise ConvertError(
            "cannot convert: terms outside the band: "
            + ", ".join(f"term {i} is {lab}" for i, lab in bad)
        )
    pts: list[tuple[int, int]] = []
    for p, q in terms:
        first = (min(p) - min(q) + 1, min(q))
        last = (max(p) - max(q) + 1, max(q))
        for pt in (first, last):
            if not pts or pts[-1] != pt:
                pts.append(pt)
    return tuple(pts)
