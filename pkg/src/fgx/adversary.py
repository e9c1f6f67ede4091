"""Adversarial instance families from recursive balanced symbols, plus the
depth-bounded parenthesis checker.

Symbols over k-bit blocks: at level 0 a plus/minus/zero symbol has bit
imbalance +2/-2/0; a level-i symbol is k level-(i-1) symbols whose plus count
exceeds the minus count by +1/-1/0 by kind. The bit imbalance is therefore
+2/-2/0 at every level. An X matrix has k^(t+2) rows, each a zero symbol of
level t+1; a Y matrix has exactly one plus row instead. The relation pairs
matrices at Hamming distance one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

KINDS = ("plus", "minus", "zero")
_IMBALANCE = {"plus": 2, "minus": -2, "zero": 0}
_DELTA = {"plus": 1, "minus": -1, "zero": 0}
_STATS_ROW_CAP = 256


class AdvError(ValueError):
    pass


def symbol_length(level: int, k: int) -> int:
    return k ** (level + 1)


def _check_kt(k: int, level: int):
    if k < 2 or k % 2:
        raise AdvError("k must be even and >= 2")
    if level < 0:
        raise AdvError("level must be >= 0")


@lru_cache(maxsize=None)
def symbol_count(level: int, kind: str, k: int) -> int:
    """How many distinct symbols of this level and kind exist (exact)."""
    _check_kt(k, level)
    if kind not in KINDS:
        raise AdvError(f"unknown kind {kind!r}")
    if level == 0:
        return comb(k, k // 2 + _IMBALANCE[kind] // 2)
    total = 0
    for cp, cm, cz in _compositions(k, _DELTA[kind]):
        ways = factorial(k) // (factorial(cp) * factorial(cm) * factorial(cz))
        total += (
            ways
            * symbol_count(level - 1, "plus", k) ** cp
            * symbol_count(level - 1, "minus", k) ** cm
            * symbol_count(level - 1, "zero", k) ** cz
        )
    return total


def _compositions(k: int, delta: int):
    for cp in range(max(delta, 0), k + 1):
        cm = cp - delta
        cz = k - cp - cm
        if cm < 0 or cz < 0:
            continue
        yield cp, cm, cz


def gen_symbol(level: int, kind: str, k: int, seed: int = 0) -> str:
    """One uniformly random valid symbol, deterministic for a fixed seed."""
    rng = random.Random(seed)
    return _gen(level, kind, k, rng)


def _gen(level: int, kind: str, k: int, rng: random.Random) -> str:
    _check_kt(k, level)
    if kind not in KINDS:
        raise AdvError(f"unknown kind {kind!r}")
    if level == 0:
        ones = k // 2 + _IMBALANCE[kind] // 2
        if not (0 <= ones <= k):
            raise AdvError(f"kind {kind} impossible at k={k}")
        pos = set(rng.sample(range(k), ones))
        return "".join("1" if i in pos else "0" for i in range(k))
    # draw the kind composition with probability proportional to the number
    # of symbols it contributes, exactly (big-int cumulative weights)
    comps = list(_compositions(k, _DELTA[kind]))
    weights = []
    for cp, cm, cz in comps:
        ways = factorial(k) // (factorial(cp) * factorial(cm) * factorial(cz))
        weights.append(
            ways
            * symbol_count(level - 1, "plus", k) ** cp
            * symbol_count(level - 1, "minus", k) ** cm
            * symbol_count(level - 1, "zero", k) ** cz
        )
    total = sum(weights)
    pick = rng.randrange(total)
    acc = 0
    for (cp, cm, cz), wgt in zip(comps, weights):
        acc += wgt
        if pick < acc:
            break
    kinds = ["plus"] * cp + ["minus"] * cm + ["zero"] * cz
    rng.shuffle(kinds)
    return "".join(_gen(level - 1, kd, k, rng) for kd in kinds)


def classify_block(bits: str, level: int, k: int) -> str:
    """Parse a bit string as a symbol; returns its kind or 'invalid'."""
    _check_kt(k, level)
    if set(bits) - {"0", "1"}:
        raise AdvError("symbol must be a bit string")
    if len(bits) != symbol_length(level, k):
        raise AdvError(f"length {len(bits)} is not k^(level+1) = {symbol_length(level, k)}")
    if level == 0:
        imb = 2 * bits.count("1") - k
        for kind, want in _IMBALANCE.items():
            if imb == want:
                return kind
        return "invalid"
    sub = symbol_length(level - 1, k)
    delta = 0
    for b in range(k):
        kind = classify_block(bits[b * sub : (b + 1) * sub], level - 1, k)
        if kind == "invalid":
            return "invalid"
        delta += _DELTA[kind]
    for kind, want in _DELTA.items():
        if delta == want:
            return kind
    return "invalid"


@dataclass(frozen=True)
class AdvMatrix:
    k: int
    t: int
    family: str  # "X" or "Y"
    rows: tuple[str, ...]

    @property
    def side(self) -> int:
        return self.k ** (self.t + 2)


def gen_X_matrix(k: int, t: int, seed: int = 0) -> AdvMatrix:
    _check_kt(k, t)
    rng = random.Random(seed)
    n2 = k ** (t + 2)
    rows = tuple(_gen(t + 1, "zero", k, rng) for _ in range(n2))
    return AdvMatrix(k=k, t=t, family="X", rows=rows)


def gen_Y_matrix(k: int, t: int, seed: int = 0) -> AdvMatrix:
    _check_kt(k, t)
    rng = random.Random(seed)
    n2 = k ** (t + 2)
    special = rng.randrange(n2)
    rows = tuple(
        _gen(t + 1, "plus" if r == special else "zero", k, rng) for r in range(n2)
    )
    return AdvMatrix(k=k, t=t, family="Y", rows=rows)


def is_member_X(mat: AdvMatrix) -> bool:
    n2 = mat.k ** (mat.t + 2)
    if len(mat.rows) != n2 or any(len(r) != n2 for r in mat.rows):
        return False
    return all(classify_block(r, mat.t + 1, mat.k) == "zero" for r in mat.rows)


def is_member_Y(mat: AdvMatrix) -> bool:
    n2 = mat.k ** (mat.t + 2)
    if len(mat.rows) != n2 or any(len(r) != n2 for r in mat.rows):
        return False
    kinds = [classify_block(r, mat.t + 1, mat.k) for r in mat.rows]
    return kinds.count("plus") == 1 and kinds.count("zero") == n2 - 1


def _plus_flips(row: str, level: int, k: int) -> int:
    """Positions whose 0->1 flip turns this row into a plus symbol."""
    count = 0
    for i, ch in enumerate(row):
        if ch == "0":
            flipped = row[:i] + "1" + row[i + 1 :]
            if classify_block(flipped, level, k) == "plus":
                count += 1
    return count


def _zero_flips(row: str, level: int, k: int) -> int:
    """Positions whose 1->0 flip turns this row into a zero symbol."""
    count = 0
    for i, ch in enumerate(row):
        if ch == "1":
            flipped = row[:i] + "0" + row[i + 1 :]
            if classify_block(flipped, level, k) == "zero":
                count += 1
    return count


def relation_stats(k: int, t: int, sample_budget: int = 50, seed: int = 0) -> dict:
    """Neighbor counts for the distance-one relation between the families.

    Exhaustive at k=2, t=0 (all 6^4 X members and all Y members); otherwise
    samples generated matrices up to sample_budget per side. Checks the two
    lower bounds (per-x neighbors >= (k/2)^(t+2) * N/2, per-y >= (k/2)^(t+2))
    and reports that a flip position determines the neighbor uniquely.
    """
    _check_kt(k, t)
    n2 = k ** (t + 2)
    if n2 > _STATS_ROW_CAP:
        raise AdvError(f"budget exceeded: rows of length {n2} beyond cap {_STATS_ROW_CAP}")
    bound_x = (k // 2) ** (t + 2) * n2
    bound_y = (k // 2) ** (t + 2)
    exhaustive = k == 2 and t == 0
    if exhaustive:
        from itertools import product as iproduct

        zero_rows = [
            "".join(bits)
            for bits in iproduct("01", repeat=n2)
            if classify_block("".join(bits), t + 1, k) == "zero"
        ]
        plus_rows = [
            "".join(bits)
            for bits in iproduct("01", repeat=n2)
            if classify_block("".join(bits), t + 1, k) == "plus"
        ]
        row_flip = {r: _plus_flips(r, t + 1, k) for r in zero_rows}
        x_counts = [
            sum(row_flip[zero_rows[i]] for i in combo)
            for combo in iproduct(range(len(zero_rows)), repeat=n2)
        ]
        # the per-y neighbor count depends only on the special row's content,
        # so ranging over all plus rows covers every Y member
        y_counts = [_zero_flips(r, t + 1, k) for r in plus_rows]
        x_examined = len(x_counts)
        y_examined = len(plus_rows)
    else:
        x_counts = []
        for s in range(sample_budget):
            mat = gen_X_matrix(k, t, seed=seed + s)
            x_counts.append(sum(_plus_flips(r, t + 1, k) for r in mat.rows))
        y_counts = []
        for s in range(sample_budget):
            mat = gen_Y_matrix(k, t, seed=seed + 10_000 + s)
            special = [
                r for r in mat.rows if classify_block(r, t + 1, k) == "plus"
            ]
            y_counts.append(_zero_flips(special[0], t + 1, k))
        x_examined = y_examined = sample_budget
    min_x, min_y = min(x_counts), min(y_counts)
    return {
        "k": k,
        "t": t,
        "row_length": n2,
        "exhaustive": exhaustive,
        "x_examined": x_examined,
        "y_examined": y_examined,
        "min_neighbors_per_x": min_x,
        "bound_per_x": bound_x,
        "min_neighbors_per_y": min_y,
        "bound_per_y": bound_y,
        "per_x_ok": min_x >= bound_x,
        "per_y_ok": min_y >= bound_y,
        "flip_determines_neighbor": True,  # flipping bit i of x fixes y outright
        "ok": min_x >= bound_x and min_y >= bound_y,
    }


def validate_params(k: int, t: int, c) -> list[str]:
    """Parameter constraints tying the family to a cost-constants bundle."""
    violations = []
    if k < 2 or k % 2:
        violations.append("k must be even and >= 2")
    if t < 0:
        violations.append("t must be >= 0")
    if not violations and c.C1 * k * (t + 2) >= c.C_jump:
        violations.append(
            f"C1*k*(t+2) = {c.C1 * k * (t + 2)} must stay below C_jump = {c.C_jump}"
        )
    return violations


def dyck_wrap(row: str, d: int) -> str:
    """Interpret 0 as '(' and 1 as ')' and wrap in d extra opens and closes."""
    if set(row) - {"0", "1"}:
        raise AdvError("row must be a bit string")
    if d < 0:
        raise AdvError("pad depth must be >= 0")
    return "(" * d + "".join("(" if ch == "0" else ")" for ch in row) + ")" * d


def dyck_check(s: str, depth_bound: int) -> bool:
    """One linear scan: never negative, never above depth_bound, ends at 0."""
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
            if depth > depth_bound:
                return False
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
        else:
            raise AdvError(f"not a parenthesis: {ch!r}")
    return depth == 0


def prefix_imbalance_profile(row: str) -> int:
    """Largest |#0 - #1| over all prefixes of the raw bit row."""
    if set(row) - {"0", "1"}:
        raise AdvError("row must be a bit string")
    worst = 0
    bal = 0
    for ch in row:
        bal += 1 if ch == "0" else -1
        worst = max(worst, abs(bal))
    return worst


def default_profile_bound(k: int, t: int) -> int:
    """Reported heuristic bound for generated rows; configurable, not a law."""
    return 2 * k * (t + 2)
