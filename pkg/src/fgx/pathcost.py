"""Path validity, jump-penalized path cost, and the promise classifier.

A path walks a K x L bit grid from column 1 to column L: same-row steps move
one column right, downward jumps stay in their column, upward jumps trade one
row up per column skipped, and no two jumps may be adjacent. Cell costs are
C0 for a 0 and the discounted C1 for a 1; each jump pays C_jump per row moved
plus the tunable mu, minus both endpoint cell costs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from fgx.bpcore import StairMatrix

_INF = 1 << 60
BRUTE_CELL_CAP = 24


class ConstantsError(ValueError):
    """Cost constants violating the type invariants."""


class PathError(ValueError):
    """Invalid path or out-of-range mu."""


@dataclass(frozen=True)
class CostConstants:
    Q: int
    rho: int
    S_G: int
    T: int
    L: int
    C0: int
    C1: int
    C_jump: int
    T_r: int
    T_r_rounded: bool


def make_constants(Q: int, rho: int, S_G: int, T: int, L: int) -> CostConstants:
    """Build and validate the constants bundle for matrices with L columns.

    The threshold is T_r = (3L/4)*C0 + (L/4)*C1, rounded up when L is not a
    multiple of 4 (the rounding is recorded so reports can show it).
    """
    C0, C1 = Q, Q - rho
    C_jump = 2 * T + S_G
    num = 3 * L * C0 + L * C1
    c = CostConstants(
        Q=Q,
        rho=rho,
        S_G=S_G,
        T=T,
        L=L,
        C0=C0,
        C1=C1,
        C_jump=C_jump,
        T_r=(num + 3) // 4,
        T_r_rounded=bool(num % 4),
    )
    violations = validate_constants(c)
    if violations:
        raise ConstantsError("; ".join(violations))
    return c


def validate_constants(c: CostConstants) -> list[str]:
    v = []
    if c.Q < 1:
        v.append("Q must be >= 1")
    if not (1 <= c.rho <= c.Q):
        v.append("rho must lie in [1, Q] so that 0 <= C1 < C0")
    if c.S_G <= 2 * c.Q:
        v.append("S_G must exceed 2Q")
    if c.T <= c.S_G:
        v.append("T must exceed S_G")
    if c.C_jump != 2 * c.T + c.S_G:
        v.append("C_jump must equal 2T + S_G")
    if c.C_jump - 2 * c.C0 < 0:
        v.append("C_jump below 2*C0 would allow negative path costs")
    if c.L < 1:
        v.append("L must be >= 1")
    return v


def constants_manifest(c: CostConstants) -> dict:
    return {
        "Q": c.Q,
        "rho": c.rho,
        "S_G": c.S_G,
        "T": c.T,
        "L": c.L,
        "C0": c.C0,
        "C1": c.C1,
        "C_jump": c.C_jump,
        "T_r": c.T_r,
        "T_r_rounded": c.T_r_rounded,
    }


def validate_path(path, K: int, L: int) -> list[str]:
    """Check every path condition; an empty list means the path is legal.

    Conditions: starts in column 1, ends in column L, all points inside the
    grid, each transition is a same-row step (column + 1), a downward jump
    (same column) or an upward jump (column advances by the row decrease),
    and no two transitions in a row are jumps.
    """
    pts = [tuple(int(v) for v in p) for p in path]
    violations = []
    if not pts:
        return ["path is empty"]
    for idx, (i, j) in enumerate(pts):
        if not (1 <= i <= K) or not (1 <= j <= L):
            violations.append(f"point {idx + 1} ({i},{j}) outside {K}x{L} grid")
    if pts and pts[0][1] != 1:
        violations.append("path must start in column 1")
    if pts and pts[-1][1] != L:
        violations.append(f"path must end in column {L}")
    prev_jump = False
    for idx in range(len(pts) - 1):
        (i1, j1), (i2, j2) = pts[idx], pts[idx + 1]
        if j2 < j1:
            violations.append(f"transition {idx + 1}: column regress {j1}->{j2}")
            prev_jump = False
            continue
        if i2 == i1:
            jump = False
            if j2 != j1 + 1:
                violations.append(f"transition {idx + 1}: same-row step must advance one column")
        elif i2 > i1:
            jump = True
            if j2 != j1:
                violations.append(f"transition {idx + 1}: downward jump must keep its column")
        else:
            jump = True
            if j2 != j1 + (i1 - i2):
                violations.append(
                    f"transition {idx + 1}: upward jump must advance {i1 - i2} columns"
                )
        if jump and prev_jump:
            violations.append(f"transition {idx + 1}: consecutive jumps")
        prev_jump = jump
    return violations


def _cell_costs(M: StairMatrix, c: CostConstants) -> list[list[int]]:
    return [[c.C1 if b else c.C0 for b in row] for row in M.rows]


def _check_mu(mu: int, c: CostConstants):
    if not (0 <= mu <= c.Q):
        raise PathError(f"mu={mu} outside [0, Q={c.Q}]")


def path_cost(M: StairMatrix, path, mu: int, c: CostConstants) -> int:
    """Sum of visited cell costs plus, per jump, C_jump*|row move| + mu minus
    both endpoint cell costs."""
    _check_mu(mu, c)
    violations = validate_path(path, M.K, M.L)
    if violations:
        raise PathError("; ".join(violations))
    pts = [tuple(p) for p in path]
    cost = sum(c.C1 if M.cell(i, j) else c.C0 for i, j in pts)
    for (i1, j1), (i2, j2) in zip(pts, pts[1:]):
        if i2 != i1:
            src = c.C1 if M.cell(i1, j1) else c.C0
            dst = c.C1 if M.cell(i2, j2) else c.C0
            cost += c.C_jump * abs(i2 - i1) + mu - src - dst
    return cost


def min_path_cost(M: StairMatrix, mu: int, c: CostConstants) -> int:
    """Minimum path cost by column DP with an arrived-by-jump flag.

    Per column two arrays: nj[i] holds the best cost of reaching (i, col) by a
    same-row step (or by starting there), jp[i] the best when the last
    transition was a jump. Jumps depart only from nj states, which enforces
    the no-consecutive-jumps rule; the landing cell cost cancels against the
    jump formula, so a jump arrival adds C_jump*delta + mu - C_source. Both
    states are terminal in column L, which legalizes a final-transition jump.
    """
    _check_mu(mu, c)
    if c.L != M.L:
        raise PathError(f"constants built for L={c.L}, matrix has L={M.L}")
    K, L = M.K, M.L
    cost = _cell_costs(M, c)
    pending: list[list[int]] = [[_INF] * K for _ in range(L)]
    nj = [cost[i][0] for i in range(K)]
    jp = pending[0][:]
    for col in range(L):
        if col > 0:
            prev_nj, prev_jp = nj, jp
            nj = [min(prev_nj[i], prev_jp[i]) + cost[i][col] for i in range(K)]
            jp = pending[col][:]
        # downward jumps within this column
        for i in range(K):
            if nj[i] >= _INF:
                continue
            base = nj[i] + mu - cost[i][col]
            for i2 in range(i + 1, K):
                cand = base + c.C_jump * (i2 - i)
                if cand < jp[i2]:
                    jp[i2] = cand
        # upward jumps departing to later columns
        for i in range(K):
            if nj[i] >= _INF:
                continue
            base = nj[i] + mu - cost[i][col]
            for delta in range(1, min(i, L - 1 - col) + 1):
                cand = base + c.C_jump * delta
                slot = pending[col + delta]
                if cand < slot[i - delta]:
                    slot[i - delta] = cand
    return min(min(nj), min(jp))


@lru_cache(maxsize=64)
def _all_paths(K: int, L: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Every legal path on a K x L grid (shape only; costs applied later)."""
    out = []

    def extend(pts: list[tuple[int, int]], last_jump: bool):
        i, j = pts[-1]
        if j == L:
            out.append(tuple(pts))
        if j < L:
            pts.append((i, j + 1))
            extend(pts, False)
            pts.pop()
        if not last_jump:
            for i2 in range(i + 1, K + 1):
                pts.append((i2, j))
                extend(pts, True)
                pts.pop()
            for delta in range(1, min(i - 1, L - j) + 1):
                pts.append((i - delta, j + delta))
                extend(pts, True)
                pts.pop()

    for i in range(1, K + 1):
        extend([(i, 1)], False)
    return tuple(out)


def min_path_cost_brute(M: StairMatrix, mu: int, c: CostConstants) -> int:
    """Oracle: enumerate every legal path and take the cheapest."""
    if M.K * M.L > BRUTE_CELL_CAP:
        raise PathError(f"brute force capped at {BRUTE_CELL_CAP} cells")
    _check_mu(mu, c)
    return min(path_cost(M, p, mu, c) for p in _all_paths(M.K, M.L))


def p_edit(M: StairMatrix, mu: int, c: CostConstants) -> int:
    """1 iff the cheapest path beats the threshold T_r."""
    return 1 if min_path_cost(M, mu, c) < c.T_r else 0


def pp_edit_promise(M: StairMatrix, c: CostConstants) -> str:
    """Promise classifier: 'one' when even mu=Q stays below threshold, 'zero'
    when even mu=0 fails to, 'gap' otherwise (outside the promise)."""
    if p_edit(M, c.Q, c):
        return "one"
    if not p_edit(M, 0, c):
        return "zero"
    return "gap"
