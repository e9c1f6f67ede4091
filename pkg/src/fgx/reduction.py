"""Build the string-comparison instance for a branching program.

Gadget family: G(a) interleaves the satisfaction bits of one first-half
assignment a (against every second-half assignment b, in order) with marker
runs of '2'; the co-gadget for b puts '1' at position b and the never-matching
'3' elsewhere; the dummy r is the all-zero-row gadget. All gadgets share the
length S_G = (w+1)L + w, and a straight blockwise alignment gives
delta(G(a), co(b)) = Q - rho*S(a,b) with Q = L and rho = 1. That contract is
never assumed: verify_gadget_contract recomputes every pairwise distance with
the full DP, and instance builders run it.

The sequences: x chains L-1 dummy blocks, the L real blocks, and L-1 dummy
blocks again, each block 5^T gadget 6^T; y wraps its L co-gadget blocks in
7-padding of length |x| on both sides. The decision threshold is
C* = 2|x| + T_r.
"""

from __future__ import annotations

from dataclasses import dataclass

from fgx import kernels
from fgx.bpcore import NBP, assignments, evaluate, matrix_encode, truth_table
from fgx.pathcost import CostConstants, constants_manifest, make_constants, pp_edit_promise

DEFAULT_SEP_MULT = 8


class GadgetError(ValueError):
    """Bad gadget parameters or inputs."""


class GadgetContractError(RuntimeError):
    """A recomputed gadget distance disagreed with the contract."""


class PromiseGapError(RuntimeError):
    """The encoded matrix is outside the promise; the decision is undefined."""


@dataclass(frozen=True)
class GadgetParams:
    """marker_width defaults to 4L at build time; sep_mult sets T = sep_mult * S_G."""

    marker_width: int | None = None
    sep_mult: int = DEFAULT_SEP_MULT


@dataclass(frozen=True)
class ReductionInstance:
    bp: NBP
    constants: CostConstants
    w: int
    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    x: str
    y: str
    C_star: int

    @property
    def n_x_blocks(self) -> int:
        return 3 * self.constants.L - 2

    @property
    def n_y_blocks(self) -> int:
        return self.constants.L

    def x_block(self, i: int) -> str:
        return block_of_x(self, i)

    def y_block(self, j: int) -> str:
        L, T = self.constants.L, self.constants.T
        if not (1 <= j <= L):
            raise GadgetError(f"y block index {j} outside [1, {L}]")
        return "5" * T + build_cogadget(j, L, self.w) + "6" * T

    def manifest(self) -> dict:
        man = constants_manifest(self.constants)
        man.update({"w": self.w, "C_star": self.C_star, "x_len": len(self.x), "y_len": len(self.y)})
        return man


def effective_width(L: int, params: GadgetParams) -> int:
    w = params.marker_width if params.marker_width is not None else 4 * L
    if w < 1:
        raise GadgetError("marker width must be >= 1")
    return w


def derive_constants(L: int, params: GadgetParams) -> CostConstants:
    if params.sep_mult < 2:
        raise GadgetError("sep_mult must be >= 2 so that T > S_G")
    w = effective_width(L, params)
    S_G = (w + 1) * L + w
    return make_constants(Q=L, rho=1, S_G=S_G, T=params.sep_mult * S_G, L=L)


def build_gadget(sat_row, w: int) -> str:
    """G for one first-half assignment, from its satisfaction bits."""
    bits = [int(v) for v in sat_row]
    if set(bits) - {0, 1}:
        raise GadgetError("sat_row must be bits")
    marker = "2" * w
    return marker + "".join(("1" if b else "0") + marker for b in bits)


def build_cogadget(b_index: int, L: int, w: int) -> str:
    """Co-gadget for the b_index-th (1-based) second-half assignment."""
    if not (1 <= b_index <= L):
        raise GadgetError(f"b index {b_index} outside [1, {L}]")
    marker = "2" * w
    return marker + "".join(("1" if q == b_index else "3") + marker for q in range(1, L + 1))


def dummy_gadget(L: int, w: int) -> str:
    return build_gadget((0,) * L, w)


def equalize_pad(a: str, b: str) -> tuple[str, str]:
    """Equal-length padding that shifts the distance by exactly |a| - |b|.

    Requires |a| >= |b|; returns ('2'*|a| + a, '0'*(|a|-|b|) + '2'*|a| + b).
    """
    if len(b) > len(a):
        raise GadgetError("equalize_pad needs |a| >= |b|")
    la, lb = len(a), len(b)
    return "2" * la + a, "0" * (la - lb) + "2" * la + b


def half_assignments(n: int) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    if n % 2:
        raise GadgetError("reduction needs even n")
    half = tuple(assignments(n // 2))
    return half, half


def sat_row(bp: NBP, a, B) -> tuple[int, ...]:
    return tuple(evaluate(bp, tuple(a) + tuple(b)) for b in B)


def verify_gadget_contract(bp: NBP, params: GadgetParams = GadgetParams()) -> dict:
    """Recompute every gadget distance with the full DP and compare with the
    contract values; raises GadgetContractError on the first mismatch."""
    if bp.n % 2:
        raise GadgetError("reduction needs even n")
    c = derive_constants(2 ** (bp.n // 2), params)
    L = c.L
    w = effective_width(L, params)
    A, B = half_assignments(bp.n)
    cogadgets = [build_cogadget(j, L, w) for j in range(1, L + 1)]
    dummy = dummy_gadget(L, w)
    checked = 0
    for a in A:
        row = sat_row(bp, a, B)
        g = build_gadget(row, w)
        if len(g) != c.S_G:
            raise GadgetContractError(f"gadget length {len(g)} != S_G {c.S_G}")
        for j, cog in enumerate(cogadgets):
            want = c.Q - c.rho * row[j]
            got = kernels.wf_distance(g, cog)
            if got != want:
                raise GadgetContractError(
                    f"delta(G({a}), co(b_{j + 1})) = {got}, contract says {want}"
                )
            checked += 1
    for j, cog in enumerate(cogadgets):
        got = kernels.wf_distance(dummy, cog)
        if got != c.Q:
            raise GadgetContractError(f"delta(r, co(b_{j + 1})) = {got}, contract says {c.Q}")
        checked += 1
    return {
        "ok": True,
        "pairs_checked": checked,
        "Q": c.Q,
        "rho": c.rho,
        "S_G": c.S_G,
        "w": w,
    }


def build_instance(bp: NBP, params: GadgetParams = GadgetParams()) -> ReductionInstance:
    if bp.n % 2:
        raise GadgetError("reduction needs even n")
    L = 2 ** (bp.n // 2)
    c = derive_constants(L, params)
    w = effective_width(L, params)
    verify_gadget_contract(bp, params)
    A, B = half_assignments(bp.n)
    sep5, sep6 = "5" * c.T, "6" * c.T
    dummy_block = sep5 + dummy_gadget(L, w) + sep6
    real_blocks = [sep5 + build_gadget(sat_row(bp, a, B), w) + sep6 for a in A]
    x = dummy_block * (L - 1) + "".join(real_blocks) + dummy_block * (L - 1)
    if len(x) != (3 * L - 2) * (2 * c.T + c.S_G):
        raise GadgetError("internal: |x| does not match (3L-2)(2T+S_G)")
    y_core = "".join(sep5 + build_cogadget(j, L, w) + sep6 for j in range(1, L + 1))
    pad = "7" * len(x)
    y = pad + y_core + pad
    return ReductionInstance(
        bp=bp,
        constants=c,
        w=w,
        A=A,
        B=B,
        x=x,
        y=y,
        C_star=2 * len(x) + c.T_r,
    )


def block_of_x(inst: ReductionInstance, i: int) -> str:
    """The i-th block of x (1-based), built directly in O(T + S_G) work:
    dummies for i < L and i > 2L-1, else the gadget of a_{i-L+1}."""
    L, T = inst.constants.L, inst.constants.T
    if not (1 <= i <= 3 * L - 2):
        raise GadgetError(f"x block index {i} outside [1, {3 * L - 2}]")
    if L <= i <= 2 * L - 1:
        g = build_gadget(sat_row(inst.bp, inst.A[i - L], inst.B), inst.w)
    else:
        g = dummy_gadget(L, inst.w)
    return "5" * T + g + "6" * T


def decide_via_editdist(inst: ReductionInstance, use_band: bool = True) -> dict:
    """Compare delta(x, y) with C*; refuses matrices outside the promise.

    Returns a report with the verdict, the promise label, the distance (None
    when the banded scan only certified distance >= C*), and the manifest.
    """
    M = matrix_encode(truth_table(inst.bp))
    promise = pp_edit_promise(M, inst.constants)
    if promise == "gap":
        raise PromiseGapError(
            "encoded matrix is outside the promise (cheap at mu=0, expensive at mu=Q); "
            "the threshold comparison is meaningless there"
        )
    if use_band:
        dist = edit_distance_banded_xy(inst)
        verdict = 1 if dist is not None else 0
    else:
        dist = kernels.wf_distance(inst.x, inst.y)
        verdict = 1 if dist < inst.C_star else 0
    report = {
        "verdict": verdict,
        "promise": promise,
        "distance": dist,
        "manifest": inst.manifest(),
    }
    return report


def edit_distance_banded_xy(inst: ReductionInstance) -> int | None:
    """delta(x, y) when < C*, else None (the decision needs no more)."""
    return kernels.wf_distance_banded(inst.x, inst.y, inst.C_star - 1)
