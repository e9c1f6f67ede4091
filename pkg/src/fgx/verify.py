"""Operational checks: every check cross-validates one component against an
independent oracle or a proven identity, and returns a small report dict.

`run_all` powers the `fgx verify all` subcommand; the acceptance tests call
the same functions directly, so the command line and the test suite can never
drift apart.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, product

import numpy as np

from fgx import adversary, bpcore, convert, editdist, kernels, ov, pathcost, reduction

DEFAULT_SEED = 2026


def corpus_bps(n: int, count: int, seed: int = DEFAULT_SEED) -> list[bpcore.NBP]:
    """A deterministic program corpus: canonical table programs first (all 16
    functions when n = 2, the two constants otherwise), then random shapes."""
    rng = random.Random(seed)
    bps = []
    if n == 2:
        for bits in product("01", repeat=4):
            tt = bpcore.TruthTable(n=2, bits="".join(bits))
            bps.append(bpcore.bp_from_truth_table(tt))
    else:
        for bits in ("0" * 2**n, "1" * 2**n):
            bps.append(bpcore.bp_from_truth_table(bpcore.TruthTable(n=n, bits=bits)))
    while len(bps) < count:
        bps.append(
            bpcore.random_bp(
                n,
                Z=rng.randint(2, n + 3),
                W=rng.randint(1, 4),
                edge_density=rng.uniform(0.3, 0.9),
                seed=rng.randrange(1 << 30),
            )
        )
    return bps[:count]


# ---------------------------------------------------------------- alignment


def _rgs_patterns(length: int, max_labels: int) -> np.ndarray:
    """All equality patterns of the given length: restricted-growth label
    strings over at most max_labels labels, one row per pattern."""
    pats = np.zeros((1, 0), dtype=np.int8)
    tops = np.full(1, -1, dtype=np.int8)
    for _ in range(length):
        counts = np.minimum(tops.astype(np.int64) + 2, max_labels)
        total = int(counts.sum())
        rep = np.repeat(np.arange(pats.shape[0]), counts)
        starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
        labels = (np.arange(total) - np.repeat(starts, counts)).astype(np.int8)
        pats = np.concatenate([pats[rep], labels[:, None]], axis=1)
        tops = np.maximum(tops[rep], labels)
    return pats


def _batch_align_min(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Alignment-minimization cost for a batch of label-string pairs, by
    enumerating every alignment once and gathering mismatch sums."""
    n_rows, la = X.shape
    lb = Y.shape[1]
    base = la + lb  # the empty alignment
    if la == 0 or lb == 0:
        return np.full(n_rows, base, dtype=np.int16)
    neq = (X[:, :, None] != Y[:, None, :]).astype(np.int8).reshape(n_rows, la * lb)
    flat_idx: list[int] = []
    seg_starts: list[int] = []
    consts: list[int] = []
    for k in range(1, min(la, lb) + 1):
        for ia in combinations(range(la), k):
            for jb in combinations(range(lb), k):
                seg_starts.append(len(flat_idx))
                flat_idx.extend(i * lb + j for i, j in zip(ia, jb))
                consts.append(base - 2 * k)
    idx = np.asarray(flat_idx, dtype=np.int64)
    segs = np.asarray(seg_starts, dtype=np.int64)
    cvec = np.asarray(consts, dtype=np.int16)
    out = np.empty(n_rows, dtype=np.int16)
    chunk = max(1, 60_000_000 // len(idx))
    for lo in range(0, n_rows, chunk):
        gathered = neq[lo : lo + chunk, idx]
        sums = np.add.reduceat(gathered, segs, axis=1).astype(np.int16)
        sums += cvec[None, :]
        np.minimum(sums.min(axis=1), base, out=out[lo : lo + chunk])
    return out


def _batch_levenshtein(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Row-batched edit-distance DP (same prefix-minimum trick the fallback
    kernel uses, vectorized over the batch axis)."""
    n_rows, la = X.shape
    lb = Y.shape[1]
    ramp = np.arange(lb + 1, dtype=np.int16)
    prev = np.broadcast_to(ramp, (n_rows, lb + 1)).copy()
    for i in range(1, la + 1):
        neq = (Y != X[:, i - 1][:, None]).astype(np.int16)
        cand = np.minimum(prev[:, 1:] + 1, prev[:, :-1] + neq)
        g = np.empty_like(prev)
        g[:, 0] = i
        g[:, 1:] = cand - ramp[None, 1:]
        np.minimum.accumulate(g, axis=1, out=g)
        prev = g + ramp[None, :]
    return prev[:, -1]


def check_alignment_minimum(
    max_len: int = 6, alphabet: int = 4, crosscheck: int = 200, seed: int = DEFAULT_SEED
) -> dict:
    """Alignment minimization equals the DP edit distance, exhaustively.

    Both quantities depend only on the equality pattern of the concatenation
    a + b, so sweeping every restricted-growth pattern of every length up to
    2*max_len at every split covers every raw pair over the alphabet exactly.
    A sample of raw pairs is re-checked through the scalar brute-force
    enumerator to pin the batched sweep to the real functions.
    """
    patterns = 0
    cases = 0
    for total in range(0, 2 * max_len + 1):
        pats = _rgs_patterns(total, alphabet)
        patterns += len(pats)
        for split in range(max(0, total - max_len), min(max_len, total) + 1):
            X, Y = pats[:, :split], pats[:, split:]
            amin = _batch_align_min(X, Y)
            dmin = _batch_levenshtein(X, Y)
            if not np.array_equal(amin, dmin):
                at = int(np.nonzero(amin != dmin)[0][0])
                sym = "abcdefgh"
                a = "".join(sym[v] for v in pats[at, :split])
                b = "".join(sym[v] for v in pats[at, split:])
                return {
                    "check": "alignment-minimum",
                    "ok": False,
                    "counterexample": {"a": a, "b": b, "align_min": int(amin[at]), "dp": int(dmin[at])},
                }
            cases += len(pats)
    rng = random.Random(seed)
    sym = "abcd"[:alphabet]
    for _ in range(crosscheck):
        a = "".join(rng.choice(sym) for _ in range(rng.randint(0, max_len)))
        b = "".join(rng.choice(sym) for _ in range(rng.randint(0, max_len)))
        am = editdist.align_min_brute(a, b)
        dp = editdist.edit_distance(a, b)
        ok = am == dp
        if ok and len(a) + len(b) <= editdist.RECURSION_ORACLE_MAX:
            ok = editdist.edit_distance_brute(a, b) == dp
        if not ok:
            return {
                "check": "alignment-minimum",
                "ok": False,
                "counterexample": {"a": a, "b": b, "align_min": am, "dp": dp},
            }
    raw = sum(alphabet**l for l in range(max_len + 1))
    return {
        "check": "alignment-minimum",
        "ok": True,
        "patterns": patterns,
        "pattern_split_cases": cases,
        "raw_pairs_covered": raw * raw,
        "crosschecks": crosscheck,
    }


# ------------------------------------------------------------------ strings


def check_padding_law(pairs: int = 200, max_len: int = 12, seed: int = DEFAULT_SEED) -> dict:
    """Equalizing pads shift the distance by exactly the length difference."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(pairs):
        a = "".join(rng.choice("01") for _ in range(rng.randint(0, max_len)))
        b = "".join(rng.choice("01") for _ in range(rng.randint(0, len(a))))
        pa, pb = reduction.equalize_pad(a, b)
        if len(pa) != len(pb):
            return {"check": "padding-law", "ok": False, "counterexample": {"a": a, "b": b}}
        base = editdist.edit_distance(a, b)
        if len(a) + len(b) <= editdist.RECURSION_ORACLE_MAX:
            if editdist.edit_distance_brute(a, b) != base:
                return {
                    "check": "padding-law",
                    "ok": False,
                    "counterexample": {"a": a, "b": b, "kernel": base},
                }
        padded = editdist.edit_distance(pa, pb)
        if padded != base + (len(a) - len(b)):
            return {
                "check": "padding-law",
                "ok": False,
                "counterexample": {"a": a, "b": b, "base": base, "padded": padded},
            }
        checked += 1
    return {"check": "padding-law", "ok": True, "pairs": checked}


def check_block_identity(seed: int = DEFAULT_SEED) -> dict:
    """The whole-string distance equals 2|x| plus the best coarse cost, on
    every two-variable instance (all 16 functions)."""
    checked = []
    for bp in corpus_bps(2, 16, seed):
        inst = reduction.build_instance(bp)
        lhs = kernels.wf_distance(inst.x, inst.y)
        rhs = 2 * len(inst.x) + editdist.coarse_min_brute(inst)
        if lhs != rhs:
            tt = bpcore.truth_table(bp).bits
            return {
                "check": "block-identity",
                "ok": False,
                "counterexample": {"table": tt, "distance": lhs, "block_formula": rhs},
            }
        checked.append(lhs)
    return {
        "check": "block-identity",
        "ok": True,
        "instances": len(checked),
        "distinct_distances": sorted(set(checked)),
    }


# ------------------------------------------------------------------- paths


def check_path_dp_oracle(samples: int = 200, seed: int = DEFAULT_SEED) -> dict:
    """Column DP equals exhaustive path enumeration on small random grids,
    at the low, middle and high reward settings."""
    rng = random.Random(seed)
    consts: dict[int, pathcost.CostConstants] = {}
    comparisons = 0
    for _ in range(samples):
        K = rng.randint(1, 8)
        L = rng.randint(1, max(1, 24 // K))
        density = rng.choice((0.1, 0.3, 0.5, 0.7, 0.9))
        rows = tuple(
            tuple(1 if rng.random() < density else 0 for _ in range(L)) for _ in range(K)
        )
        M = bpcore.StairMatrix(K=K, L=L, rows=rows)
        if L not in consts:
            consts[L] = pathcost.make_constants(Q=4, rho=2, S_G=9, T=10, L=L)
        c = consts[L]
        for mu in (0, c.Q // 2, c.Q):
            fast = pathcost.min_path_cost(M, mu, c)
            slow = pathcost.min_path_cost_brute(M, mu, c)
            if fast != slow:
                return {
                    "check": "path-dp-oracle",
                    "ok": False,
                    "counterexample": {"K": K, "L": L, "mu": mu, "dp": fast, "brute": slow},
                }
            comparisons += 1
    return {"check": "path-dp-oracle", "ok": True, "matrices": samples, "comparisons": comparisons}


def _random_path(K: int, L: int, rng: random.Random) -> list[tuple[int, int]]:
    pts = [(rng.randint(1, K), 1)]
    last_jump = False
    while True:
        i, j = pts[-1]
        if j == L:
            if not last_jump and i < K and rng.random() < 0.3:
                pts.append((rng.randint(i + 1, K), j))
            return pts
        moves = ["step"]
        if not last_jump:
            if i < K:
                moves.append("down")
            if i > 1:
                moves.append("up")
        move = rng.choice(moves)
        if move == "step":
            pts.append((i, j + 1))
            last_jump = False
        elif move == "down":
            pts.append((rng.randint(i + 1, K), j))
            last_jump = True
        else:
            delta = rng.randint(1, min(i - 1, L - j))
            pts.append((i - delta, j + delta))
            last_jump = True


def check_conversion(paths: int = 500, seed: int = DEFAULT_SEED) -> dict:
    """Paths convert to valid coarse alignments that are never longer, every
    all-good alignment converts back to a valid path, the round trip
    reproduces the original path (jump-free paths included explicitly), and
    on the two-variable corpus the converted cost is sandwiched by the path
    cost at the two extreme penalties."""
    rng = random.Random(seed)
    jump_free = 0
    converted = 0
    cases = []
    for _ in range(paths - 50):
        K, L = rng.randint(1, 9), rng.randint(1, 7)
        cases.append((K, L, _random_path(K, L, rng)))
    for _ in range(50):  # straight single-row paths: the jump-free regime
        K, L = rng.randint(1, 9), rng.randint(1, 7)
        i = rng.randint(1, K)
        cases.append((K, L, [(i, j) for j in range(1, L + 1)]))
    for K, L, path in cases:
        tup = tuple(path)
        C = convert.path_to_coarse(tup, K, L)
        n_lo, n_hi, m = convert.coarse_window(C)
        violations = editdist.coarse_validate(C, n_lo, n_hi, m)
        labels = convert.classify_terms(C, K, L)
        back = convert.coarse_to_path(C, K=K)
        in_path_violations = pathcost.validate_path(back, K, L)
        ok = (
            not violations
            and len(C) <= len(tup)
            and all(lab == convert.TERM_GOOD for lab in labels)
            and not in_path_violations
            and back == tup
        )
        if not ok:
            return {
                "check": "conversion",
                "ok": False,
                "counterexample": {"K": K, "L": L, "path": list(tup)},
            }
        converted += 1
        if all(p1[0] == p2[0] for p1, p2 in zip(tup, tup[1:])):
            jump_free += 1
    # Cost bridge on the exhaustive two-variable corpus: converting a path
    # and pricing the result blockwise never drops below the path cost at
    # penalty 0 and never exceeds it at penalty Q; jump-free paths price
    # identically.  A cheap path therefore stays cheap after conversion, and
    # an expensive instance stays expensive (the completeness direction).
    bridge_cases = 0
    for bp in corpus_bps(2, 16, seed):
        inst = reduction.build_instance(bp)
        c = inst.constants
        M = bpcore.matrix_encode(bpcore.truth_table(bp))
        for P in pathcost._all_paths(M.K, M.L):
            c0 = pathcost.path_cost(M, P, 0, c)
            cQ = pathcost.path_cost(M, P, c.Q, c)
            img = editdist.coarse_edit_cost(inst, convert.path_to_coarse(P, M.K, M.L))
            sandwiched = c0 <= img <= cQ
            if all(p1[0] == p2[0] for p1, p2 in zip(P, P[1:])):
                sandwiched = sandwiched and img == c0 == cQ
            if not sandwiched:
                return {
                    "check": "conversion",
                    "ok": False,
                    "counterexample": {"path": list(P), "low": c0, "image": img, "high": cQ},
                }
            bridge_cases += 1
        if pathcost.min_path_cost(M, 0, c) >= c.T_r:
            if editdist.coarse_min_brute(inst) < c.T_r:
                return {
                    "check": "conversion",
                    "ok": False,
                    "counterexample": {"table": bpcore.truth_table(bp).bits, "stage": "completeness"},
                }
    return {
        "check": "conversion",
        "ok": True,
        "paths": converted,
        "jump_free_paths": jump_free,
        "bridge_cases": bridge_cases,
    }


# --------------------------------------------------------------- reduction


def check_gadget_contract(seed: int = DEFAULT_SEED) -> dict:
    """Recompute every gadget-vs-cogadget distance on a program corpus, at
    the default geometry and at the narrower widths the fast checks use."""
    pairs = 0
    runs = 0
    for bp in corpus_bps(2, 16, seed):
        for params in (reduction.GadgetParams(), reduction.GadgetParams(sep_mult=3)):
            rep = reduction.verify_gadget_contract(bp, params)
            pairs += rep["pairs_checked"]
            runs += 1
    for bp in corpus_bps(4, 5, seed + 1):
        for params in (
            reduction.GadgetParams(),
            reduction.GadgetParams(marker_width=8),
            reduction.GadgetParams(marker_width=4),
        ):
            rep = reduction.verify_gadget_contract(bp, params)
            pairs += rep["pairs_checked"]
            runs += 1
    return {"check": "gadget-contract", "ok": True, "programs_and_widths": runs, "pairs": pairs}


def check_decision_equivalence(
    n2_count: int = 50, n4_count: int = 25, seed: int = DEFAULT_SEED
) -> dict:
    """The banded distance decision agrees with the promise label on every
    corpus program; a few instances are re-decided without the band."""
    verdicts = {0: 0, 1: 0}
    decided = 0

    def run(bp: bpcore.NBP, params: reduction.GadgetParams) -> dict | None:
        inst = reduction.build_instance(bp, params)
        rep = reduction.decide_via_editdist(inst)
        want = 1 if rep["promise"] == "one" else 0
        if rep["verdict"] != want:
            return {
                "n": bp.n,
                "promise": rep["promise"],
                "verdict": rep["verdict"],
                "table": bpcore.truth_table(bp).bits,
            }
        verdicts[rep["verdict"]] += 1
        return None

    for idx, bp in enumerate(corpus_bps(2, n2_count, seed)):
        bad = run(bp, reduction.GadgetParams())
        if bad:
            return {"check": "decision-equivalence", "ok": False, "counterexample": bad}
        decided += 1
        if idx < 3:  # tie the band to the full scan on a few instances
            inst = reduction.build_instance(bp)
            full = reduction.decide_via_editdist(inst, use_band=False)
            banded = reduction.decide_via_editdist(inst)
            agree = full["verdict"] == banded["verdict"] and (
                banded["distance"] is None or banded["distance"] == full["distance"]
            )
            if not agree:
                return {
                    "check": "decision-equivalence",
                    "ok": False,
                    "counterexample": {"n": 2, "full": full["distance"], "banded": banded["distance"]},
                }
    # narrower markers keep the n=4 scan fast; the gadget contract is
    # re-verified inside every build, so the geometry stays sound
    params4 = reduction.GadgetParams(marker_width=8)
    for bp in corpus_bps(4, n4_count, seed + 1):
        bad = run(bp, params4)
        if bad:
            return {"check": "decision-equivalence", "ok": False, "counterexample": bad}
        decided += 1
    # the canonical-table prefix guarantees both verdicts whenever at least
    # two n=2 programs run; tiny custom corpora may legitimately be one-sided
    if n2_count >= 2 and (not verdicts[0] or not verdicts[1]):
        return {
            "check": "decision-equivalence",
            "ok": False,
            "counterexample": {"verdict_counts": verdicts, "note": "one-sided corpus"},
        }
    return {
        "check": "decision-equivalence",
        "ok": True,
        "programs": decided,
        "accepts": verdicts[1],
        "rejects": verdicts[0],
        "backend": kernels.backend_name(),
    }


# --------------------------------------------------------------------- ov


def check_ov_bijection(cnfs: int = 100, seed: int = DEFAULT_SEED) -> dict:
    """Orthogonal-pair counting equals brute-force satisfying-assignment
    counting, the parity shortcut matches, and on-demand vector bits agree
    with the fully built vectors everywhere."""
    rng = random.Random(seed)
    bits_checked = 0
    for _ in range(cnfs):
        n = rng.choice((2, 4, 6, 8, 10))
        m = rng.randint(1, 20)
        cnf = ov.random_cnf(n, m, seed=rng.randrange(1 << 30))
        inst = ov.williams_vectors(cnf)
        count = ov.count_orthogonal(inst)
        brute = ov.sat_count_brute(cnf)
        if count != brute or ov.parity_ov(inst) != brute % 2:
            return {
                "check": "ov-bijection",
                "ok": False,
                "counterexample": {"dimacs": ov.serialize_dimacs(cnf), "count": count, "brute": brute},
            }
        for side, mat in (("u", inst.U), ("v", inst.V)):
            for i, vec in enumerate(mat):
                for c_idx in range(cnf.m):
                    if ov.vector_bit(cnf, side, i, c_idx) != vec[c_idx]:
                        return {
                            "check": "ov-bijection",
                            "ok": False,
                            "counterexample": {
                                "dimacs": ov.serialize_dimacs(cnf),
                                "side": side,
                                "index": i,
                                "clause": c_idx,
                            },
                        }
                    bits_checked += 1
    return {"check": "ov-bijection", "ok": True, "formulas": cnfs, "vector_bits": bits_checked}


# -------------------------------------------------------------- adversary


def check_adversary_families(seed: int = DEFAULT_SEED) -> dict:
    """Generator/classifier agreement, exact symbol counts, family membership,
    neighbor-count bounds (exhaustive at the smallest size), and the
    parameter constraint against the reduction's actual constants."""
    for k, levels in ((2, (0, 1, 2)), (4, (0, 1))):
        for level in levels:
            for kind in adversary.KINDS:
                sym = adversary.gen_symbol(level, kind, k, seed=seed + level)
                if len(sym) != k ** (level + 1):
                    return {"check": "adversary-families", "ok": False, "counterexample": {"length": len(sym)}}
                got = adversary.classify_block(sym, level, k)
                if got != kind:
                    return {
                        "check": "adversary-families",
                        "ok": False,
                        "counterexample": {"k": k, "level": level, "kind": kind, "classified": got},
                    }
    # exact level-1 counts at k=2 against raw enumeration
    from_enum = {"plus": 0, "minus": 0, "zero": 0}
    for bits in product("01", repeat=4):
        lab = adversary.classify_block("".join(bits), 1, 2)
        if lab != "invalid":
            from_enum[lab] += 1
    for kind, want in (("plus", 4), ("minus", 4), ("zero", 6)):
        if from_enum[kind] != want or adversary.symbol_count(1, kind, 2) != want:
            return {
                "check": "adversary-families",
                "ok": False,
                "counterexample": {"kind": kind, "enumerated": from_enum[kind]},
            }
    for k, t in ((2, 0), (2, 1), (4, 0)):
        X = adversary.gen_X_matrix(k, t, seed=seed)
        Y = adversary.gen_Y_matrix(k, t, seed=seed)
        if not (
            adversary.is_member_X(X)
            and adversary.is_member_Y(Y)
            and not adversary.is_member_X(Y)
            and not adversary.is_member_Y(X)
        ):
            return {
                "check": "adversary-families",
                "ok": False,
                "counterexample": {"stage": "membership", "k": k, "t": t},
            }
        # balanced rows carry exactly half ones; the one promoted row in a
        # Y matrix carries exactly one extra
        half = adversary.symbol_length(t + 1, k) // 2
        if any(row.count("1") != half for row in X.rows):
            return {
                "check": "adversary-families",
                "ok": False,
                "counterexample": {"stage": "popcount", "family": "X", "k": k, "t": t},
            }
        y_counts = sorted(row.count("1") for row in Y.rows)
        if y_counts != [half] * (len(Y.rows) - 1) + [half + 1]:
            return {
                "check": "adversary-families",
                "ok": False,
                "counterexample": {"stage": "popcount", "family": "Y", "k": k, "t": t},
            }
        # promoting any row of an X matrix by one of its admissible flips
        # lands exactly one bit away, inside the Y family
        rng = random.Random(seed + k + t)
        row_idx = rng.randrange(len(X.rows))
        row = X.rows[row_idx]
        flip_positions = [
            i
            for i, ch in enumerate(row)
            if ch == "0"
            and adversary.classify_block(row[:i] + "1" + row[i + 1 :], t + 1, k) == "plus"
        ]
        if not flip_positions:
            return {
                "check": "adversary-families",
                "ok": False,
                "counterexample": {"stage": "no-flips", "k": k, "t": t},
            }
        pos = rng.choice(flip_positions)
        flipped = row[:pos] + "1" + row[pos + 1 :]
        neighbor = adversary.AdvMatrix(
            k=k, t=t, family="Y", rows=X.rows[:row_idx] + (flipped,) + X.rows[row_idx + 1 :]
        )
        dist = sum(a != b for ra, rb in zip(X.rows, neighbor.rows) for a, b in zip(ra, rb))
        if dist != 1 or not adversary.is_member_Y(neighbor):
            return {
                "check": "adversary-families",
                "ok": False,
                "counterexample": {"stage": "flip-neighbor", "k": k, "t": t, "distance": dist},
            }
    stats2 = adversary.relation_stats(2, 0)
    stats4 = adversary.relation_stats(4, 0, sample_budget=20, seed=seed)
    if not (stats2["ok"] and stats2["exhaustive"] and stats2["x_examined"] == 1296):
        return {"check": "adversary-families", "ok": False, "counterexample": stats2}
    if not (stats4["ok"] and not stats4["exhaustive"]):
        return {"check": "adversary-families", "ok": False, "counterexample": stats4}
    for L, k, t in ((2, 2, 0), (4, 2, 1), (4, 4, 0)):
        c = reduction.derive_constants(L, reduction.GadgetParams())
        if adversary.validate_params(k, t, c):
            return {
                "check": "adversary-families",
                "ok": False,
                "counterexample": {"L": L, "k": k, "t": t},
            }
    tiny = pathcost.make_constants(Q=4, rho=2, S_G=9, T=10, L=4)
    if not adversary.validate_params(4, 2, tiny):
        return {
            "check": "adversary-families",
            "ok": False,
            "counterexample": {"note": "constraint failed to reject an undersized C_jump"},
        }
    return {
        "check": "adversary-families",
        "ok": True,
        "relation": {
            "k2_min_per_x": stats2["min_neighbors_per_x"],
            "k2_bound_per_x": stats2["bound_per_x"],
            "k2_min_per_y": stats2["min_neighbors_per_y"],
            "k2_bound_per_y": stats2["bound_per_y"],
            "k4_min_per_x": stats4["min_neighbors_per_x"],
            "k4_bound_per_x": stats4["bound_per_x"],
        },
    }


def check_dyck(max_len: int = 16, bounds=(0, 1, 2, 3, 8, 16), wrap_samples: int = 200, seed: int = DEFAULT_SEED) -> dict:
    """The single-scan checker against a vectorized prefix-sum oracle on every
    parenthesis string up to max_len, plus the wrap/profile laws."""
    compared = 0
    for length in range(0, max_len + 1):
        count = 1 << length
        if length:
            shifts = np.arange(length - 1, -1, -1, dtype=np.uint32)
            bits = (np.arange(count, dtype=np.uint32)[:, None] >> shifts) & 1
            cums = np.cumsum(1 - 2 * bits.astype(np.int32), axis=1)
            mins, maxs, ends = cums.min(axis=1), cums.max(axis=1), cums[:, -1]
            strings = [
                "".join("(" if (i >> (length - 1 - p)) & 1 == 0 else ")" for p in range(length))
                for i in range(count)
            ]
        else:
            mins = maxs = ends = np.zeros(1, dtype=np.int32)
            strings = [""]
        for bound in bounds:
            expected = (mins >= 0) & (ends == 0) & (maxs <= bound)
            for s, want in zip(strings, expected):
                if adversary.dyck_check(s, int(bound)) != bool(want):
                    return {
                        "check": "dyck-checker",
                        "ok": False,
                        "counterexample": {"string": s, "bound": int(bound)},
                    }
                compared += 1
    rng = random.Random(seed)
    for _ in range(wrap_samples):
        half = rng.randint(1, 10)
        row = list("0" * half + "1" * half)
        rng.shuffle(row)
        row = "".join(row)
        d = adversary.prefix_imbalance_profile(row)
        wrapped = adversary.dyck_wrap(row, d)
        if not adversary.dyck_check(wrapped, 2 * d) or adversary.dyck_check(wrapped, d - 1):
            return {
                "check": "dyck-checker",
                "ok": False,
                "counterexample": {"row": row, "profile": d},
            }
        # one flipped bit unbalances the row, so the wrap can never close:
        # it must fail at the working bound and at an unlimited one alike
        pos = rng.randrange(len(row))
        odd = row[:pos] + ("1" if row[pos] == "0" else "0") + row[pos + 1 :]
        odd_wrapped = adversary.dyck_wrap(odd, d)
        if adversary.dyck_check(odd_wrapped, 2 * d) or adversary.dyck_check(
            odd_wrapped, len(odd_wrapped)
        ):
            return {
                "check": "dyck-checker",
                "ok": False,
                "counterexample": {"row": row, "flip": pos, "profile": d},
            }
    profile_report = {}
    for k, t in ((2, 0), (2, 1), (4, 0)):
        rows = adversary.gen_X_matrix(k, t, seed=seed).rows
        worst = max(adversary.prefix_imbalance_profile(r) for r in rows)
        bound = adversary.default_profile_bound(k, t)
        if worst > bound:
            return {
                "check": "dyck-checker",
                "ok": False,
                "counterexample": {"k": k, "t": t, "worst_profile": worst, "bound": bound},
            }
        profile_report[f"k{k}_t{t}"] = {"worst_profile": worst, "default_bound": bound}
    return {
        "check": "dyck-checker",
        "ok": True,
        "string_bound_cases": compared,
        "wrap_samples": wrap_samples,
        "profiles": profile_report,
    }


# ------------------------------------------------------------------ runner


ALL_CHECKS = (
    ("path-dp-oracle", check_path_dp_oracle),
    ("alignment-minimum", check_alignment_minimum),
    ("padding-law", check_padding_law),
    ("gadget-contract", check_gadget_contract),
    ("block-identity", check_block_identity),
    ("decision-equivalence", check_decision_equivalence),
    ("conversion", check_conversion),
    ("ov-bijection", check_ov_bijection),
    ("adversary-families", check_adversary_families),
    ("dyck-checker", check_dyck),
)

CHECK_NAMES = tuple(name for name, _ in ALL_CHECKS)


def _run_one(name: str, seed: int, kwargs: dict | None = None) -> dict:
    fn = dict(ALL_CHECKS)[name]
    t0 = time.perf_counter()
    try:
        result = fn(seed=seed, **(kwargs or {}))
    except Exception as exc:  # a crashing check is a failing check
        result = {"check": name, "ok": False, "error": f"{type(exc).__name__}: {exc}"}
    result["seconds"] = round(time.perf_counter() - t0, 3)
    return result


def _corpus_overrides(n: int | None, seeds: int | None) -> dict:
    """Per-check keyword overrides for a custom decision corpus: `seeds`
    resizes it and `n` restricts it to one variable count."""
    if n is None and seeds is None:
        return {}
    if n is not None and n not in (2, 4):
        raise ValueError("the decision corpus covers n = 2 and n = 4")
    kwargs: dict = {}
    if n == 2:
        kwargs = {"n2_count": 50 if seeds is None else seeds, "n4_count": 0}
    elif n == 4:
        kwargs = {"n2_count": 0, "n4_count": 25 if seeds is None else seeds}
    else:
        kwargs = {"n2_count": seeds, "n4_count": seeds}
    return {"decision-equivalence": kwargs}


def run_all(
    names=None,
    workers: int | None = None,
    seed: int = DEFAULT_SEED,
    n: int | None = None,
    seeds: int | None = None,
) -> dict:
    """Run the named checks (all by default) and bundle one report.

    workers defaults to the FGX_WORKERS environment variable, then 1. The
    `n` and `seeds` arguments reshape the decision corpus; other checks keep
    their built-in sizes. The report is deterministic for a fixed seed apart
    from the seconds fields.
    """
    if names is None:
        names = list(CHECK_NAMES)
    unknown = [nm for nm in names if nm not in CHECK_NAMES]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}; know {', '.join(CHECK_NAMES)}")
    if workers is None:
        workers = int(os.environ.get("FGX_WORKERS", "1") or "1")
    overrides = _corpus_overrides(n, seeds)
    kwarg_list = [overrides.get(nm) for nm in names]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, names, [seed] * len(names), kwarg_list))
    else:
        results = [_run_one(nm, seed, kw) for nm, kw in zip(names, kwarg_list)]
    report = {
        "schema": "fgx-report/1",
        "report": "verify",
        "backend": kernels.backend_name(),
        "workers": workers,
        "seed": seed,
        "ok": all(r["ok"] for r in results),
        "checks": results,
    }
    if n is not None:
        report["n"] = n
    if seeds is not None:
        report["seeds"] = seeds
    return report


def kernel_throughput(size: int = 4000, repeats: int = 2) -> dict:
    """Cells per second for each importable backend, full and banded scans."""
    rng = random.Random(DEFAULT_SEED)
    a = bytes(rng.randrange(4) + 48 for _ in range(size))
    b = bytes(rng.randrange(4) + 48 for _ in range(size))
    out = {}
    for name, mod in kernels.available_backends().items():
        best_full = 0.0
        best_band = 0.0
        for _ in range(repeats):
            t0 = time.perf_counter()
            mod.wf_distance(a, b)
            dt = time.perf_counter() - t0
            best_full = max(best_full, size * size / dt)
            bound = size // 2
            t0 = time.perf_counter()
            mod.wf_distance_banded(a, b, bound)
            dt = time.perf_counter() - t0
            best_band = max(best_band, size * (bound + 1) / dt)
        out[name] = {
            "full_cells_per_s": round(best_full),
            "banded_cells_per_s": round(best_band),
        }
    return out
