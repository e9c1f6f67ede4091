"""Acceptance suite: one test per criterion, each printing one pass/fail line.

Every test drives the same checks that `fgx verify all` runs, so the command
line and this suite cannot drift apart. Lines are printed for human scans of
the captured output; the assertions carry the actual verdicts.
"""

from __future__ import annotations

import time

from fgx import adversary, bpcore, editdist, kernels, reduction, verify


def report(num: int, label: str, ok: bool, detail: str) -> None:
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} {label}: {detail}")


def test_criterion_01_decision_equivalence_within_budget():
    t0 = time.perf_counter()
    r = verify.check_decision_equivalence(n2_count=50, n4_count=25)
    took = time.perf_counter() - t0
    ok = r["ok"] and took < 120.0
    report(
        1,
        "decision equals promise on the corpus",
        ok,
        f"{r.get('programs', 0)} programs, {r.get('accepts')} accept / {r.get('rejects')} reject, {took:.1f}s",
    )
    assert r["ok"], r
    assert took < 120.0


def test_criterion_02_blockwise_identity():
    r = verify.check_block_identity()
    report(
        2,
        "distance minus skeleton equals coarse minimum",
        r["ok"],
        f"{r.get('instances', 0)} instances, distances {r.get('distinct_distances')}",
    )
    assert r["ok"], r


def test_criterion_03_gadget_contract():
    r = verify.check_gadget_contract()
    report(
        3,
        "gadget distances encode satisfaction exactly",
        r["ok"],
        f"{r.get('pairs', 0)} pairs over {r.get('programs_and_widths', 0)} builds",
    )
    assert r["ok"], r


def test_criterion_04_padding_law():
    r = verify.check_padding_law()
    report(
        4,
        "padding shifts distance by the length gap",
        r["ok"],
        f"{r.get('pairs', 0)} random pairs",
    )
    assert r["ok"], r


def test_criterion_05_alignment_minimum_full_sweep():
    r = verify.check_alignment_minimum()
    report(
        5,
        "alignment minimum equals DP distance",
        r["ok"],
        f"{r.get('raw_pairs_covered', 0)} pairs via {r.get('pattern_split_cases', 0)} canonical cases",
    )
    assert r["ok"], r


def test_criterion_06_path_cost_dp_oracle():
    r = verify.check_path_dp_oracle()
    report(
        6,
        "column DP equals exhaustive path enumeration",
        r["ok"],
        f"{r.get('matrices', 0)} matrices, {r.get('comparisons', 0)} comparisons",
    )
    assert r["ok"], r


def test_criterion_07_conversion_laws():
    r = verify.check_conversion()
    report(
        7,
        "conversions validate, never grow, and invert",
        r["ok"],
        f"{r.get('paths', 0)} paths, {r.get('jump_free_paths', 0)} jump-free, {r.get('bridge_cases', 0)} cost-bridge cases",
    )
    assert r["ok"], r


def test_criterion_08_ov_bijection():
    r = verify.check_ov_bijection()
    report(
        8,
        "orthogonal pairs equal satisfying assignments",
        r["ok"],
        f"{r.get('formulas', 0)} formulas, {r.get('vector_bits', 0)} on-demand bits",
    )
    assert r["ok"], r


def test_criterion_09_adversary_families():
    r = verify.check_adversary_families()
    bp = bpcore.bp_from_truth_table(bpcore.TruthTable(n=4, bits="0" * 16))
    inst = reduction.build_instance(bp, reduction.GadgetParams(marker_width=8))
    params_ok = adversary.validate_params(2, 0, inst.constants) == []
    ok = r["ok"] and params_ok
    report(
        9,
        "family invariants and relation bounds",
        ok,
        f"relation {r.get('relation')}, built-instance params ok={params_ok}",
    )
    assert r["ok"], r
    assert params_ok


def test_criterion_10_dyck_checker():
    r = verify.check_dyck()
    report(
        10,
        "depth checker, wrap law, single-flip rejection",
        r["ok"],
        f"{r.get('string_bound_cases', 0)} string/bound cases, profiles {r.get('profiles')}",
    )
    assert r["ok"], r


def test_criterion_11_performance_sanity():
    bp = bpcore.random_bp(4, Z=6, W=3, edge_density=0.6, seed=verify.DEFAULT_SEED)
    t0 = time.perf_counter()
    inst = reduction.build_instance(bp)  # full default geometry
    rep = reduction.decide_via_editdist(inst)
    took = time.perf_counter() - t0
    rates = verify.kernel_throughput(size=2000, repeats=2)
    active = rates[kernels.backend_name()]
    floor = 10**7
    ok = took < 120.0 and active["full_cells_per_s"] >= floor
    report(
        11,
        "end-to-end runtime and kernel throughput",
        ok,
        f"n=4 decide {took:.2f}s (|x|={len(inst.x)}), "
        f"{kernels.backend_name()} {active['full_cells_per_s']:.2e} cells/s",
    )
    assert rep["verdict"] in (0, 1)
    assert took < 120.0
    assert active["full_cells_per_s"] >= floor
