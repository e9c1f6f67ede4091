"""Gadget construction, padding, the string-pair build, and the end decision."""

from __future__ import annotations

import random

import pytest

from fgx import bpcore, editdist, pathcost, reduction


def program(bits: str) -> bpcore.NBP:
    n = (len(bits) - 1).bit_length()
    return bpcore.bp_from_truth_table(bpcore.TruthTable(n=n, bits=bits))


def test_gadget_layout():
    assert reduction.build_gadget((1, 0), 2) == "22122022"
    assert reduction.build_cogadget(1, 2, 2) == "22122322"
    assert reduction.build_cogadget(2, 2, 2) == "22322122"
    assert reduction.dummy_gadget(2, 2) == "22022022"
    assert reduction.dummy_gadget(2, 2) == reduction.build_gadget((0, 0), 2)


def test_gadget_lengths():
    for L, w in ((2, 2), (2, 8), (4, 3)):
        S_G = (w + 1) * L + w
        rows = [tuple(random.Random(L * w + b).randint(0, 1) for _ in range(L)) for b in range(3)]
        for row in rows:
            assert len(reduction.build_gadget(row, w)) == S_G
        for b in range(1, L + 1):
            assert len(reduction.build_cogadget(b, L, w)) == S_G
        assert len(reduction.dummy_gadget(L, w)) == S_G


def test_gadget_distance_encodes_satisfaction():
    # distance Q - rho*S(a,b) between gadget and cogadget, Q between dummy
    # and cogadget, on a mixed table at the smallest geometry
    bp = program("0110")
    params = reduction.GadgetParams(marker_width=2)
    c = reduction.derive_constants(2, params)
    A, B = reduction.half_assignments(2)
    for ai, a in enumerate(A):
        row = reduction.sat_row(bp, a, B)
        g = reduction.build_gadget(row, 2)
        for bi in range(1, 3):
            cog = reduction.build_cogadget(bi, 2, 2)
            want = c.Q - c.rho * row[bi - 1]
            assert editdist.edit_distance(g, cog) == want
    for bi in range(1, 3):
        cog = reduction.build_cogadget(bi, 2, 2)
        assert editdist.edit_distance(reduction.dummy_gadget(2, 2), cog) == c.Q


def test_contract_verifier_accepts_and_counts():
    rep = reduction.verify_gadget_contract(program("0110"))
    assert rep["pairs_checked"] == 6  # L*L gadget pairs plus L dummy pairs


def test_contract_verifier_needs_even_n():
    bp = bpcore.bp_from_truth_table(bpcore.TruthTable(n=1, bits="01"))
    with pytest.raises(reduction.GadgetError):
        reduction.verify_gadget_contract(bp)


def test_padding_examples():
    assert reduction.equalize_pad("010", "01") == ("222010", "022201")
    assert editdist.edit_distance("222010", "022201") == 2
    assert reduction.equalize_pad("1", "") == ("21", "02")
    assert editdist.edit_distance("21", "02") == 2


def test_padding_shifts_distance_by_length_gap():
    rng = random.Random(31)
    for _ in range(40):
        a = "".join(rng.choice("01") for _ in range(rng.randint(0, 12)))
        b = "".join(rng.choice("01") for _ in range(rng.randint(0, len(a))))
        a2, b2 = reduction.equalize_pad(a, b)
        assert len(a2) == len(b2)
        gap = len(a) - len(b)
        assert editdist.edit_distance(a2, b2) == gap + editdist.edit_distance(a, b)


def test_instance_block_structure():
    inst = reduction.build_instance(program("0110"))
    c = inst.constants
    assert inst.n_x_blocks == 4 and inst.n_y_blocks == 2
    blk = 2 * c.T + c.S_G
    assert len(inst.x) == 4 * blk
    assert inst.x == "".join(reduction.block_of_x(inst, i) for i in range(1, 5))
    # dummies outside the central band, gadgets inside
    assert inst.x_block(1) == "5" * c.T + reduction.dummy_gadget(2, inst.w) + "6" * c.T
    first_real = reduction.build_gadget(reduction.sat_row(inst.bp, inst.A[0], inst.B), inst.w)
    assert inst.x_block(2) == "5" * c.T + first_real + "6" * c.T
    # y is the cogadget run absorbed in 7-padding as long as x on both sides
    assert len(inst.y) == 2 * len(inst.x) + 2 * blk
    assert inst.y[: len(inst.x)] == "7" * len(inst.x)
    assert inst.y[-len(inst.x) :] == "7" * len(inst.x)
    assert inst.y[len(inst.x) : len(inst.x) + blk] == inst.y_block(1)
    assert inst.C_star == 2 * len(inst.x) + c.T_r


def test_block_index_bounds():
    inst = reduction.build_instance(program("0110"))
    with pytest.raises(reduction.GadgetError):
        reduction.block_of_x(inst, 0)
    with pytest.raises(reduction.GadgetError):
        inst.y_block(3)


def test_decide_constant_programs():
    # skeleton cost 2|x| = 3536 at the default geometry; the threshold sits
    # T_r = 4 above it
    one = reduction.decide_via_editdist(reduction.build_instance(program("1111")))
    assert one["verdict"] == 1 and one["promise"] == "one"
    inst0 = reduction.build_instance(program("0000"))
    banded = reduction.decide_via_editdist(inst0)
    assert banded["verdict"] == 0 and banded["promise"] == "zero"
    assert banded["distance"] is None  # the band only certifies >= C_star
    full = reduction.decide_via_editdist(inst0, use_band=False)
    assert full["verdict"] == 0
    assert full["distance"] == 3540  # frozen from edit_distance(x, y)


def test_decide_full_scan_agrees_with_band():
    inst = reduction.build_instance(program("1011"))
    banded = reduction.decide_via_editdist(inst)
    full = reduction.decide_via_editdist(inst, use_band=False)
    assert banded["verdict"] == full["verdict"] == 1
    assert full["distance"] == 3538  # both halves of the table satisfied


def test_decide_matches_promise_on_random_corpus():
    rng = random.Random(33)
    for _ in range(6):
        bits = "".join(rng.choice("01") for _ in range(4))
        inst = reduction.build_instance(program(bits))
        m = bpcore.matrix_encode(bpcore.truth_table(inst.bp))
        want = pathcost.pp_edit_promise(m, inst.constants)
        rep = reduction.decide_via_editdist(inst)
        assert rep["promise"] == want
        assert rep["verdict"] == (1 if want == "one" else 0)


def test_narrow_markers_still_pass_contract():
    inst = reduction.build_instance(program("0110"), reduction.GadgetParams(marker_width=2))
    assert inst.w == 2
    rep = reduction.decide_via_editdist(inst)
    assert rep["verdict"] == 1


def test_build_rejects_odd_arity():
    bp = bpcore.bp_from_truth_table(bpcore.TruthTable(n=1, bits="01"))
    with pytest.raises(reduction.GadgetError):
        reduction.build_instance(bp)
