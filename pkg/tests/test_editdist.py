"""String distances, alignments, and blockwise coarse alignment costs."""

from __future__ import annotations

import random

import pytest

from fgx import bpcore, editdist, kernels, reduction


def test_distance_basics():
    assert editdist.edit_distance("abc", "abc") == 0
    assert editdist.edit_distance("", "abc") == 3
    assert editdist.edit_distance("abc", "") == 3
    assert editdist.edit_distance("kitten", "sitting") == 3


def test_distance_matches_recursive_oracle():
    rng = random.Random(21)
    for _ in range(60):
        a = "".join(rng.choice("abcd") for _ in range(rng.randint(0, 8)))
        b = "".join(rng.choice("abcd") for _ in range(rng.randint(0, 8)))
        assert editdist.edit_distance(a, b) == editdist.edit_distance_brute(a, b)


def test_distance_symmetry_and_triangle():
    rng = random.Random(22)
    for _ in range(60):
        a, b, c = (
            "".join(rng.choice("abc") for _ in range(rng.randint(0, 12))) for _ in range(3)
        )
        dab = editdist.edit_distance(a, b)
        assert dab == editdist.edit_distance(b, a)
        assert dab <= editdist.edit_distance(a, c) + editdist.edit_distance(c, b)


def test_banded_agrees_when_within_bound():
    rng = random.Random(23)
    for _ in range(60):
        a = "".join(rng.choice("ab") for _ in range(rng.randint(0, 10)))
        b = "".join(rng.choice("ab") for _ in range(rng.randint(0, 10)))
        full = editdist.edit_distance(a, b)
        assert editdist.edit_distance_banded(a, b, full) == full
        if full > 0:
            assert editdist.edit_distance_banded(a, b, full - 1) is None


def test_banded_edges():
    assert editdist.edit_distance_banded("same", "same", 0) == 0
    assert editdist.edit_distance_banded("aaaa", "bbbb", 3) is None
    with pytest.raises(editdist.AlignmentError):
        editdist.edit_distance_banded("a", "b", -1)


def test_backends_available():
    names = kernels.available_backends()
    assert kernels.backend_name() in names


def test_align_cost_basics():
    assert editdist.align_cost("abc", "ab", ()) == 5  # empty alignment pays n + m
    assert editdist.align_cost("abc", "abc", ((1, 1), (2, 2), (3, 3))) == 0
    assert editdist.align_cost("abc", "axc", ((1, 1), (2, 2), (3, 3))) == 1
    with pytest.raises(editdist.AlignmentError):
        editdist.align_cost("abc", "abc", ((2, 2), (1, 1)))


def test_align_minimum_equals_distance():
    rng = random.Random(24)
    for _ in range(40):
        a = "".join(rng.choice("abcd") for _ in range(rng.randint(0, 6)))
        b = "".join(rng.choice("abcd") for _ in range(rng.randint(0, 6)))
        assert editdist.align_min_brute(a, b) == editdist.edit_distance(a, b)


def test_align_minimum_cap():
    with pytest.raises(editdist.AlignmentError):
        editdist.align_min_brute("aaaaaaa", "a")


def test_coarse_validate():
    ok = (((1,), (1,)), ((2,), (2,)))
    assert editdist.coarse_validate(ok, 1, 2, 2) == []
    both_runs = (((1, 2), (1, 2)),)
    assert editdist.coarse_validate(both_runs, 1, 2, 2)
    overlapping_q = (((1,), (1, 2)), ((2,), (2,)))
    assert editdist.coarse_validate(overlapping_q, 1, 2, 2)


def test_coarse_single_term_covering_everything_rejected():
    whole = (((1, 2, 3, 4), (1, 2)),)
    assert editdist.coarse_validate(whole, 1, 4, 2)


def build(bits: str, **kw) -> reduction.ReductionInstance:
    tt = bpcore.TruthTable(n=2, bits=bits)
    return reduction.build_instance(bpcore.bp_from_truth_table(tt), reduction.GadgetParams(**kw))


def test_coarse_cost_of_matched_blocks():
    inst = build("1111")
    c = inst.constants
    # real blocks matched one-to-one cost Q - rho per term when satisfied
    middle = (((2,), (1,)), ((3,), (2,)))
    assert editdist.coarse_edit_cost(inst, middle) == 2 * (c.Q - c.rho)
    # a dummy block paired with any y block costs Q
    top = (((1,), (1,)), ((2,), (2,)))
    assert editdist.coarse_edit_cost(inst, top) == c.Q + (c.Q - c.rho)


def test_coarse_min_matches_distance_minus_skeleton():
    inst = build("0110")
    d = editdist.edit_distance(inst.x, inst.y)
    assert d - 2 * len(inst.x) == editdist.coarse_min_brute(inst)


def test_coarse_min_expensive_when_nothing_satisfies():
    inst = build("0000")
    assert editdist.coarse_min_brute(inst) >= inst.constants.T_r


def test_coarse_min_single_block_degenerate():
    # one x block against one y block, no dummies: the minimum is just the
    # blockwise distance
    w, T = 2, 40

    class Stub:
        n_x_blocks = 1
        n_y_blocks = 1

        def x_block(self, i):
            return "5" * T + reduction.build_gadget((0,), w) + "6" * T

        def y_block(self, j):
            return "5" * T + reduction.build_cogadget(1, 1, w) + "6" * T

    stub = Stub()
    want = editdist.edit_distance(stub.x_block(1), stub.y_block(1))
    assert editdist.coarse_min_brute(stub) == want == 1
