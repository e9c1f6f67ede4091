"""Path-to-coarse and coarse-to-path conversion, classification, and costs."""

from __future__ import annotations

import pytest

from fgx import bpcore, convert, editdist, pathcost, reduction


def test_straight_step_trace():
    C = convert.path_to_coarse(((1, 1), (1, 2)), 3, 2)
    assert C == (((1,), (1,)), ((2,), (2,)))


def test_down_jump_trace():
    C = convert.path_to_coarse(((1, 1), (3, 1), (3, 2)), 3, 2)
    assert C == (((1, 2, 3), (1,)), ((4,), (2,)))


def test_up_jump_trace():
    # an upward jump advances the column, so the q side carries the run
    assert pathcost.validate_path(((3, 1), (2, 2)), 3, 2) == []
    C = convert.path_to_coarse(((3, 1), (2, 2)), 3, 2)
    assert C == (((3,), (1, 2)),)


def test_image_never_longer_and_always_valid():
    import random

    rng = random.Random(41)
    for _ in range(50):
        K, L = rng.randint(1, 8), rng.randint(1, 6)
        path = [(rng.randint(1, K), 1)]
        while path[-1][1] < L:
            i, j = path[-1]
            moves = [(i, j + 1)]
            if len(path) == 1 or path[-2][0] == path[-1][0]:
                moves += [(r, j) for r in range(i + 1, K + 1)]
                moves += [(r, j + (i - r)) for r in range(1, i) if j + (i - r) <= L]
            path.append(rng.choice(moves))
        tup = tuple(path)
        if pathcost.validate_path(tup, K, L):
            continue
        C = convert.path_to_coarse(tup, K, L)
        n_lo, n_hi, m = convert.coarse_window(C)
        assert editdist.coarse_validate(C, n_lo, n_hi, m) == []
        assert len(C) <= len(tup)


def test_inverse_trace():
    assert convert.coarse_to_path((((1,), (1,)), ((2,), (2,))), K=3) == ((1, 1), (1, 2))


def test_round_trip_identity():
    for path in pathcost._all_paths(3, 2):
        C = convert.path_to_coarse(path, 3, 2)
        assert convert.coarse_to_path(C, K=3) == path


def test_classification():
    assert convert.classify_terms((((1,), (1,)),), 3, 2) == (convert.TERM_GOOD,)
    assert convert.classify_terms((((1,), (2,)),), 3, 2) == (convert.TERM_LOW,)
    high = ((tuple(range(1, 5)), (1,)),)
    assert convert.classify_terms(high, 3, 2) == (convert.TERM_HIGH,)


def test_bad_terms_refuse_conversion():
    with pytest.raises(convert.ConvertError):
        convert.coarse_to_path((((1,), (2,)),), K=3)


def test_converted_cost_sandwiched_by_path_cost():
    tt = bpcore.TruthTable(n=2, bits="0110")
    inst = reduction.build_instance(bpcore.bp_from_truth_table(tt))
    c = inst.constants
    M = bpcore.matrix_encode(tt)
    for P in pathcost._all_paths(3, 2):
        lo = pathcost.path_cost(M, P, 0, c)
        hi = pathcost.path_cost(M, P, c.Q, c)
        img = editdist.coarse_edit_cost(inst, convert.path_to_coarse(P, 3, 2))
        assert lo <= img <= hi
        if all(p[0] == q[0] for p, q in zip(P, P[1:])):
            assert img == lo == hi
