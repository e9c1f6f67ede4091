"""DIMACS parsing and the half-assignment clause-vector reduction."""

from __future__ import annotations

import random

import pytest

from fgx import ov


def test_parse_dimacs():
    cnf = ov.parse_dimacs("p cnf 2 1\n1 2 0\n")
    assert (cnf.n, cnf.m, cnf.clauses) == (2, 1, ((1, 2),))


def test_parse_dimacs_comments_and_round_trip():
    text = "c a comment\np cnf 4 2\n1 -3 0\n-2 4 0\n"
    cnf = ov.parse_dimacs(text)
    assert cnf == ov.parse_dimacs(ov.serialize_dimacs(cnf))


def test_parse_dimacs_clause_count_mismatch():
    with pytest.raises(ov.CNFError):
        ov.parse_dimacs("p cnf 2 2\n1 2 0\n")


def test_vectors_for_one_clause():
    # (x1 or x2): the first half {x1} satisfies the clause only at x1=1, so
    # U = [1], [0]; same for the second half; exactly the (1,1) pair fails
    inst = ov.williams_vectors(ov.parse_dimacs("p cnf 2 1\n1 2 0\n"))
    assert inst.U == ((1,), (0,))
    assert inst.V == ((1,), (0,))
    assert ov.count_orthogonal(inst) == 3
    assert ov.parity_ov(inst) == 1


def test_empty_formula_all_pairs_orthogonal():
    inst = ov.williams_vectors(ov.CNF(n=2, m=0, clauses=()))
    assert ov.count_orthogonal(inst) == 4


def test_unsatisfiable_formula_has_no_orthogonal_pair():
    cnf = ov.parse_dimacs("p cnf 2 2\n1 0\n-1 0\n")
    assert ov.count_orthogonal(ov.williams_vectors(cnf)) == 0
    assert ov.sat_count_brute(cnf) == 0


def test_all_ones_vectors_never_orthogonal():
    inst = ov.OVInstance(d=1, U=((1,), (1,)), V=((1,), (1,)))
    assert ov.count_orthogonal(inst) == 0


def test_vector_bit_untouched_and_tautological_clause():
    cnf = ov.parse_dimacs("p cnf 2 1\n2 -2 0\n")
    for i in range(2):
        assert ov.vector_bit(cnf, "u", i, 0) == 1  # clause never touches x1
        assert ov.vector_bit(cnf, "v", i, 0) == 0  # tautology within the half


def test_vector_bit_matches_materialized_vectors():
    rng = random.Random(51)
    for _ in range(20):
        n = rng.choice((2, 4, 6))
        cnf = ov.random_cnf(n, rng.randint(1, 10), seed=rng.randrange(1 << 20))
        inst = ov.williams_vectors(cnf)
        for side, mat in (("u", inst.U), ("v", inst.V)):
            for i, vec in enumerate(mat):
                for c in range(cnf.m):
                    assert ov.vector_bit(cnf, side, i, c) == vec[c]


def test_count_equals_satisfying_assignments():
    rng = random.Random(52)
    for _ in range(20):
        n = rng.choice((2, 4, 6, 8))
        cnf = ov.random_cnf(n, rng.randint(1, 12), seed=rng.randrange(1 << 20))
        inst = ov.williams_vectors(cnf)
        brute = ov.sat_count_brute(cnf)
        assert ov.count_orthogonal(inst) == brute
        assert ov.parity_ov(inst) == brute % 2


def test_odd_variable_count_rejected():
    with pytest.raises(ov.CNFError):
        ov.williams_vectors(ov.CNF(n=3, m=0, clauses=()))
