"""CNF to orthogonal-vectors machinery with local single-bit access.

Each first-half assignment a maps to the vector u_a with u_a[c] = 0 when a
already satisfies clause c and 1 otherwise; second-half assignments map to
v_b symmetrically. A pair is orthogonal exactly when every clause is satisfied
by one of the halves, so orthogonal pairs biject with satisfying assignments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from fgx.bpcore import assignments

SAT_BRUTE_MAX_N = 20


class CNFError(ValueError):
    pass


@dataclass(frozen=True)
class CNF:
    n: int
    m: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0 or self.m != len(self.clauses):
            raise CNFError("clause count mismatch")
        for cl in self.clauses:
            for lit in cl:
                if lit == 0 or abs(lit) > self.n:
                    raise CNFError(f"literal {lit} out of range")


@dataclass(frozen=True)
class OVInstance:
    d: int
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]


def parse_dimacs(text: str) -> CNF:
    """Standard DIMACS cnf: 'c' comments, one 'p cnf n m' header, clauses as
    whitespace-separated literals terminated by 0."""
    n = m = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CNFError(f"bad header: {line!r}")
            if n is not None:
                raise CNFError("duplicate header")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise CNFError(f"bad header numbers: {line!r}") from exc
            continue
        if n is None:
            raise CNFError("clause before header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError as exc:
                raise CNFError(f"malformed literal {tok!r}") from exc
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if n is None:
        raise CNFError("missing header")
    if current:
        raise CNFError("unterminated clause")
    if len(clauses) != m:
        raise CNFError(f"header promises {m} clauses, found {len(clauses)}")
    return CNF(n=n, m=m, clauses=tuple(clauses))


def serialize_dimacs(cnf: CNF) -> str:
    lines = [f"p cnf {cnf.n} {cnf.m}"]
    lines += [" ".join(str(lit) for lit in cl) + " 0" for cl in cnf.clauses]
    return "\n".join(lines) + "\n"


def _half_sat(clause, lo_var: int, hi_var: int, bits, offset: int) -> bool:
    """Does this partial assignment (vars lo..hi, bits[k] for var lo+k,
    globally offset) already satisfy the clause?"""
    for lit in clause:
        var = abs(lit)
        if lo_var <= var <= hi_var:
            val = bits[var - offset]
            if (val == 1) == (lit > 0):
                return True
    return False


def williams_vectors(cnf: CNF) -> OVInstance:
    """Materialize both vector families (first-half / second-half split)."""
    if cnf.n % 2:
        raise CNFError("split reduction needs even n")
    h = cnf.n // 2
    U = []
    for a in assignments(h):
        U.append(tuple(0 if _half_sat(cl, 1, h, a, 1) else 1 for cl in cnf.clauses))
    V = []
    for b in assignments(h):
        V.append(tuple(0 if _half_sat(cl, h + 1, cnf.n, b, h + 1) else 1 for cl in cnf.clauses))
    return OVInstance(d=cnf.m, U=tuple(U), V=tuple(V))


def vector_bit(cnf: CNF, side: str, assignment_index: int, clause_index: int) -> int:
    """One coordinate of the reduction without materializing it.

    side is 'u' or 'v'; assignment_index is the 0-based lexicographic index of
    the half-assignment (first variable of the half = most significant bit);
    clause_index is 0-based. Polynomial in (n, m).
    """
    if cnf.n % 2:
        raise CNFError("split reduction needs even n")
    h = cnf.n // 2
    if not (0 <= assignment_index < 2**h):
        raise CNFError(f"assignment index {assignment_index} out of range")
    if not (0 <= clause_index < cnf.m):
        raise CNFError(f"clause index {clause_index} out of range")
    bits = tuple((assignment_index >> (h - 1 - k)) & 1 for k in range(h))
    clause = cnf.clauses[clause_index]
    if side == "u":
        return 0 if _half_sat(clause, 1, h, bits, 1) else 1
    if side == "v":
        return 0 if _half_sat(clause, h + 1, cnf.n, bits, h + 1) else 1
    raise CNFError(f"side must be 'u' or 'v', got {side!r}")


def count_orthogonal(inst: OVInstance) -> int:
    if not inst.U or not inst.V:
        return 0
    U = np.array(inst.U, dtype=np.int64).reshape(len(inst.U), inst.d)
    V = np.array(inst.V, dtype=np.int64).reshape(len(inst.V), inst.d)
    if inst.d == 0:
        return len(inst.U) * len(inst.V)
    return int(((U @ V.T) == 0).sum())


def parity_ov(inst: OVInstance) -> int:
    return count_orthogonal(inst) & 1


def sat_count_brute(cnf: CNF) -> int:
    """Oracle: exhaustive satisfying-assignment count, vectorized, n <= 20."""
    if cnf.n > SAT_BRUTE_MAX_N:
        raise CNFError(f"brute sat count capped at n = {SAT_BRUTE_MAX_N}")
    idx = np.arange(2**cnf.n, dtype=np.int64)
    ok = np.ones(2**cnf.n, dtype=bool)
    for cl in cnf.clauses:
        sat = np.zeros(2**cnf.n, dtype=bool)
        for lit in cl:
            bit = (idx >> (cnf.n - abs(lit))) & 1
            sat |= (bit == 1) if lit > 0 else (bit == 0)
        ok &= sat
    return int(ok.sum())


def random_cnf(n: int, m: int, seed: int = 0, max_clause: int = 3) -> CNF:
    """Seeded generator for test corpora; clauses of 1..max_clause literals."""
    if n < 1:
        raise CNFError("need n >= 1")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        width = rng.randint(1, max_clause)
        vars_ = rng.sample(range(1, n + 1), min(width, n))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vars_))
    return CNF(n=n, m=m, clauses=tuple(clauses))
