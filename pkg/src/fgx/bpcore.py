"""Layered nondeterministic branching programs and the staircase matrix encoding.

A program accepts an assignment when some start-to-accept path uses only edges
whose (variable, bit) labels agree with the assignment. Truth tables list the
accept bit over all assignments in lexicographic order (first variable is the
most significant bit). The staircase encoding lays a 2^n-bit table out on a
(2L-1) x L grid, L = 2^(n/2), one anti-diagonal per first-half assignment.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import product

DEFAULT_SIZE_CAP = 10**6


class BPFormatError(ValueError):
    """Malformed program text or violated structural invariant."""


class BPEvalError(ValueError):
    """Evaluation called with inconsistent arguments."""


@dataclass(frozen=True)
class NBP:
    n: int
    layers: tuple[tuple[int, ...], ...]
    start: int
    accept: int
    edges: tuple[tuple[int, int, int, int], ...]  # (from, to, var 1-based, bit)

    @property
    def Z(self) -> int:
        return len(self.layers)

    @property
    def width(self) -> int:
        return max(len(layer) for layer in self.layers)

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TruthTable:
    n: int
    bits: str

    def __post_init__(self):
        if len(self.bits) != 2**self.n or set(self.bits) - {"0", "1"}:
            raise BPFormatError("truth table must be 2^n bits of 0/1")


@dataclass(frozen=True)
class StairMatrix:
    """A K x L bit grid.

    matrix_encode produces grids with K = 2L-1 and zeros outside the staircase
    band; the dataclass itself only checks shape so that path-cost tests can
    build arbitrary grids in the same container.
    """

    K: int
    L: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.K < 1 or self.L < 1 or len(self.rows) != self.K:
            raise BPFormatError("bad matrix shape")
        for row in self.rows:
            if len(row) != self.L or set(row) - {0, 1}:
                raise BPFormatError("bad matrix row")

    def cell(self, i: int, j: int) -> int:
        """1-based accessor."""
        return self.rows[i - 1][j - 1]


def in_band(i: int, j: int, L: int) -> bool:
    """1-based staircase membership: 0 < i + j - L <= L."""
    d = i + j - L
    return 0 < d <= L


def validate_bp(bp: NBP, size_cap: int = DEFAULT_SIZE_CAP) -> list[str]:
    violations: list[str] = []
    seen: set[int] = set()
    layer_of: dict[int, int] = {}
    for z, layer in enumerate(bp.layers):
        if not layer:
            violations.append(f"layer {z + 1} is empty")
        for node in layer:
            if node in seen:
                violations.append(f"node id {node} repeated")
            seen.add(node)
            layer_of[node] = z
    if len(bp.layers) < 1:
        violations.append("no layers")
    if bp.start not in layer_of or layer_of.get(bp.start) != 0:
        violations.append("start node missing from layer 1")
    if bp.accept not in layer_of or layer_of.get(bp.accept) != len(bp.layers) - 1:
        violations.append("accept node missing from final layer")
    for idx, (u, v, var, bit) in enumerate(bp.edges):
        if u not in layer_of or v not in layer_of:
            violations.append(f"edge {idx} references unknown node")
            continue
        if layer_of[v] != layer_of[u] + 1:
            violations.append(f"edge {idx} connects non-adjacent layers")
        if not (1 <= var <= bp.n):
            violations.append(f"edge {idx} var index {var} out of range")
        if bit not in (0, 1):
            violations.append(f"edge {idx} bit {bit} not 0/1")
    if bp.size > size_cap:
        violations.append(f"size {bp.size} exceeds cap {size_cap}")
    return violations


def parse_bp(text: str, size_cap: int = DEFAULT_SIZE_CAP) -> NBP:
    """Parse the JSON program format and enforce every structural invariant.

    Format: {"n": int, "layers": [[node ids]], "start": id, "accept": id,
    "edges": [[from, to, var, bit]]}.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BPFormatError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise BPFormatError("top level must be an object")
    try:
        n = int(obj["n"])
        layers = tuple(tuple(int(v) for v in layer) for layer in obj["layers"])
        start = int(obj["start"])
        accept = int(obj["accept"])
        edges = tuple(tuple(int(v) for v in e) for e in obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise BPFormatError(f"missing or malformed field: {exc}") from exc
    for e in edges:
        if len(e) != 4:
            raise BPFormatError("each edge must be [from, to, var, bit]")
    if n < 0:
        raise BPFormatError("n must be nonnegative")
    bp = NBP(n=n, layers=layers, start=start, accept=accept, edges=edges)
    violations = validate_bp(bp, size_cap=size_cap)
    if violations:
        raise BPFormatError("; ".join(violations))
    return bp


def serialize_bp(bp: NBP) -> str:
    return json.dumps(
        {
            "n": bp.n,
            "layers": [list(layer) for layer in bp.layers],
            "start": bp.start,
            "accept": bp.accept,
            "edges": [list(e) for e in bp.edges],
        },
        sort_keys=True,
    )


def _check_assignment(bp: NBP, assignment) -> tuple[int, ...]:
    a = tuple(int(v) for v in assignment)
    if len(a) != bp.n or set(a) - {0, 1}:
        raise BPEvalError(f"assignment must be {bp.n} bits")
    return a


def evaluate(bp: NBP, assignment) -> int:
    """Accept bit via layer-by-layer reachable-set propagation, O(size)."""
    a = _check_assignment(bp, assignment)
    by_layer: dict[int, list[tuple[int, int, int, int]]] = {}
    layer_of = {node: z for z, layer in enumerate(bp.layers) for node in layer}
    for e in bp.edges:
        by_layer.setdefault(layer_of[e[0]], []).append(e)
    reach = {bp.start}
    for z in range(len(bp.layers) - 1):
        nxt = set()
        for u, v, var, bit in by_layer.get(z, ()):
            if u in reach and a[var - 1] == bit:
                nxt.add(v)
        reach = nxt
        if not reach:
            return 0
    return 1 if bp.accept in reach else 0


def eval_paths_brute(bp: NBP, assignment) -> int:
    """Oracle: exhaustive DFS over all labeled start-to-accept paths."""
    a = _check_assignment(bp, assignment)
    succ: dict[int, list[tuple[int, int, int, int]]] = {}
    for e in bp.edges:
        succ.setdefault(e[0], []).append(e)

    def dfs(node: int, z: int) -> bool:
        if z == len(bp.layers) - 1:
            return node == bp.accept
        for _, v, var, bit in succ.get(node, ()):
            if a[var - 1] == bit and dfs(v, z + 1):
                return True
        return False

    return 1 if dfs(bp.start, 0) else 0


def assignments(n: int):
    """All n-bit assignments in lexicographic order, first bit most significant."""
    return product((0, 1), repeat=n)


def truth_table(bp: NBP, budget: int = 2**20) -> TruthTable:
    if 2**bp.n > budget:
        raise BPEvalError(f"2^{bp.n} assignments exceed budget {budget}")
    by_layer: dict[int, list[tuple[int, int, int, int]]] = {}
    layer_of = {node: z for z, layer in enumerate(bp.layers) for node in layer}
    for e in bp.edges:
        by_layer.setdefault(layer_of[e[0]], []).append(e)
    bits = []
    for a in assignments(bp.n):
        reach = {bp.start}
        for z in range(len(bp.layers) - 1):
            nxt = set()
            for u, v, var, bit in by_layer.get(z, ()):
                if u in reach and a[var - 1] == bit:
                    nxt.add(v)
            reach = nxt
            if not reach:
                break
        bits.append("1" if bp.accept in reach else "0")
    return TruthTable(n=bp.n, bits="".join(bits))


def bp_from_truth_table(tt: TruthTable) -> NBP:
    """Canonical program for a table: one node per assignment prefix.

    Layer i holds the 2^i prefixes of length i (i < n); the final layer is a
    single accept node reached exactly from the prefixes the table accepts.
    """
    if tt.n < 1:
        raise BPFormatError("need at least one variable")
    n = tt.n
    layers = []
    next_id = 0
    for z in range(n):
        count = 2**z
        layers.append(tuple(range(next_id, next_id + count)))
        next_id += count
    layers.append((next_id,))
    accept = next_id
    edges = []
    for z in range(n - 1):
        for off, u in enumerate(layers[z]):
            for bit in (0, 1):
                edges.append((u, layers[z + 1][2 * off + bit], z + 1, bit))
    for off, u in enumerate(layers[n - 1]):
        for bit in (0, 1):
            if tt.bits[2 * off + bit] == "1":
                edges.append((u, accept, n, bit))
    return NBP(
        n=n,
        layers=tuple(layers),
        start=layers[0][0],
        accept=accept,
        edges=tuple(edges),
    )


def random_bp(n: int, Z: int, W: int, edge_density: float = 0.5, seed: int = 0) -> NBP:
    """Seed-deterministic random program satisfying all invariants."""
    if n < 1:
        raise BPFormatError("random_bp needs n >= 1")
    if Z < 2 or W < 1:
        raise BPFormatError("need Z >= 2 and W >= 1")
    if not (0.0 <= edge_density <= 1.0):
        raise BPFormatError("edge_density must be in [0, 1]")
    rng = random.Random(seed)
    layers = []
    next_id = 0
    for z in range(Z):
        count = 1 if z == 0 else rng.randint(1, W)
        layers.append(tuple(range(next_id, next_id + count)))
        next_id += count
    edges = []
    for z in range(Z - 1):
        for u in layers[z]:
            for v in layers[z + 1]:
                if rng.random() < edge_density:
                    edges.append((u, v, rng.randint(1, n), rng.randint(0, 1)))
    return NBP(
        n=n,
        layers=tuple(layers),
        start=layers[0][0],
        accept=layers[-1][0],
        edges=tuple(edges),
    )


def matrix_encode(tt: TruthTable) -> StairMatrix:
    """Staircase layout: in-band cell (i,j) holds table index L*(d-1)+j, d=i+j-L."""
    if tt.n % 2:
        raise BPFormatError("matrix encoding needs even n")
    L = 2 ** (tt.n // 2)
    K = 2 * L - 1
    rows = []
    for i in range(1, K + 1):
        row = []
        for j in range(1, L + 1):
            if in_band(i, j, L):
                d = i + j - L
                row.append(int(tt.bits[L * (d - 1) + j - 1]))
            else:
                row.append(0)
        rows.append(tuple(row))
    return StairMatrix(K=K, L=L, rows=tuple(rows))


def matrix_decode(m: StairMatrix) -> TruthTable:
    """Inverse of matrix_encode; rejects grids that are not staircases."""
    violations = validate_staircase(m)
    if violations:
        raise BPFormatError("; ".join(violations))
    L = m.L
    n = (L - 1).bit_length() * 2 if L > 1 else 0
    if 2**(n // 2) != L:
        raise BPFormatError("L is not a power of two")
    bits = ["0"] * (L * L)
    for d in range(1, L + 1):
        for j in range(1, L + 1):
            i = L + d - j
            bits[L * (d - 1) + j - 1] = str(m.cell(i, j))
    return TruthTable(n=n, bits="".join(bits))


def validate_staircase(m: StairMatrix) -> list[str]:
    violations = []
    if m.K != 2 * m.L - 1:
        violations.append(f"K={m.K} is not 2L-1 for L={m.L}")
        return violations
    for i in range(1, m.K + 1):
        for j in range(1, m.L + 1):
            if not in_band(i, j, m.L) and m.cell(i, j):
                violations.append(f"out-of-band cell ({i},{j}) is nonzero")
    return violations


def serialize_matrix(m: StairMatrix) -> str:
    return json.dumps(
        {"K": m.K, "L": m.L, "rows": ["".join(str(b) for b in row) for row in m.rows]},
        sort_keys=True,
    )


def parse_matrix(text: str) -> StairMatrix:
    try:
        obj = json.loads(text)
        K, L = int(obj["K"]), int(obj["L"])
        rows = tuple(tuple(int(ch) for ch in row) for row in obj["rows"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise BPFormatError(f"bad matrix JSON: {exc}") from exc
    return StairMatrix(K=K, L=L, rows=rows)
