"""Compare the compiled kernel against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--sizes 1000,4000,8000] [--repeats 3]

Prints one JSON report: cells per second for the full scan and for a banded
scan at bound = size/2, per backend, plus the speedup ratio.
"""

from __future__ import annotations

import argparse
import json
import random
import time

from fgx import kernels


def bench_one(mod, a: bytes, b: bytes, bound: int, repeats: int) -> dict:
    best_full = 0.0
    best_band = 0.0
    checks = set()
    for _ in range(repeats):
        t0 = time.perf_counter()
        d = mod.wf_distance(a, b)
        dt = time.perf_counter() - t0
        best_full = max(best_full, len(a) * len(b) / dt)
        checks.add(("full", d))
        t0 = time.perf_counter()
        db = mod.wf_distance_banded(a, b, bound)
        dt = time.perf_counter() - t0
        best_band = max(best_band, len(a) * (bound + 1) / dt)
        checks.add(("banded", db))
    if len(checks) != 2:
        raise RuntimeError(f"nondeterministic distances: {sorted(checks)}")
    return {
        "distance": d,
        "banded": None if db < 0 else int(db),  # raw backends signal exceeded as -1
        "full_cells_per_s": round(best_full),
        "banded_cells_per_s": round(best_band),
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="1000,4000,8000")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    backends = kernels.available_backends()
    report = {"active_backend": kernels.backend_name(), "sizes": {}}
    for size in (int(s) for s in args.sizes.split(",")):
        a = bytes(rng.randrange(4) + 48 for _ in range(size))
        b = bytes(rng.randrange(4) + 48 for _ in range(size))
        bound = size // 2
        per_size: dict[str, dict] = {}
        for name, mod in backends.items():
            per_size[name] = bench_one(mod, a, b, bound, args.repeats)
        if "compiled" in per_size and "fallback" in per_size:
            per_size["speedup_full"] = round(
                per_size["compiled"]["full_cells_per_s"] / per_size["fallback"]["full_cells_per_s"], 2
            )
        distances = {v["distance"] for v in per_size.values() if isinstance(v, dict) and "distance" in v}
        if len(distances) != 1:
            raise RuntimeError(f"backends disagree at size {size}: {distances}")
        report["sizes"][str(size)] = per_size
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
