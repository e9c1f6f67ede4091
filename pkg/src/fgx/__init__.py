"""Reduction laboratory: branching programs, jump-penalized path costs, the
gadget reduction to string edit distance, coarse-alignment conversions,
clause-satisfaction vectors, and adversarial matrix families."""

from __future__ import annotations

__version__ = "0.1.0"

__all__ = [
    "adversary",
    "bpcore",
    "cli",
    "convert",
    "editdist",
    "kernels",
    "ov",
    "pathcost",
    "reduction",
    "verify",
]
