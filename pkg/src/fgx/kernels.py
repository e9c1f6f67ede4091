"""Backend selection for the string-DP kernels.

Prefers the compiled extension (fgx._editcore); falls back to the numpy
implementation (fgx._editpure) when the extension was not built. Both expose
the same two primitives over byte strings.
"""

from __future__ import annotations

try:
    from fgx import _editcore as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built on this install
    from fgx import _editpure as _impl

    BACKEND = "fallback"


def backend_name() -> str:
    return BACKEND


def available_backends() -> dict:
    """Name -> module for every importable backend (benchmarks, tests)."""
    from fgx import _editpure

    out = {"fallback": _editpure}
    try:
        from fgx import _editcore

        out["compiled"] = _editcore
    except ImportError:
        pass
    return out


def as_bytes(s) -> bytes:
    if isinstance(s, bytes):
        return s
    if isinstance(s, str):
        return s.encode("ascii")
    return bytes(s)


def wf_distance(a, b) -> int:
    """Exact edit distance (unit insert/delete/substitute)."""
    return int(_impl.wf_distance(as_bytes(a), as_bytes(b)))


def wf_distance_banded(a, b, bound: int) -> int | None:
    """Exact edit distance when it is <= bound, else None."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    res = int(_impl.wf_distance_banded(as_bytes(a), as_bytes(b), int(bound)))
    return None if res < 0 else res
