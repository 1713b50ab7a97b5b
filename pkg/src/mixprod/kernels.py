"""Rank-kernel backend selection.

The compiled extension (`mixprod._kernels`, built from Cython) is used when
present; otherwise the pure-Python module takes over. Set MIXPROD_PURE=1 to
force the pure backend, e.g. to benchmark one against the other.
"""

from __future__ import annotations

import os

from . import _kernels_py as _pure

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

_active = _pure if os.environ.get("MIXPROD_PURE") == "1" or _compiled is None else _compiled


def backend_name() -> str:
    return "compiled" if _active is _compiled else "pure"


def available_backends() -> list[str]:
    return ["compiled", "pure"] if _compiled is not None else ["pure"]


def use_backend(name: str) -> None:
    """Switch backends at runtime (benchmark plumbing, not thread-safe)."""
    global _active
    if name == "pure":
        _active = _pure
    elif name == "compiled":
        if _compiled is None:
            raise ValueError("compiled kernels are not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")


def rank_gf2(rows: list[int], ncols: int) -> int:
    return _active.rank_gf2(rows, ncols)


def rank_mod(rows: list[list[int]], p: int) -> int:
    return _active.rank_mod(rows, p)


def rank_int(rows: list[list[int]]) -> int:
    result = _active.rank_int(rows)
    if result < 0:
        # compiled kernel declined (64-bit overflow); redo exactly
        result = _pure.rank_int(rows)
    return result
