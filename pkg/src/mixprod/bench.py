"""Benchmark the compiled rank kernels against the pure-Python fallback.

    python -m mixprod.bench [--repeat N]

Raw kernel timings run both backends in one process; the end-to-end rows time
a full oracle Betti table with the backend switched globally.
"""

from __future__ import annotations

import argparse
import random
import time

from . import kernels
from .betti import hochster_betti
from .core import GroundSet, MixedSpec, make_mixed
from .homology import GF2, RATIONALS, FieldSpec


def _skeleton_boundary(vertices: int, size: int) -> list[list[int]]:
    """Dense boundary matrix from size-`size` faces of a simplex."""
    from itertools import combinations

    lower = {c: i for i, c in enumerate(combinations(range(vertices), size - 1))}
    cols = list(combinations(range(vertices), size))
    mat = [[0] * len(cols) for _ in range(len(lower))]
    for j, face in enumerate(cols):
        for pos in range(size):
            sub = face[:pos] + face[pos + 1 :]
            mat[lower[sub]][j] = 1 if pos % 2 == 0 else -1
    return mat


def _random_sign_matrix(rng: random.Random, nrows: int, ncols: int) -> list[list[int]]:
    return [
        [rng.choice((-1, 0, 0, 1)) for _ in range(ncols)] for _ in range(nrows)
    ]


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _report(label: str, compiled: float | None, pure: float) -> None:
    if compiled is None:
        print(f"{label:<34} compiled: (not built)   pure: {pure * 1e3:9.3f} ms")
        return
    speedup = pure / compiled if compiled > 0 else float("inf")
    print(
        f"{label:<34} compiled: {compiled * 1e3:9.3f} ms   "
        f"pure: {pure * 1e3:9.3f} ms   speedup: {speedup:6.1f}x"
    )


def run(repeat: int = 3) -> None:
    from . import _kernels_py as pure

    try:
        from . import _kernels as compiled
    except ImportError:
        compiled = None

    rng = random.Random(20240901)
    boundary = _skeleton_boundary(12, 5)  # 495 x 792 signed incidence
    small = _skeleton_boundary(9, 4)
    dense = _random_sign_matrix(rng, 120, 140)
    gf2_rows = [
        sum(1 << j for j in range(200) if rng.random() < 0.3) for _ in range(180)
    ]

    print(f"active backend: {kernels.backend_name()}")
    print()
    cases = [
        ("rank_int, simplex boundary 84x126", lambda k: k.rank_int(small)),
        ("rank_int, random sign 120x140", lambda k: k.rank_int(dense)),
        ("rank_mod 32003, boundary 495x792", lambda k: k.rank_mod(boundary, 32003)),
        ("rank_gf2, random 180x200", lambda k: k.rank_gf2(gf2_rows, 200)),
    ]
    for label, fn in cases:
        pure_t = _time(lambda: fn(pure), repeat)
        comp_t = _time(lambda: fn(compiled), repeat) if compiled else None
        _report(label, comp_t, pure_t)

    spec = MixedSpec(GroundSet(5, 4), ((2, 3), (4, 1)))
    ideal = make_mixed(spec)
    for field, tag in ((RATIONALS, "rat"), (GF2, "gf2"), (FieldSpec(32003), "gfp")):
        label = f"oracle table, 9 vertices, {tag}"
        pure_t = comp_t = None
        for backend in kernels.available_backends():
            kernels.use_backend(backend)
            t = _time(lambda: hochster_betti(ideal, field), repeat)
            if backend == "pure":
                pure_t = t
            else:
                comp_t = t
        _report(label, comp_t, pure_t)
    kernels.use_backend(kernels.available_backends()[0])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    run(args.repeat)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
