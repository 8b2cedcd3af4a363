"""Time each brute-force kernel under numba and under the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--arbor ENC]

The first numba call compiles (or loads the on-disk cache); it is reported
separately and excluded from the timed runs.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from arbors import _kernels
from arbors.arbor import parse_arbor
from arbors.polytope import layout
from arbors.poset import build_poset


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def jobs_for(enc: str, dilate: int):
    t = parse_arbor(enc)
    arrays = layout(t).constraint_arrays(dilate)
    P = build_poset(t)
    leq = P.leq
    return {
        f"lattice points (m={dilate})": lambda: _kernels.lattice_points(*arrays),
        "order matrix": lambda: _kernels.leq_matrix(P.points),
        "moebius triangle": lambda: _kernels.mobius_triangle(leq, P.rank),
        "multichains (len 3)": lambda: _kernels.multichain_histogram(leq, P.rank, 3),
        "saturated chains": lambda: _kernels.saturated_chain_counts(leq, P.rank),
    }, len(P)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--arbor", default="(2 (2) (1) (1))")
    ap.add_argument("--dilate", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    jobs, size = jobs_for(args.arbor, args.dilate)
    print(f"arbor {args.arbor}: {size} poset elements, best of {args.repeat}")
    print(f"{'kernel':<26}{'warmup':>10}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    saved = _kernels.numba_enabled()
    try:
        for name, fn in jobs.items():
            _kernels.use_numba(True)
            start = time.perf_counter()
            ref = fn()
            warm = time.perf_counter() - start
            t_nb = _time(fn, args.repeat)
            _kernels.use_numba(False)
            got = fn()
            t_np = _time(fn, args.repeat)
            if name.startswith("lattice"):
                same = {tuple(r) for r in ref.tolist()} == {tuple(r) for r in got.tolist()}
            else:
                same = np.array_equal(ref, got)
            flag = "" if same else "  MISMATCH"
            print(f"{name:<26}{warm:>9.3f}s{t_nb * 1e3:>10.2f}ms{t_np * 1e3:>10.2f}ms{t_np / t_nb:>9.1f}x{flag}")
    finally:
        _kernels.use_numba(saved)


if __name__ == "__main__":
    main()
