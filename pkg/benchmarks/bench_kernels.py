"""Time each kernel in its numba and NumPy flavours.

    python3 benchmarks/bench_kernels.py [--repeat N]

The first numba call per kernel (compilation or cache load) is excluded.
"""

import argparse
import time

import numpy as np

from edgecert import _kernels
from edgecert.constructions import build_H1
from edgecert.multigraph import build
from edgecert.numerics import JACOBI_MAX_SWEEPS, JACOBI_REL_TOL


def _cases():
    rng = np.random.default_rng(0)
    x = rng.normal(size=(8, 8))
    sym = x + x.T
    h1 = np.ascontiguousarray(build_H1(9).mult)
    m = np.triu(rng.integers(1, 4, (14, 14)), 1)
    dense14 = (m + m.T).astype(np.int64)
    cube = build(8, [(u, u ^ b, 1) for u in range(8) for b in (1, 2, 4) if u < u ^ b])
    return {
        "jacobi 8x8": ("jacobi", (sym, JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)),
        "stoer_wagner H1(9)": ("stoer_wagner", (h1,)),
        "stoer_wagner dense 14": ("stoer_wagner", (dense14,)),
        "brute_min_cut dense 14": ("brute_min_cut", (dense14,)),
        "canonical H1(9)": ("canonical", (h1,)),
        "canonical cube": ("canonical", (np.ascontiguousarray(cube.mult),)),
    }


def _best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    tables = {name: _kernels.flavour(name) for name in ("jit", "numpy")}
    print(f"{'case':<26}{'numba (ms)':>12}{'numpy (ms)':>12}{'speedup':>10}")
    for label, (kernel, kargs) in _cases().items():
        tables["jit"][kernel](*kargs)  # compile / load cache
        t_jit = _best_of(tables["jit"][kernel], kargs, args.repeat)
        t_np = _best_of(tables["numpy"][kernel], kargs, args.repeat)
        print(f"{label:<26}{t_jit * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_jit:>9.1f}x")


if __name__ == "__main__":
    main()
