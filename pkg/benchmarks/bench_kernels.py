"""Benchmark of the compiled mod-p kernels against the numpy reference.

Both backends are imported directly (ignoring the import-time selection)
so one process can cross-check their outputs and time them side by side.
The default run times the two hot kernels, matmul and rref, on shapes
typical of the engine's workloads; --end-to-end additionally runs a
fixed verification workload in a subprocess per backend.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --end-to-end
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from eigenring import _fpcore_py

try:
    from eigenring import _fpcore_cy
except ImportError:
    _fpcore_cy = None

MATMUL_SHAPES = ((8, 2), (16, 2), (32, 2), (64, 3), (128, 3))
RREF_SHAPES = ((16, 16, 2), (64, 64, 2), (256, 32, 2), (81, 81, 3))

END_TO_END_WORKLOAD = """\
import time
start = time.perf_counter()
from eigenring.backend import BACKEND
from eigenring.corpus import build_ring
from eigenring.suites import run_suite
ring = build_ring("M3(F2)", {"kind": "matrix", "n": 3, "p": 2})
report = run_suite("t8", [ring])
summary = report.summary()
assert summary["fail"] == 0, summary
print(f"{BACKEND} {time.perf_counter() - start:.3f}")
"""


def best_of(fn, repeats=5, inner=10):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(inner):
            fn()
        best = min(best, (time.perf_counter() - t0) / inner)
    return best


def check_agreement(rng):
    """Both backends must produce identical results before being timed."""
    for _ in range(25):
        p = int(rng.choice([2, 3, 5]))
        rows = int(rng.integers(1, 40))
        cols = int(rng.integers(1, 40))
        a = rng.integers(0, p, size=(rows, cols)).astype(np.int64)
        b = rng.integers(0, p, size=(cols, rows)).astype(np.int64)
        prod_py = _fpcore_py.matmul(a, b, p)
        prod_cy = _fpcore_cy.matmul(a, b, p)
        assert np.array_equal(prod_py, prod_cy), "matmul mismatch"
        red_py, piv_py = _fpcore_py.rref(a, p)
        red_cy, piv_cy = _fpcore_cy.rref(a, p)
        assert np.array_equal(red_py, red_cy), "rref mismatch"
        assert list(piv_py) == list(piv_cy), "pivot mismatch"


def bench_kernels():
    if _fpcore_cy is None:
        print("compiled backend not built; nothing to compare")
        return
    rng = np.random.default_rng(0)
    check_agreement(rng)
    print("backends agree on 25 randomized inputs\n")
    header = f"{'kernel':22s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for size, p in MATMUL_SHAPES:
        a = rng.integers(0, p, size=(size, size)).astype(np.int64)
        b = rng.integers(0, p, size=(size, size)).astype(np.int64)
        t_py = best_of(lambda: _fpcore_py.matmul(a, b, p))
        t_cy = best_of(lambda: _fpcore_cy.matmul(a, b, p))
        label = f"matmul {size}x{size} p={p}"
        print(f"{label:22s} {t_py * 1e6:9.1f}u {t_cy * 1e6:9.1f}u "
              f"{t_py / t_cy:7.1f}x")
    for rows, cols, p in RREF_SHAPES:
        a = rng.integers(0, p, size=(rows, cols)).astype(np.int64)
        t_py = best_of(lambda: _fpcore_py.rref(a, p))
        t_cy = best_of(lambda: _fpcore_cy.rref(a, p))
        label = f"rref {rows}x{cols} p={p}"
        print(f"{label:22s} {t_py * 1e6:9.1f}u {t_cy * 1e6:9.1f}u "
              f"{t_py / t_cy:7.1f}x")


def bench_end_to_end():
    print("\nend-to-end: t8 suite over the 3x3 matrix ring corpus entry")
    for backend in ("python", "compiled"):
        if backend == "compiled" and _fpcore_cy is None:
            print("compiled backend not built; skipping")
            continue
        env = dict(os.environ, EIGENRING_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, "-c", END_TO_END_WORKLOAD], env=env,
            capture_output=True, text=True, check=True)
        name, seconds = out.stdout.split()
        print(f"{name:10s} {float(seconds):8.3f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--end-to-end", action="store_true",
                        help="also time a fixed verification workload "
                             "in a fresh process per backend")
    args = parser.parse_args()
    bench_kernels()
    if args.end_to_end:
        bench_end_to_end()


if __name__ == "__main__":
    main()
