"""Compare the compiled and pure-Python signature kernels.

Run with ``python3 benchmarks/bench_kernels.py``.  Each case evaluates the
counting formula at every profile midpoint of a torus knot and reports the
best of several repeats.
"""
from __future__ import annotations

import argparse
import timeit

from gordian import _kernels_py
from gordian.signature import midpoints, signature_profile
from gordian.torus import normalize

try:
    from gordian import _kernels as _compiled
except ImportError:
    _compiled = None

CASES = [(3, 7), (5, 12), (7, 30), (11, 40)]


def _workload(p: int, q: int) -> tuple[list[int], list[int]]:
    thetas = midpoints(signature_profile(normalize(p, q)).breakpoints)
    return [t.numerator for t in thetas], [t.denominator for t in thetas]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _compiled is None:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'knot':>10} {'angles':>7} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for p, q in CASES:
        nums, dens = _workload(p, q)
        py = min(timeit.repeat(lambda: _kernels_py.signature_counts(p, q, nums, dens),
                               number=1, repeat=args.repeat))
        if _compiled is not None:
            assert _compiled.signature_counts(p, q, nums, dens) == _kernels_py.signature_counts(p, q, nums, dens)
            cy = min(timeit.repeat(lambda: _compiled.signature_counts(p, q, nums, dens),
                                   number=1, repeat=args.repeat))
            print(f"{f'T({p},{q})':>10} {len(nums):>7} {py * 1e3:>12.2f} {cy * 1e3:>12.2f} {py / cy:>7.1f}x")
        else:
            print(f"{f'T({p},{q})':>10} {len(nums):>7} {py * 1e3:>12.2f} {'-':>12} {'-':>8}")


if __name__ == "__main__":
    main()
