"""Pure-Python signature counting kernel.

Mirror of ``_kernels.pyx``; used whenever the compiled extension is not
available.  Both modules must return identical results.

The jump set of T(p, q) is written over the common denominator N = pq as
the integers j = k q + l p (1 <= k < p, 1 <= l < q).  For theta = a/b the
signature is::

    #{j : aN <= b j <= (a+b)N} - #{j : b j <= aN or b j >= (a+b)N}

For a fixed k the admissible l form an interval, so each row costs O(1).
"""
from __future__ import annotations


def signature_count(p: int, q: int, a: int, b: int) -> int:
    n = p * q
    lo = a * n
    hi = (a + b) * n
    step = b * p
    total = 0
    for k in range(1, p):
        base = b * k * q
        first = max(1, -((base - lo) // step))
        last = min(q - 1, (hi - base) // step)
        inside = last - first + 1 if last >= first else 0
        below = max(0, min(q - 1, (lo - base) // step))
        above_from = max(1, -((base - hi) // step))
        above = max(0, q - above_from)
        total += inside - below - above
    return total


def signature_counts(p: int, q: int, nums: list[int], dens: list[int]) -> list[int]:
    return [signature_count(p, q, a, b) for a, b in zip(nums, dens)]
