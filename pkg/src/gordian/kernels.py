"""Backend selection for the signature counting kernel.

The compiled extension ``gordian._kernels`` is used when it was built;
otherwise, or when ``GORDIAN_PURE_PYTHON=1`` is set, the pure-Python
module ``gordian._kernels_py`` is used.  Inputs whose intermediate
products could overflow 63-bit integers always take the Python path.
"""
from __future__ import annotations

import os

from gordian import _kernels_py

_compiled = None
if os.environ.get("GORDIAN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from gordian import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_SAFE = 2**61


def _fits(p: int, q: int, b: int) -> bool:
    return 4 * b * p * q < _SAFE


def signature_count(p: int, q: int, a: int, b: int) -> int:
    """Counting-formula signature of T(p, q) at theta = a/b (p <= q)."""
    if _compiled is not None and _fits(p, q, b):
        return _compiled.signature_count(p, q, a, b)
    return _kernels_py.signature_count(p, q, a, b)


def signature_counts(p: int, q: int, nums: list[int], dens: list[int]) -> list[int]:
    if _compiled is not None and all(_fits(p, q, b) for b in dens):
        return _compiled.signature_counts(p, q, nums, dens)
    return _kernels_py.signature_counts(p, q, nums, dens)
