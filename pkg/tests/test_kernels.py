from __future__ import annotations

import math
import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gordian import _kernels_py, kernels
from gordian.signature import lt_signature
from gordian.torus import normalize

try:
    from gordian import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")

pairs = st.tuples(st.integers(2, 60), st.integers(3, 400)).filter(lambda t: t[0] < t[1] and math.gcd(*t) == 1)
angles = st.fractions(min_value=0, max_value=1, max_denominator=10**6).filter(lambda t: 0 < t < 1)


@needs_compiled
@settings(max_examples=300, deadline=None)
@given(pairs, angles)
def test_compiled_matches_python(pq, theta):
    p, q = pq
    a, b = theta.numerator, theta.denominator
    assert compiled.signature_count(p, q, a, b) == _kernels_py.signature_count(p, q, a, b)


@needs_compiled
@settings(max_examples=50, deadline=None)
@given(pairs, st.lists(angles, max_size=10))
def test_vectorized_parity(pq, thetas):
    p, q = pq
    nums = [t.numerator for t in thetas]
    dens = [t.denominator for t in thetas]
    assert compiled.signature_counts(p, q, nums, dens) == _kernels_py.signature_counts(p, q, nums, dens)


@needs_compiled
def test_backend_reports_compiled():
    forced = os.environ.get("GORDIAN_PURE_PYTHON", "") in ("1", "true", "yes")
    assert kernels.BACKEND == ("python" if forced else "cython")


def test_pure_python_switch():
    code = "from gordian import BACKEND, lt_signature, normalize; print(BACKEND, lt_signature(normalize(3, 7), \"1/2\"))"
    env = dict(os.environ, GORDIAN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "8"]


def test_large_input_takes_exact_path():
    knot = normalize(3, 999998)
    assert not kernels._fits(knot.p, knot.q, 2**40)
    assert lt_signature(knot, Fraction(1, 2**40)) == 0
    theta = Fraction(2**40 + 1, 2**41)
    value = lt_signature(knot, theta)
    assert value == lt_signature(knot, 1 - theta)
    assert value % 2 == 0
    assert abs(value - lt_signature(knot, Fraction(1, 2))) <= 2
