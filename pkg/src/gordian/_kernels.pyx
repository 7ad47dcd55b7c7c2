# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled signature counting kernel (see ``_kernels_py`` for the algorithm)."""


cdef inline long long _floordiv(long long x, long long y) nogil:
    # y > 0 at every call site
    cdef long long r = x / y
    if x % y != 0 and x < 0:
        r -= 1
    return r


cdef long long _count(long long p, long long q, long long a, long long b) nogil:
    cdef long long n = p * q
    cdef long long lo = a * n
    cdef long long hi = (a + b) * n
    cdef long long step = b * p
    cdef long long total = 0
    cdef long long k, base, first, last, inside, below, above_from, above
    for k in range(1, p):
        base = b * k * q
        first = -_floordiv(base - lo, step)
        if first < 1:
            first = 1
        last = _floordiv(hi - base, step)
        if last > q - 1:
            last = q - 1
        inside = last - first + 1 if last >= first else 0
        below = _floordiv(lo - base, step)
        if below > q - 1:
            below = q - 1
        if below < 0:
            below = 0
        above_from = -_floordiv(base - hi, step)
        if above_from < 1:
            above_from = 1
        above = q - above_from
        if above < 0:
            above = 0
        total += inside - below - above
    return total


def signature_count(long long p, long long q, long long a, long long b):
    return _count(p, q, a, b)


def signature_counts(long long p, long long q, nums, dens):
    cdef Py_ssize_t i, size = len(nums)
    out = [0] * size
    for i in range(size):
        out[i] = _count(p, q, nums[i], dens[i])
    return out
