"""Seifert matrices of braid closures and the signatures they induce.

This module is an independent check on :mod:`gordian.signature`.  It builds a
Seifert surface for the closure of any braid word (one disk per strand and
one twisted band per crossing), reads off the linking matrix of a basis of
its first homology, and evaluates Levine-Tristram signatures as eigenvalue
counts of ``(1 - w) A + (1 - conj(w)) A^T``.

Basis: for each generator ``i``, every pair of consecutive crossings of
``sigma_i`` (in word order) spans one loop through the two bands.

Sign convention: the matrix orientation is pinned by requiring the
trefoil ``sigma_1^3`` to have signature +2 at theta = 1/2, and signatures
count negative eigenvalues minus positive ones.  Floating point is used for
general angles; nothing in :mod:`gordian.adjacency` depends on it.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from gordian.braid import BraidWord, torus_word
from gordian.laurent import ONE, LaurentPolynomial, T, int_det, poly_det
from gordian.signature import as_angle
from gordian.torus import TorusKnot

ZERO_TOL = 1e-9
AMBIGUOUS_TOL = 1e-6

_BASIS_NOTE = (
    "braid-closure surface: one disk per strand, one band per crossing; "
    "loops run between consecutive crossings of the same generator, "
    "ordered by generator then position")


class LinkClosureError(ValueError):
    """Raised when a braid word closes up to a link with several components."""


class NonregularAngleError(ArithmeticError):
    """An eigenvalue is too close to zero to classify; retry at a regular angle."""


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]
    basis_note: str = _BASIS_NOTE

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("a Seifert matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.dimension, self.dimension)

    def transpose(self) -> SeifertMatrix:
        n = self.dimension
        return SeifertMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)),
                             self.basis_note)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    @classmethod
    def from_json(cls, rows: list[list[int]]) -> SeifertMatrix:
        return cls(tuple(tuple(row) for row in rows))


def torus_braid(knot: TorusKnot) -> BraidWord:
    """Positive braid (sigma_1 ... sigma_{p-1})^q on p strands; empty on one strand for the unknot."""
    if knot.is_unknot:
        return BraidWord(1, ())
    return torus_word(knot.p, knot.q)


def twist_knot_seifert_matrix(k: int) -> SeifertMatrix:
    """The 2x2 matrix [[-k, 1], [0, -1]] of the positive twist knot with 2k-1 half-twists."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return SeifertMatrix(((-k, 1), (0, -1)))


def _raw_matrix(w: BraidWord) -> list[list[int]]:
    signs = [1 if x > 0 else -1 for x in w.letters]
    columns: dict[int, list[int]] = {}
    for pos, x in enumerate(w.letters):
        columns.setdefault(abs(x), []).append(pos)
    loops = [(i, a, b) for i in sorted(columns) for a, b in zip(columns[i], columns[i][1:])]
    n = len(loops)
    v = [[0] * n for _ in range(n)]
    for r, (i, a, b) in enumerate(loops):
        v[r][r] = -(signs[a] + signs[b]) // 2
        for c, (j, a2, b2) in enumerate(loops):
            if j == i and a2 == b:
                # consecutive loops share the band at b
                if signs[b] > 0:
                    v[r][c] = 1
                else:
                    v[c][r] = -1
            elif j == i + 1:
                if a < a2 < b < b2:
                    v[r][c] = 1
                elif a2 < a < b2 < b:
                    v[r][c] = -1
    return v


@lru_cache(maxsize=None)
def _orientation() -> int:
    # +1 if the raw construction already gives the trefoil signature +2 at 1/2.
    trefoil = _raw_matrix(BraidWord(2, (1, 1, 1)))
    sym = [[2 * (trefoil[i][j] + trefoil[j][i]) for j in range(2)] for i in range(2)]
    return 1 if _exact_signature(sym) == 2 else -1


def seifert_matrix(w: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the closure of ``w``, which must be a knot.

    The dimension is ``len(w) - strands + 1``.
    """
    if not w.closes_to_knot():
        raise LinkClosureError(
            f"closure of {w} has {w.closure_components()} components, expected a knot")
    raw = _raw_matrix(w)
    sign = _orientation()
    return SeifertMatrix(tuple(tuple(sign * x for x in row) for row in raw))


def hermitian_form(a: SeifertMatrix, theta: Fraction) -> np.ndarray:
    """``(1 - w) A + (1 - conj(w)) A^T`` with ``w = exp(2 pi i theta)``.

    At theta = 1/2 the result is the integer matrix ``2 (A + A^T)``; every other
    angle gives a complex array.
    """
    theta = as_angle(theta)
    arr = a.as_array()
    if theta == Fraction(1, 2):
        return 2 * (arr + arr.T)
    w = cmath.exp(2j * math.pi * float(theta))
    return (1 - w) * arr.astype(complex) + (1 - w.conjugate()) * arr.T.astype(complex)


def signature_of_form(h: np.ndarray | Sequence[Sequence]) -> int:
    """Number of negative eigenvalues minus number of positive eigenvalues.

    Integer matrices are handled exactly by rational congruence
    diagonalization.  Anything else goes through floating point; eigenvalues
    below ``1e-9`` times the max-norm count as zero, and one in the band up
    to ``1e-6`` times the max-norm raises :class:`NonregularAngleError`.
    """
    arr = np.asarray(h)
    if arr.size == 0:
        return 0
    if arr.dtype.kind in "iu" or (arr.dtype == object and all(isinstance(x, int) for x in arr.flat)):
        return _exact_signature(arr.tolist())
    return signature_of_form_float(arr)


def signature_of_form_float(h: np.ndarray) -> int:
    arr = np.asarray(h, dtype=complex)
    if arr.size == 0:
        return 0
    x, y = arr.real, arr.imag
    doubled = np.block([[x, -y], [y, x]])
    norm = float(np.abs(arr).max())
    if norm == 0.0:
        return 0
    eig = np.linalg.eigvalsh(doubled)
    mags = np.abs(eig)
    if np.any((mags >= ZERO_TOL * norm) & (mags < AMBIGUOUS_TOL * norm)):
        raise NonregularAngleError("eigenvalue in the ambiguous band; the angle looks nonregular")
    live = eig[mags >= ZERO_TOL * norm]
    doubled_sig = int(np.sum(live < 0)) - int(np.sum(live > 0))
    return doubled_sig // 2


def _exact_signature(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
        raise ValueError("exact signature needs a symmetric matrix")
    neg = pos = 0
    k = 0
    while k < n:
        pivot = next((i for i in range(k, n) if m[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j makes the (i, i) entry 2 m[i][j] != 0
            for c in range(n):
                m[i][c] += m[j][c]
            for r in range(n):
                m[r][i] += m[r][j]
            pivot = i
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            for row in m:
                row[k], row[pivot] = row[pivot], row[k]
        d = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / d
            if f:
                for c in range(k, n):
                    m[i][c] -= f * m[k][c]
        for i in range(k + 1, n):
            m[k][i] = Fraction(0)
            m[i][k] = Fraction(0)
        if d < 0:
            neg += 1
        else:
            pos += 1
        k += 1
    return neg - pos


def alexander_polynomial(a: SeifertMatrix) -> LaurentPolynomial:
    """det(A - t A^T), normalized to lowest exponent 0 and positive leading coefficient."""
    n = a.dimension
    if n == 0:
        return ONE
    rows = [[LaurentPolynomial.constant(a.entries[i][j]) - T * a.entries[j][i] for j in range(n)]
            for i in range(n)]
    return poly_det(rows).normalized()


def unimodularity(a: SeifertMatrix) -> int:
    """det(A - A^T); equals 1 for a Seifert matrix of a knot."""
    n = a.dimension
    return int_det([[a.entries[i][j] - a.entries[j][i] for j in range(n)] for i in range(n)])


def torus_alexander_polynomial(knot: TorusKnot) -> LaurentPolynomial:
    """Closed form (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))."""
    if knot.is_unknot:
        return ONE
    p, q = knot.p, knot.q
    num = (LaurentPolynomial.monomial(p * q) - ONE) * (T - ONE)
    den = (LaurentPolynomial.monomial(p) - ONE) * (LaurentPolynomial.monomial(q) - ONE)
    return num.divmod_exact(den).normalized()


@lru_cache(maxsize=256)
def torus_seifert_matrix(knot: TorusKnot) -> SeifertMatrix:
    return seifert_matrix(torus_braid(knot))


def oracle_signature(w: BraidWord, theta: Fraction) -> int:
    """Signature of the closure of ``w`` at theta through the Seifert form."""
    return signature_of_form(hermitian_form(seifert_matrix(w), theta))
