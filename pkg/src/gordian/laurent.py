"""Integer Laurent polynomials and exact determinants.

Only what the Seifert and Burau computations need: ring arithmetic,
exact division, normalization up to units +-t^k, and determinants of
polynomial matrices by evaluation and interpolation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _trim(offset: int, coeffs: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return offset + lo, tuple(int(c) for c in coeffs[lo:hi])


@dataclass(frozen=True, init=False)
class LaurentPolynomial:
    """sum(coeffs[i] * t**(offset + i)), kept trimmed of zero ends."""

    offset: int
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = (), offset: int = 0) -> None:
        offset, coeffs = _trim(offset, coeffs)
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> LaurentPolynomial:
        return cls((c,), exponent)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def min_exponent(self) -> int:
        return self.offset

    @property
    def max_exponent(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def __add__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        other = _coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.max_exponent, other.max_exponent)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.offset - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset - lo + i] += c
        return LaurentPolynomial(out, lo)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial([-c for c in self.coeffs], self.offset)

    def __sub__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return LaurentPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPolynomial(out, self.offset + other.offset)

    __rmul__ = __mul__

    def __call__(self, x):
        total = 0
        for i, c in enumerate(self.coeffs):
            total += c * x ** (self.offset + i)
        return total

    def shift(self, k: int) -> LaurentPolynomial:
        return LaurentPolynomial(self.coeffs, self.offset + k)

    def normalized(self) -> LaurentPolynomial:
        """Representative up to units: lowest exponent 0, positive leading coefficient."""
        if self.is_zero():
            return self
        sign = -1 if self.coeffs[-1] < 0 else 1
        return LaurentPolynomial([sign * c for c in self.coeffs], 0)

    def divmod_exact(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        """Exact quotient; raises ``ArithmeticError`` if ``divisor`` does not divide."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        dc = divisor.coeffs
        lead = dc[-1]
        quot = [Fraction(0)] * max(0, len(rem) - len(dc) + 1)
        for i in range(len(quot) - 1, -1, -1):
            factor = rem[i + len(dc) - 1] / lead
            quot[i] = factor
            if factor:
                for j, c in enumerate(dc):
                    rem[i + j] -= factor * c
        if any(rem) or any(q.denominator != 1 for q in quot):
            raise ArithmeticError(f"{divisor} does not divide {self} over the integers")
        return LaurentPolynomial([int(q) for q in quot], self.offset - divisor.offset)

    def to_json(self) -> dict:
        return {"offset": self.offset, "coefficients": list(self.coeffs)}

    @classmethod
    def from_json(cls, payload: dict) -> LaurentPolynomial:
        return cls(payload["coefficients"], payload["offset"])

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            e = self.offset + i
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value: LaurentPolynomial | int) -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    return LaurentPolynomial.constant(int(value))


T = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def poly_det(matrix: Sequence[Sequence[LaurentPolynomial]]) -> LaurentPolynomial:
    """Determinant of a square matrix of Laurent polynomials."""
    n = len(matrix)
    if n == 0:
        return ONE
    entries = [[_coerce(x) for x in row] for row in matrix]
    shift = max(0, -min((e.offset for row in entries for e in row if not e.is_zero()), default=0))
    entries = [[e.shift(shift) for e in row] for row in entries]
    bound = sum(max((e.max_exponent for e in row if not e.is_zero()), default=0) for row in entries)
    xs = list(range(bound + 1))
    ys = [Fraction(int_det([[e(x) for e in row] for row in entries])) for x in xs]
    coeffs = _interpolate(xs, ys)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("non-integral interpolation; degree bound violated")
    return LaurentPolynomial([int(c) for c in coeffs], -shift * n)


def _interpolate(xs: list[int], ys: list[Fraction]) -> list[Fraction]:
    # Newton divided differences, then expand to monomial coefficients.
    n = len(xs)
    table = list(ys)
    newton = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        newton.append(table[0])
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]
    for i in range(n):
        for j, b in enumerate(basis):
            coeffs[j] += newton[i] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for j, b in enumerate(basis):
            nxt[j + 1] += b
            nxt[j] -= xs[i] * b
        basis = nxt
    return coeffs
