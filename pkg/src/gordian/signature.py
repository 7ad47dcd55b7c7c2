"""Levine-Tristram signatures of torus knots by exact counting.

Angles are exact rationals theta in (0, 1), standing for the unit complex
number omega = exp(2 pi i theta).  Signatures use the sign convention in
which positive torus knots have positive signature (sigma(T(2,3)) = +2 at
theta = 1/2).

The signature of T(p, q) at theta is::

    #(S n [theta, theta+1]) - #(S minus (theta, theta+1))

where S = {k/p + l/q : 1 <= k < p, 1 <= l < q}.  The counting itself runs in
:mod:`gordian.kernels`; everything here is exact ``Fraction`` arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from gordian import kernels
from gordian.torus import TorusKnot, unknotting_number

__all__ = [
    "Angle",
    "JumpSet",
    "SignatureProfile",
    "as_angle",
    "parse_angle",
    "jump_set",
    "lt_signature",
    "is_regular",
    "signature_profile",
    "classical_signature",
    "signature_defect",
    "gg_linear_approx",
    "midpoints",
]

HALF = Fraction(1, 2)


class InvalidAngleError(ValueError):
    """Raised for angles outside the open interval (0, 1)."""


Angle = Fraction


def as_angle(value: Fraction | int | str) -> Fraction:
    """Coerce to an exact angle strictly inside (0, 1).

    Floats are refused: signatures are decided at exact rationals only.
    """
    if isinstance(value, str):
        return parse_angle(value)
    if isinstance(value, float):
        raise InvalidAngleError(f"angles must be exact rationals, got float {value!r}")
    theta = Fraction(value)
    if not 0 < theta < 1:
        raise InvalidAngleError(f"angle {theta} is not in the open interval (0, 1)")
    return theta


def parse_angle(text: str) -> Fraction:
    """Parse a reduced fraction string such as ``"1/2"``."""
    parts = text.strip().split("/")
    if len(parts) != 2 or not all(part.strip().lstrip("-").isdigit() for part in parts):
        raise InvalidAngleError(f"angle must be written as 'a/b', got {text!r}")
    num, den = int(parts[0]), int(parts[1])
    if den <= 0:
        raise InvalidAngleError(f"angle denominator must be positive, got {text!r}")
    if math.gcd(num, den) != 1:
        raise InvalidAngleError(f"angle {text!r} is not a reduced fraction")
    return as_angle(Fraction(num, den))


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class JumpSet:
    knot: TorusKnot
    elements: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self._members

    @property
    def _members(self) -> frozenset[Fraction]:
        return frozenset(self.elements)

    def residues(self) -> tuple[Fraction, ...]:
        """Sorted distinct values of s mod 1."""
        return tuple(sorted({s - math.floor(s) for s in self.elements}))


@dataclass(frozen=True)
class SignatureProfile:
    """Piecewise-constant signature function on (0, 1).

    ``values[i]`` is the signature on the open interval between
    ``breakpoints[i-1]`` and ``breakpoints[i]`` (with 0 and 1 closing the
    ends), so there is one more value than breakpoints.
    """

    knot: TorusKnot
    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def intervals(self) -> list[tuple[Fraction, Fraction, int]]:
        edges = (Fraction(0), *self.breakpoints, Fraction(1))
        return [(edges[i], edges[i + 1], self.values[i]) for i in range(len(self.values))]

    def value_at(self, theta: Fraction) -> int:
        """Signature at a regular angle; raises at a breakpoint."""
        theta = as_angle(theta)
        for lo, hi, value in self.intervals():
            if lo < theta < hi:
                return value
        raise InvalidAngleError(f"{theta} is a breakpoint of {self.knot}")

    def to_json(self) -> dict:
        return {
            "knot": self.knot.to_json(),
            "breakpoints": [format_fraction(b) for b in self.breakpoints],
            "values": list(self.values),
        }

    @classmethod
    def from_json(cls, payload: dict) -> SignatureProfile:
        return cls(
            knot=TorusKnot.from_json(payload["knot"]),
            breakpoints=tuple(Fraction(b) for b in payload["breakpoints"]),
            values=tuple(int(v) for v in payload["values"]),
        )


def _numerators(knot: TorusKnot) -> list[int]:
    p, q = knot.p, knot.q
    return [k * q + l * p for k in range(1, p) for l in range(1, q)]


def jump_set(knot: TorusKnot) -> JumpSet:
    """All k/p + l/q with 1 <= k < p, 1 <= l < q, sorted.  Empty for the unknot."""
    if knot.is_unknot:
        return JumpSet(knot, ())
    n = knot.p * knot.q
    return JumpSet(knot, tuple(Fraction(j, n) for j in sorted(_numerators(knot))))


def lt_signature(knot: TorusKnot, theta: Fraction) -> int:
    """Levine-Tristram signature at omega = exp(2 pi i theta).

    Defined for every theta in (0, 1), regular or not; see
    :func:`is_regular` for where the value is locally constant.
    """
    theta = as_angle(theta)
    if knot.is_unknot:
        return 0
    return kernels.signature_count(knot.p, knot.q, theta.numerator, theta.denominator)


def lt_signatures(knot: TorusKnot, thetas: list[Fraction]) -> list[int]:
    """Vectorized :func:`lt_signature`."""
    thetas = [as_angle(t) for t in thetas]
    if knot.is_unknot:
        return [0] * len(thetas)
    return kernels.signature_counts(
        knot.p, knot.q, [t.numerator for t in thetas], [t.denominator for t in thetas])


@lru_cache(maxsize=4096)
def _breakpoints(knot: TorusKnot) -> tuple[Fraction, ...]:
    if knot.is_unknot:
        return ()
    n = knot.p * knot.q
    return tuple(Fraction(j, n) for j in sorted({j % n for j in _numerators(knot)}))


def is_regular(knot: TorusKnot, theta: Fraction) -> bool:
    """True iff theta is not a jump of the signature function of ``knot``.

    Equivalently exp(2 pi i theta) is not a root of the Alexander polynomial.
    """
    theta = as_angle(theta)
    return theta not in _breakpoint_set(knot)


@lru_cache(maxsize=4096)
def _breakpoint_set(knot: TorusKnot) -> frozenset[Fraction]:
    return frozenset(_breakpoints(knot))


def midpoints(breakpoints: tuple[Fraction, ...] | list[Fraction]) -> list[Fraction]:
    """Midpoints of the open intervals cut out of (0, 1) by ``breakpoints``."""
    edges = [Fraction(0), *sorted(set(breakpoints)), Fraction(1)]
    return [(edges[i] + edges[i + 1]) / 2 for i in range(len(edges) - 1)]


@lru_cache(maxsize=4096)
def signature_profile(knot: TorusKnot) -> SignatureProfile:
    breakpoints = _breakpoints(knot)
    values = tuple(lt_signatures(knot, midpoints(breakpoints)))
    return SignatureProfile(knot, breakpoints, values)


def classical_signature(knot: TorusKnot) -> int:
    """Signature at omega = -1."""
    return lt_signature(knot, HALF)


def signature_defect(knot: TorusKnot) -> int:
    """u(T) - sigma_{-1}(T)/2; zero only for T(2, n), T(3, 4) and T(3, 5)."""
    return unknotting_number(knot) - classical_signature(knot) // 2


def gg_linear_approx(b: int, m: int, theta: Fraction) -> Fraction:
    """Piecewise-linear approximation of sigma_theta(T(b, m)).

    ``m * (2 (b - (2l - 1)) theta + 2 l (l - 1) / b)`` where l is the integer
    with (l - 1)/b < theta <= l/b.  The approximation error is at most 2b.
    """
    if b < 2:
        raise ValueError(f"b must be at least 2, got {b}")
    if math.gcd(b, m) != 1:
        raise ValueError(f"b={b} and m={m} are not coprime")
    theta = as_angle(theta)
    l = math.ceil(b * theta)
    return m * (2 * (b - (2 * l - 1)) * theta + Fraction(2 * l * (l - 1), b))


def linear_form(b: int, theta: Fraction) -> Fraction:
    """Per-unit slope of :func:`gg_linear_approx`, i.e. the value for m = 1."""
    theta = as_angle(theta)
    l = math.ceil(b * theta)
    return 2 * (b - (2 * l - 1)) * theta + Fraction(2 * l * (l - 1), b)
