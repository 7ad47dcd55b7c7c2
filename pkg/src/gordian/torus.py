"""Torus knots T(p, q) and their closed-form invariants.

A torus knot is stored in canonical form: ``2 <= p <= q`` with
``gcd(p, q) == 1``, or ``T(1, 1)`` for the unknot.  Every other module
takes :class:`TorusKnot` values, so normalization happens exactly once.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

#: Largest parameter accepted by :func:`normalize` unless a caller passes
#: an explicit ``limit``.
DEFAULT_PARAMETER_LIMIT = 10**6

_KNOT_RE = re.compile(r"^\s*T\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


class InvalidKnotError(ValueError):
    """Raised for parameter pairs that do not describe a torus knot."""


@dataclass(frozen=True, order=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self) -> None:
        if (self.p, self.q) != (1, 1):
            if not 2 <= self.p <= self.q or math.gcd(self.p, self.q) != 1:
                raise InvalidKnotError(
                    f"T({self.p},{self.q}) is not canonical; use normalize()")

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"

    def to_json(self) -> list[int]:
        return [self.p, self.q]

    @classmethod
    def from_json(cls, pair: list[int]) -> TorusKnot:
        if len(pair) != 2:
            raise InvalidKnotError(f"expected a pair [p, q], got {pair!r}")
        return normalize(int(pair[0]), int(pair[1]))

    @classmethod
    def parse(cls, text: str) -> TorusKnot:
        """Parse the ``"T(p,q)"`` string form."""
        match = _KNOT_RE.match(text)
        if match is None:
            raise InvalidKnotError(f"cannot parse torus knot from {text!r}")
        return normalize(int(match.group(1)), int(match.group(2)))


UNKNOT = TorusKnot(1, 1)


def normalize(p: int, q: int, limit: int = DEFAULT_PARAMETER_LIMIT) -> TorusKnot:
    """Return the canonical representative of T(p, q).

    T(p, q) and T(q, p) give the same knot, and any pair containing a 1
    is the unknot.

    >>> normalize(7, 3)
    TorusKnot(p=3, q=7)
    >>> normalize(1, 5)
    TorusKnot(p=1, q=1)
    """
    if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
        raise InvalidKnotError(f"parameters must be integers, got {p!r}, {q!r}")
    if p < 1 or q < 1:
        raise InvalidKnotError(f"parameters must be positive, got ({p},{q})")
    if p > limit or q > limit:
        raise InvalidKnotError(f"parameters exceed the limit {limit}: ({p},{q})")
    if math.gcd(p, q) != 1:
        raise InvalidKnotError(f"({p},{q}) is not coprime; T({p},{q}) is a link")
    if p == 1 or q == 1:
        return UNKNOT
    return TorusKnot(min(p, q), max(p, q))


def unknotting_number(knot: TorusKnot) -> int:
    """(p-1)(q-1)/2, which for torus knots is also the slice genus."""
    return (knot.p - 1) * (knot.q - 1) // 2


slice_genus = unknotting_number


def index(knot: TorusKnot) -> int:
    """Minimum of the two parameters; 1 for the unknot."""
    return min(knot.p, knot.q)


def rasmussen_s(knot: TorusKnot) -> int:
    """Rasmussen invariant of a positive torus knot.

    This is the identity s = 2u for torus knots, not a Khovanov homology
    computation.
    """
    return 2 * unknotting_number(knot)


def iter_knots(max_u: int, include_unknot: bool = False):
    """Yield every torus knot with unknotting number at most ``max_u``.

    Knots come out sorted by (p, q).
    """
    if include_unknot:
        yield UNKNOT
    p = 2
    while (p - 1) * (p - 1) // 2 <= max_u and (p - 1) * p // 2 <= max_u:
        q = p + 1
        while (p - 1) * (q - 1) // 2 <= max_u:
            if math.gcd(p, q) == 1:
                yield TorusKnot(p, q)
            q += 1
        p += 1
