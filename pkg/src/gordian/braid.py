"""Braid words, the Garside left normal form, and the reduced Burau matrix.

A letter is a signed integer: ``+i`` is sigma_i and ``-i`` its inverse, for
1 <= i < strands.

Simple braids (positive braids in which two strands cross at most once)
are stored as permutations ``f`` of ``range(n)``, where ``f[j]`` is the
final position of the strand that starts at position ``j``.  The left
normal form of a braid is ``Delta**k * A_1 ... A_r`` with every ``A_i``
simple, none equal to Delta or the identity, and every adjacent pair
left-weighted.  Two words represent the same braid iff their normal
forms are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from gordian.laurent import ONE, ZERO, LaurentPolynomial

Perm = tuple[int, ...]


class BraidWordError(ValueError):
    """Raised for malformed braid words."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.strands, int) or self.strands < 1:
            raise BraidWordError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidWordError(f"letter {x} is out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise BraidWordError("cannot multiply braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def permutation(self) -> Perm:
        """Final position of each strand after the whole word."""
        pos = list(range(self.strands))
        at = list(range(self.strands))  # at[position] = strand
        for x in self.letters:
            i = abs(x)
            a, b = at[i - 1], at[i]
            at[i - 1], at[i] = b, a
            pos[a], pos[b] = i, i - 1
        return tuple(pos)

    def closure_components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for start in range(self.strands):
            if not seen[start]:
                count += 1
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return count

    def closes_to_knot(self) -> bool:
        return self.closure_components() == 1

    def rotated(self, amount: int) -> BraidWord:
        """Cyclic left rotation (a conjugate of the braid)."""
        if not self.letters:
            return self
        amount %= len(self.letters)
        return BraidWord(self.strands, self.letters[amount:] + self.letters[:amount])

    def to_json(self) -> list[int]:
        return list(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return f"e (B{self.strands})"
        return " ".join(f"s{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


def word(strands: int, letters: Iterable[int]) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def torus_word(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})**q on p strands."""
    return BraidWord(p, tuple(range(1, p)) * q)


# -- simple braids as permutations -------------------------------------------

def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(n - 1 - j for j in range(n))


def _transposition(n: int, i: int) -> Perm:
    f = list(range(n))
    f[i - 1], f[i] = i, i - 1
    return tuple(f)


def _inverse(f: Perm) -> Perm:
    g = [0] * len(f)
    for j, v in enumerate(f):
        g[v] = j
    return tuple(g)


def _tau(f: Perm) -> Perm:
    # Delta f Delta^-1 : conjugation by the half twist.
    n = len(f)
    return tuple(n - 1 - f[n - 1 - j] for j in range(n))


def _starts_with(f: Perm, i: int) -> bool:
    return f[i - 1] > f[i]


def _can_append(f: Perm, i: int) -> bool:
    # f * sigma_i is still simple iff the strands ending at i-1, i have not crossed.
    g = _inverse(f)
    return g[i - 1] < g[i]


def _append(f: Perm, i: int) -> Perm:
    n = len(f)
    t = _transposition(n, i)
    return tuple(t[v] for v in f)


def _strip_front(f: Perm, i: int) -> Perm:
    # sigma_i^-1 * f for sigma_i a left divisor of f
    t = _transposition(len(f), i)
    return tuple(f[t[j]] for j in range(len(f)))


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    n = len(a)
    moved = True
    while moved:
        moved = False
        for i in range(1, n):
            if _starts_with(b, i) and _can_append(a, i):
                a = _append(a, i)
                b = _strip_front(b, i)
                moved = True
                break
    return a, b


@lru_cache(maxsize=None)
def _complement_of_generator(n: int, i: int) -> Perm:
    # Y with Y * sigma_i = Delta, so sigma_i^-1 = Delta^-1 * Y
    t = _transposition(n, i)
    d = _delta(n)
    return tuple(t[d[j]] for j in range(n))


def perm_to_word(f: Perm) -> tuple[int, ...]:
    """A positive word for the simple braid ``f`` (bubble order)."""
    letters: list[int] = []
    current = _identity(len(f))
    target = f
    while current != target:
        for i in range(1, len(f)):
            if _starts_with(_remaining(current, target), i):
                letters.append(i)
                current = _append(current, i)
                break
    return tuple(letters)


def _remaining(current: Perm, target: Perm) -> Perm:
    # current^-1 * target for simple braids with current a prefix of target
    g = _inverse(current)
    return tuple(target[g[j]] for j in range(len(target)))


@dataclass(frozen=True)
class GarsideForm:
    strands: int
    delta_power: int
    factors: tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def to_word(self) -> BraidWord:
        n = self.strands
        delta_word = tuple(perm_to_word(_delta(n)))
        if self.delta_power >= 0:
            head = delta_word * self.delta_power
        else:
            head = tuple(-x for x in reversed(delta_word)) * (-self.delta_power)
        body = tuple(x for f in self.factors for x in perm_to_word(f))
        return BraidWord(n, head + body)


def garside_normal_form(w: BraidWord) -> GarsideForm:
    """Left normal form Delta**k A_1 ... A_r of the braid represented by ``w``."""
    n = w.strands
    if n == 1:
        return GarsideForm(1, 0, ())
    delta = _delta(n)
    ident = _identity(n)
    power = 0
    factors: list[Perm] = []
    for x in w.letters:
        if x > 0:
            factors.append(_transposition(n, x))
        else:
            factors = [_tau(f) for f in factors]
            power -= 1
            factors.append(_complement_of_generator(n, -x))
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b = _left_weight(factors[j], factors[j + 1])
            if a != factors[j] or b != factors[j + 1]:
                factors[j], factors[j + 1] = a, b
                changed = True
    start = 0
    while start < len(factors) and factors[start] == delta:
        start += 1
    end = len(factors)
    while end > start and factors[end - 1] == ident:
        end -= 1
    return GarsideForm(n, power + start, tuple(factors[start:end]))


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    return u.strands == v.strands and garside_normal_form(u) == garside_normal_form(v)


# -- reduced Burau representation ----------------------------------------------

def _burau_generator(n: int, i: int, inverse: bool) -> list[list[LaurentPolynomial]]:
    size = n - 1
    m = [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]
    t = LaurentPolynomial.monomial(1)
    ti = LaurentPolynomial.monomial(-1)
    r = i - 1
    if inverse:
        m[r][r] = -ti
        if r > 0:
            m[r][r - 1] = ONE
        if r < size - 1:
            m[r][r + 1] = ti
    else:
        m[r][r] = -t
        if r > 0:
            m[r][r - 1] = t
        if r < size - 1:
            m[r][r + 1] = ONE
    return m


def _matmul(a, b):
    size = len(a)
    return [[sum((a[r][k] * b[k][c] for k in range(size)), ZERO) for c in range(size)]
            for r in range(size)]


def burau_matrix(w: BraidWord) -> list[list[LaurentPolynomial]]:
    """Reduced Burau matrix, an (n-1) x (n-1) matrix over Z[t, 1/t].

    Faithful on B_3, so it doubles as an independent equality test there.
    """
    n = w.strands
    size = n - 1
    result = [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]
    for x in w.letters:
        result = _matmul(result, _burau_generator(n, abs(x), x < 0))
    return result


def positive_word_path(u: Sequence[int], v: Sequence[int]) -> list[tuple[str, int]]:
    """Rewrite moves turning the positive word ``u`` into the positive word ``v``.

    Both words must represent the same element of the positive braid
    monoid.  Returns a list of ``("relation", pos)`` and ``("commute", pos)``
    moves; ``relation`` replaces ``x y x`` at ``pos`` with ``y x y``.
    """
    moves: list[tuple[str, int]] = []
    current = list(u)
    _rewrite_to(current, list(v), 0, moves)
    if current != list(v):
        raise BraidWordError("positive words are not equal in the braid monoid")
    return moves


def _apply_move(current: list[int], move: tuple[str, int]) -> None:
    kind, pos = move
    if kind == "commute":
        current[pos], current[pos + 1] = current[pos + 1], current[pos]
    else:
        x, y = current[pos], current[pos + 1]
        current[pos:pos + 3] = [y, x, y]


def _rewrite_to(current: list[int], target: list[int], start: int, moves: list) -> None:
    for offset, letter in enumerate(target):
        _bring_to_front(current, letter, start + offset, moves)


def _bring_to_front(current: list[int], letter: int, pos: int, moves: list) -> None:
    # Make current[pos] == letter using only positive moves on current[pos:].
    if pos >= len(current):
        raise BraidWordError("target word is longer than the source")
    head = current[pos]
    if head == letter:
        return
    if abs(head - letter) >= 2:
        _bring_to_front(current, letter, pos + 1, moves)
        move = ("commute", pos)
    else:
        _bring_to_front(current, letter, pos + 1, moves)
        _bring_to_front(current, head, pos + 2, moves)
        move = ("relation", pos)
    _apply_move(current, move)
    moves.append(move)
