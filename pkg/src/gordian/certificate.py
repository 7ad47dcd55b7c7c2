"""Crossing-change certificates: checkable rewriting paths between braid closures.

A certificate starts from a braid word and applies a list of steps.  Every
step is checked locally against the word it is applied to.  Most steps
preserve the braid (relations, commutations, free cancellation) or its
closure (cyclic shifts, Markov moves); a ``CrossingChange`` flips the sign
of one letter and is what the certificate counts.

The verifier is a proof checker: it never searches for moves, it only
replays them and compares the result with the declared final word through
the Garside normal form.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from gordian.braid import BraidWord, garside_normal_form, positive_word_path, torus_word
from gordian.torus import TorusKnot, normalize, unknotting_number

STEP_KINDS = (
    "BraidRelation",
    "FarCommutation",
    "FreeReduction",
    "FreeInsertion",
    "CyclicShift",
    "MarkovStabilize",
    "MarkovDestabilize",
    "CrossingChange",
)

# Delta^2 in B_3 as a positive word; it is central.
FULL_TWIST_B3 = (2, 1, 1, 2, 1, 1)


class StepError(ValueError):
    """A step does not match the word it is applied to."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        super().__init__(message)
        self.position = position


class CertificateFormatError(ValueError):
    """Malformed certificate JSON."""


@dataclass(frozen=True)
class CertStep:
    kind: str
    position: Optional[int] = None
    direction: Optional[str] = None
    generator: Optional[int] = None
    sign: Optional[int] = None
    amount: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in STEP_KINDS:
            raise CertificateFormatError(f"unknown step kind {self.kind!r}")
        needs = _REQUIRED_FIELDS[self.kind]
        for name in needs:
            if getattr(self, name) is None:
                raise CertificateFormatError(f"{self.kind} step needs field {name!r}")
        if self.direction is not None and self.direction not in ("forward", "backward"):
            raise CertificateFormatError(f"direction must be 'forward' or 'backward', got {self.direction!r}")
        if self.sign is not None and self.sign not in (1, -1):
            raise CertificateFormatError(f"sign must be +1 or -1, got {self.sign!r}")

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        for name in _REQUIRED_FIELDS[self.kind]:
            out[name] = getattr(self, name)
        return out

    @classmethod
    def from_json(cls, payload: dict) -> CertStep:
        if not isinstance(payload, dict) or "kind" not in payload:
            raise CertificateFormatError(f"step must be an object with a 'kind', got {payload!r}")
        kind = payload["kind"]
        if kind not in STEP_KINDS:
            raise CertificateFormatError(f"unknown step kind {kind!r}")
        extra = set(payload) - {"kind", *_REQUIRED_FIELDS[kind]}
        if extra:
            raise CertificateFormatError(f"unexpected fields for {kind}: {sorted(extra)}")
        return cls(kind, **{k: v for k, v in payload.items() if k != "kind"})

    def __str__(self) -> str:
        fields = ", ".join(f"{k}={v}" for k, v in self.to_json().items() if k != "kind")
        return f"{self.kind}({fields})"


_REQUIRED_FIELDS: dict[str, tuple[str, ...]] = {
    "BraidRelation": ("position", "direction"),
    "FarCommutation": ("position",),
    "FreeReduction": ("position",),
    "FreeInsertion": ("position", "generator", "sign"),
    "CyclicShift": ("amount",),
    "MarkovStabilize": ("sign",),
    "MarkovDestabilize": (),
    "CrossingChange": ("position",),
}


def braid_relation(position: int, direction: str = "forward") -> CertStep:
    return CertStep("BraidRelation", position=position, direction=direction)


def far_commutation(position: int) -> CertStep:
    return CertStep("FarCommutation", position=position)


def free_reduction(position: int) -> CertStep:
    return CertStep("FreeReduction", position=position)


def free_insertion(position: int, generator: int, sign: int) -> CertStep:
    return CertStep("FreeInsertion", position=position, generator=generator, sign=sign)


def cyclic_shift(amount: int) -> CertStep:
    return CertStep("CyclicShift", amount=amount)


def markov_stabilize(sign: int = 1) -> CertStep:
    return CertStep("MarkovStabilize", sign=sign)


def markov_destabilize() -> CertStep:
    return CertStep("MarkovDestabilize")


def crossing_change(position: int) -> CertStep:
    return CertStep("CrossingChange", position=position)


@dataclass(frozen=True)
class Certificate:
    initial: BraidWord
    steps: tuple[CertStep, ...]
    declared_final: BraidWord
    declared_crossing_changes: int

    def to_json(self) -> dict:
        return {
            "strands": self.initial.strands,
            "initial": self.initial.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "final": self.declared_final.to_json(),
            "crossing_changes": self.declared_crossing_changes,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, payload: dict) -> Certificate:
        try:
            strands = payload["strands"]
            steps = tuple(CertStep.from_json(s) for s in payload["steps"])
            initial = BraidWord(strands, tuple(payload["initial"]))
            final_strands = strands + sum(
                1 if s.kind == "MarkovStabilize" else -1 if s.kind == "MarkovDestabilize" else 0
                for s in steps)
            final = BraidWord(final_strands, tuple(payload["final"]))
            count = payload["crossing_changes"]
        except (KeyError, TypeError) as exc:
            raise CertificateFormatError(f"malformed certificate: {exc}") from exc
        except ValueError as exc:
            raise CertificateFormatError(str(exc)) from exc
        if not isinstance(count, int):
            raise CertificateFormatError("crossing_changes must be an integer")
        return cls(initial, steps, final, count)

    @classmethod
    def loads(cls, text: str) -> Certificate:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(f"not valid JSON: {exc}") from exc
        return cls.from_json(payload)


def _check_position(w: BraidWord, position, width: int) -> int:
    if not isinstance(position, int) or position < 0 or position + width > len(w):
        raise StepError(f"position {position} is out of range for a word of length {len(w)}", position)
    return position


def apply_step(w: BraidWord, step: CertStep) -> BraidWord:
    """Apply one certificate step, raising :class:`StepError` on a mismatch."""
    letters = list(w.letters)
    kind = step.kind
    if kind == "BraidRelation":
        pos = _check_position(w, step.position, 3)
        x, y, z = letters[pos:pos + 3]
        if not (x == z and (x > 0) == (y > 0) and abs(abs(x) - abs(y)) == 1):
            raise StepError(f"no braid relation pattern s_i s_j s_i at position {pos}", pos)
        outer_larger = abs(x) > abs(y)
        if outer_larger != (step.direction == "forward"):
            raise StepError(
                f"braid relation at position {pos} does not match direction {step.direction}", pos)
        letters[pos:pos + 3] = [y, x, y]
        return BraidWord(w.strands, tuple(letters))
    if kind == "FarCommutation":
        pos = _check_position(w, step.position, 2)
        x, y = letters[pos], letters[pos + 1]
        if abs(abs(x) - abs(y)) < 2:
            raise StepError(f"letters at position {pos} do not commute", pos)
        letters[pos], letters[pos + 1] = y, x
        return BraidWord(w.strands, tuple(letters))
    if kind == "FreeReduction":
        pos = _check_position(w, step.position, 2)
        if letters[pos] != -letters[pos + 1]:
            raise StepError(f"letters at position {pos} are not inverse to each other", pos)
        del letters[pos:pos + 2]
        return BraidWord(w.strands, tuple(letters))
    if kind == "FreeInsertion":
        pos = step.position
        if not isinstance(pos, int) or not 0 <= pos <= len(w):
            raise StepError(f"insertion position {pos} is out of range", pos)
        if not isinstance(step.generator, int) or not 1 <= step.generator < w.strands:
            raise StepError(f"generator {step.generator} is out of range for {w.strands} strands", pos)
        x = step.sign * step.generator
        letters[pos:pos] = [x, -x]
        return BraidWord(w.strands, tuple(letters))
    if kind == "CyclicShift":
        amount = step.amount
        if not isinstance(amount, int) or not 0 <= amount <= len(w):
            raise StepError(f"shift amount {amount} is out of range for length {len(w)}")
        return BraidWord(w.strands, tuple(letters[amount:] + letters[:amount]))
    if kind == "MarkovStabilize":
        return BraidWord(w.strands + 1, tuple(letters) + (step.sign * w.strands,))
    if kind == "MarkovDestabilize":
        top = w.strands - 1
        if top < 1 or not letters or letters[-1] != top:
            raise StepError(
                f"word must end in a positive s_{top} to destabilize", len(letters) - 1)
        if any(abs(x) == top for x in letters[:-1]):
            raise StepError(f"strand {w.strands} is crossed more than once", len(letters) - 1)
        return BraidWord(w.strands - 1, tuple(letters[:-1]))
    # CrossingChange
    pos = _check_position(w, step.position, 1)
    letters[pos] = -letters[pos]
    return BraidWord(w.strands, tuple(letters))


def recognize_torus_closure(w: BraidWord) -> Optional[TorusKnot]:
    """Torus knot whose standard (stabilized) braid is a cyclic shift of ``w``.

    Candidates are ``(s_1 ... s_{p-1})^q s_p ... s_{n-1}`` on n strands with q
    fixed by the writhe.  Returns ``None`` when nothing matches; that means
    "unrecognized", not "not a torus knot".
    """
    if not w.closes_to_knot():
        return None
    n = w.strands
    forms = {garside_normal_form(w.rotated(k)) for k in range(max(1, len(w)))}
    for p in range(1, n + 1):
        tail = tuple(range(p, n))
        if p == 1:
            q = 1
            if w.writhe != len(tail):
                continue
        else:
            rest = w.writhe - len(tail)
            if rest <= 0 or rest % (p - 1):
                continue
            q = rest // (p - 1)
        candidate = BraidWord(n, tuple(range(1, p)) * q + tail)
        if not candidate.closes_to_knot():
            continue
        if garside_normal_form(candidate) in forms:
            return normalize(p, q) if p > 1 else normalize(1, 1)
    return None


@dataclass
class VerificationReport:
    valid: bool
    crossing_changes: int = 0
    negative_to_positive: int = 0
    positive_to_negative: int = 0
    initial_closure: Optional[TorusKnot] = None
    final_closure: Optional[TorusKnot] = None
    failed_step: Optional[int] = None
    reason: Optional[str] = None
    words: list[BraidWord] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "crossing_changes": self.crossing_changes,
            "negative_to_positive": self.negative_to_positive,
            "positive_to_negative": self.positive_to_negative,
            "initial_closure": str(self.initial_closure) if self.initial_closure else None,
            "final_closure": str(self.final_closure) if self.final_closure else None,
            "failed_step": self.failed_step,
            "reason": self.reason,
        }


def verify_certificate(cert: Certificate) -> VerificationReport:
    """Replay every step and compare the result with the declared final word."""
    report = VerificationReport(valid=False)
    current = cert.initial
    report.words.append(current)
    for index, step in enumerate(cert.steps):
        if step.kind == "CrossingChange" and isinstance(step.position, int) \
                and 0 <= step.position < len(current):
            if current.letters[step.position] < 0:
                report.negative_to_positive += 1
            else:
                report.positive_to_negative += 1
        try:
            current = apply_step(current, step)
        except StepError as exc:
            report.failed_step = index
            report.reason = f"step {index} ({step}): {exc}"
            return report
        report.words.append(current)
    report.crossing_changes = report.negative_to_positive + report.positive_to_negative
    report.initial_closure = recognize_torus_closure(cert.initial)
    report.final_closure = recognize_torus_closure(current)
    if current.strands != cert.declared_final.strands \
            or garside_normal_form(current) != garside_normal_form(cert.declared_final):
        report.reason = "replayed word differs from the declared final word"
        return report
    if report.crossing_changes != cert.declared_crossing_changes:
        report.reason = (f"declared {cert.declared_crossing_changes} crossing changes, "
                         f"found {report.crossing_changes}")
        return report
    report.valid = True
    return report


# -- certificate construction --------------------------------------------------

class _Builder:
    """Applies steps one by one and keeps the word history."""

    def __init__(self, start: BraidWord) -> None:
        self.word = start
        self.steps: list[CertStep] = []
        self.history: list[BraidWord] = [start]

    def apply(self, step: CertStep) -> None:
        self.word = apply_step(self.word, step)
        self.steps.append(step)
        self.history.append(self.word)

    def rewrite_positive(self, start: int, target: tuple[int, ...]) -> None:
        """Rewrite the positive subword starting at ``start`` into ``target``."""
        source = self.word.letters[start:start + len(target)]
        for kind, pos in positive_word_path(source, target):
            at = start + pos
            if kind == "commute":
                self.apply(far_commutation(at))
            else:
                x, y = self.word.letters[at], self.word.letters[at + 1]
                self.apply(braid_relation(at, "forward" if abs(x) > abs(y) else "backward"))


def _inverse_step(before: BraidWord, step: CertStep) -> CertStep:
    kind = step.kind
    if kind == "BraidRelation":
        return braid_relation(step.position, "backward" if step.direction == "forward" else "forward")
    if kind == "FreeReduction":
        x = before.letters[step.position]
        return free_insertion(step.position, abs(x), 1 if x > 0 else -1)
    if kind == "FreeInsertion":
        return free_reduction(step.position)
    if kind == "CyclicShift":
        return cyclic_shift((len(before) - step.amount) % len(before) if len(before) else 0)
    if kind == "MarkovStabilize":
        if step.sign != 1:
            raise ValueError("a negative stabilization has no destabilization step")
        return markov_destabilize()
    if kind == "MarkovDestabilize":
        return markov_stabilize(1)
    return step


def invert_path(history: list[BraidWord], steps: list[CertStep]) -> list[CertStep]:
    """Steps leading from ``history[-1]`` back to ``history[0]``."""
    return [_inverse_step(history[i], steps[i]) for i in range(len(steps) - 1, -1, -1)]


def prop21_target(k: int) -> int:
    return (3 * k) // 2 + 1


def generate_prop21_certificate(k: int) -> Certificate:
    """Certificate that T(2, 2k+1) is Gordian adjacent to T(3, floor(3k/2 + 1)).

    The path starts at s_1^(2k+1) s_2 on three strands (a stabilized T(2, 2k+1))
    and ends at (s_1 s_2)^m.  It is built backwards: writing the torus braid
    as Delta^(2j) s_1^a s_2 with Delta^2 central, changing the final s_2
    and cancelling it against one Delta^2 block gives Delta^(2j-2) s_1^(a+4) s_2
    up to conjugation.  Each round costs one crossing change; reversing the
    whole path turns every positive-to-negative change into a
    negative-to-positive one.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    m = prop21_target(k)
    blocks, r = divmod(m, 3)
    b = _Builder(torus_word(3, m))
    block = len(FULL_TWIST_B3)

    # Bring (s1 s2)^m into the shape Delta^(2j) s1^a s2.
    if r == 2:
        b.apply(braid_relation(len(b.word) - 3, "forward"))
        b.apply(cyclic_shift(len(b.word) - 1))
        lead = 1
    else:
        lead = 0
    for t in range(blocks):
        b.rewrite_positive(lead + t * block, FULL_TWIST_B3)
    for t in range(blocks):
        b.rewrite_positive(t * block, FULL_TWIST_B3 + (1,) * lead)
    a = 2 * r - 1

    while blocks:
        length = len(b.word)
        b.apply(crossing_change(length - 1))
        b.apply(cyclic_shift(length - 1))
        b.apply(free_reduction(0))
        b.apply(cyclic_shift(3))
        # s1 s1 R s1^(a+2) s2  ->  R s1^(a+4) s2 by sliding s1 s1 through each block
        blocks -= 1
        for t in range(blocks):
            b.rewrite_positive(t * block, FULL_TWIST_B3 + (1, 1))
        a += 4

    expected = BraidWord(3, (1,) * (2 * k + 1) + (2,))
    if b.word != expected:
        raise AssertionError(f"construction ended at {b.word}, expected {expected}")

    steps = invert_path(b.history, b.steps)
    changes = sum(1 for s in steps if s.kind == "CrossingChange")
    return Certificate(expected, tuple(steps), torus_word(3, m), changes)


def theorem1_crossing_budget(n: int, m: int, a: int, b: int) -> int:
    """Crossing changes used by the torus-diagram construction of T(n, m) <= T(a, b).

    Requires n <= a and m <= b.  While m <= b - a the construction strips one
    full twist on a strands (a(a-1)/2 changes) and recurses on T(a, b - a).
    """
    for x in (n, m, a, b):
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise ValueError(f"parameters must be positive integers, got {(n, m, a, b)}")
    if not (n <= a and m <= b):
        raise ValueError(f"need n <= a and m <= b, got {(n, m, a, b)}")
    if gcd(n, m) != 1 or gcd(a, b) != 1:
        raise ValueError(f"({n},{m}) and ({a},{b}) must both be coprime pairs")
    if a == n:
        return (b - m) * (a - 1) // 2
    if m <= b - a:
        return a * (a - 1) // 2 + theorem1_crossing_budget(n, m, a, b - a)
    d = b - m
    return (d * (d - 1) + d * (a - d) + (a - n) * (m - 1)) // 2


def u_difference(n: int, m: int, a: int, b: int) -> int:
    return unknotting_number(normalize(a, b)) - unknotting_number(normalize(n, m))
