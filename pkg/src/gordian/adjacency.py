"""Gordian adjacency of torus knots: decisions, obstructions and distance bounds.

``T1 <=_g T2`` means T1 sits on some minimal unknotting sequence of T2,
i.e. d_g(T1, T2) = u(T2) - u(T1).

Positive verdicts come from three trusted sources: the trivial cases, the
parameter-domination theorem (``T(n, m) <=_g T(a, b)`` when ``n <= a`` and
``m <= b``) and the complete answer for indices 2 and 3 (``T(2, n) <=_g T(3, m)``
iff ``3n <= 4m + 1``).  Negative verdicts come from unknotting numbers or from
a signature witness: along a crossing-change path from T1 to T2 that only
switches negative crossings to positive ones, every regular signature can
only go up, so ``sigma_w(T1) > sigma_w(T2)`` at one regular w rules adjacency out.

Signature values here come from the exact counting formula only.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from gordian.signature import (
    as_angle,
    format_fraction,
    linear_form,
    lt_signatures,
    midpoints,
    signature_defect,
    signature_profile,
)
from gordian.torus import TorusKnot, index, iter_knots, normalize, unknotting_number

ADJACENT = "Adjacent"
NOT_ADJACENT = "NotAdjacent"
UNDETERMINED = "Undetermined"

GORDIAN = "Gordian"
ALGEBRAIC = "Algebraic"

SMALLER_INDEX_NOTE = (
    "conjecturally not adjacent: T1 has larger index than T2; "
    "this is an open conjecture and not used as a verdict")


@dataclass(frozen=True)
class SignatureWitness:
    theta: Fraction
    sigma1: int
    sigma2: int

    def to_json(self) -> dict:
        return {"theta": format_fraction(self.theta), "sigma1": self.sigma1, "sigma2": self.sigma2}


@dataclass(frozen=True)
class AdjacencyVerdict:
    status: str
    provenance: str
    notion: str = GORDIAN
    detail: dict = field(default_factory=dict)
    note: Optional[str] = None

    def to_json(self) -> dict:
        out = {"status": self.status, "notion": self.notion, "provenance": self.provenance,
               "detail": self.detail}
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class DistanceBounds:
    lower: int
    lower_provenance: dict
    upper: Optional[int]
    upper_provenance: dict

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "lower_provenance": self.lower_provenance,
            "upper": self.upper,
            "upper_provenance": self.upper_provenance,
        }


def _dominates(small: TorusKnot, big: TorusKnot) -> bool:
    return (small.p <= big.p and small.q <= big.q) or (small.p <= big.q and small.q <= big.p)


def index23_criterion(n: int, m: int) -> bool:
    """T(2, n) <=_g T(3, m) exactly when n <= (4m + 1)/3."""
    return 3 * n <= 4 * m + 1


def _positive_rule(t1: TorusKnot, t2: TorusKnot) -> Optional[tuple[str, dict]]:
    """First positive rule of the decision cascade, or None.

    Mirrors the cascade order: the unknotting-number checks run first, so
    nothing here can contradict them.
    """
    if t1 == t2 or t1.is_unknot:
        return "Trivial", {"reason": "equal knots" if t1 == t2 else "T1 is the unknot"}
    u1, u2 = unknotting_number(t1), unknotting_number(t2)
    if u1 >= u2:
        return None
    if _dominates(t1, t2):
        return "Theorem12", {"rule": "parameter domination"}
    if t1.p == 2 and t2.p == 3 and index23_criterion(t1.q, t2.q):
        return "Theorem13", {"rule": "3n <= 4m + 1", "n": t1.q, "m": t2.q}
    return None


def is_known_adjacent(t1: TorusKnot, t2: TorusKnot) -> bool:
    """True iff :func:`check_gordian_adjacency` answers Adjacent (no scan needed)."""
    return _positive_rule(t1, t2) is not None


def signature_obstruction_scan(t1: TorusKnot, t2: TorusKnot) -> Optional[SignatureWitness]:
    """First regular angle where sigma(T1) > sigma(T2), or None.

    The midpoints of the merged breakpoint partition meet every open interval
    on which both signature functions are constant, so the scan is complete
    over regular angles.
    """
    thetas, s1, s2 = _merged_values(t1, t2)
    for theta, a, b in zip(thetas, s1, s2):
        if a > b:
            return SignatureWitness(theta, a, b)
    return None


def _merged_values(t1: TorusKnot, t2: TorusKnot) -> tuple[list[Fraction], list[int], list[int]]:
    points = set(signature_profile(t1).breakpoints) | set(signature_profile(t2).breakpoints)
    thetas = midpoints(tuple(points))
    return thetas, lt_signatures(t1, thetas), lt_signatures(t2, thetas)


def check_gordian_adjacency(t1: TorusKnot, t2: TorusKnot) -> AdjacencyVerdict:
    """Decide ``T1 <=_g T2`` where the known theorems and obstructions allow it."""
    if t1 == t2 or t1.is_unknot:
        return AdjacencyVerdict(ADJACENT, "Trivial", detail=_positive_rule(t1, t2)[1])
    u1, u2 = unknotting_number(t1), unknotting_number(t2)
    if u1 > u2:
        return AdjacencyVerdict(NOT_ADJACENT, "UObstruction",
                                detail={"u1": u1, "u2": u2, "reason": "u(T1) > u(T2)"})
    if u1 == u2:
        return AdjacencyVerdict(NOT_ADJACENT, "UObstruction",
                                detail={"u1": u1, "u2": u2,
                                        "reason": "equal unknotting numbers force d_g = 0"})
    rule = _positive_rule(t1, t2)
    if rule is not None:
        return AdjacencyVerdict(ADJACENT, rule[0], detail=rule[1])
    if t1.p == 2 and t2.p == 3:
        witness = signature_obstruction_scan(t1, t2)
        detail = {"rule": "3n > 4m + 1", "n": t1.q, "m": t2.q}
        if witness is not None:
            detail["witness"] = witness.to_json()
        return AdjacencyVerdict(NOT_ADJACENT, "Theorem13Negative", detail=detail)
    witness = signature_obstruction_scan(t1, t2)
    if witness is not None:
        return AdjacencyVerdict(NOT_ADJACENT, "SignatureObstruction",
                                detail={"witness": witness.to_json()})
    note = SMALLER_INDEX_NOTE if index(t1) > index(t2) else None
    return AdjacencyVerdict(UNDETERMINED, "None", detail={}, note=note)


def gordian_distance_lower_bound(t1: TorusKnot, t2: TorusKnot) -> int:
    return _lower_bound(t1, t2)[0]


def _lower_bound(t1: TorusKnot, t2: TorusKnot) -> tuple[int, dict]:
    # Along any crossing-change path a positive-to-negative change moves every
    # regular signature by 0 or -2 and a negative-to-positive one by 0 or +2.
    # So a path needs at least P/2 changes of one kind and N/2 of the other.
    if t1 == t2:
        return 0, {"reason": "equal knots"}
    du = abs(unknotting_number(t1) - unknotting_number(t2))
    thetas, s1, s2 = _merged_values(t1, t2)
    p_gap, n_gap = 0, 0
    p_at = n_at = None
    for theta, a, b in zip(thetas, s1, s2):
        if a - b > p_gap:
            p_gap, p_at = a - b, theta
        if b - a > n_gap:
            n_gap, n_at = b - a, theta
    sig_bound = p_gap // 2 + n_gap // 2
    value = max(du, 1, sig_bound)
    prov = {
        "u_difference": du,
        "distinct": 1,
        "signature": {
            "P": p_gap, "N": n_gap, "bound": sig_bound,
            "P_theta": format_fraction(p_at) if p_at is not None else None,
            "N_theta": format_fraction(n_at) if n_at is not None else None,
        },
    }
    return value, prov


def gordian_distance_upper_bound(t1: TorusKnot, t2: TorusKnot,
                                 search_budget: Optional[int] = None) -> tuple[int, dict]:
    """Smallest u(T1) + u(T2) - 2u(K) over known common predecessors K.

    Only torus knots K (and the unknot) with u(K) <= ``search_budget`` are
    searched, so the result is an upper bound and nothing more.  Ties go to
    the knot with the larger u(K), then the smaller parameters.
    """
    u1, u2 = unknotting_number(t1), unknotting_number(t2)
    if t1 == t2:
        return 0, {"kind": "equal"}
    if search_budget is None:
        search_budget = min(u1, u2)
    best: Optional[tuple[int, TorusKnot]] = None
    if is_known_adjacent(t1, t2) or is_known_adjacent(t2, t1):
        best = (abs(u2 - u1), t1 if u1 <= u2 else t2)
    for k in iter_knots(search_budget, include_unknot=True):
        if is_known_adjacent(k, t1) and is_known_adjacent(k, t2):
            value = u1 + u2 - 2 * unknotting_number(k)
            if best is None or value < best[0] or (
                    value == best[0] and unknotting_number(k) > unknotting_number(best[1])):
                best = (value, k)
    value, k = best
    kind = "direct" if k in (t1, t2) else "common_neighbor"
    return value, {"kind": kind, "neighbor": str(k), "search": "torus knots only",
                   "budget": search_budget}


def distance_bounds(t1: TorusKnot, t2: TorusKnot, search_budget: Optional[int] = None) -> DistanceBounds:
    lower, lprov = _lower_bound(t1, t2)
    upper, uprov = gordian_distance_upper_bound(t1, t2, search_budget)
    return DistanceBounds(lower, lprov, upper, uprov)


def same_index_distance(a: int, b: int, c: int) -> Fraction:
    """d_g(T(a, b), T(a, c)) = (a - 1)|b - c| / 2."""
    for x in (a, b, c):
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise ValueError(f"parameters must be positive integers, got {(a, b, c)}")
    if math.gcd(a, b) != 1 or math.gcd(a, c) != 1:
        raise ValueError(f"need gcd(a,b) = gcd(a,c) = 1, got {(a, b, c)}")
    return Fraction((a - 1) * abs(b - c), 2)


def _check_ab(a: int, b: int) -> None:
    if isinstance(a, bool) or not isinstance(a, int) or not isinstance(b, int) or a < 2:
        raise ValueError(f"need integers 2 <= a <= b, got a={a!r}, b={b!r}")
    if b < a:
        raise ValueError(f"need a <= b, got a={a}, b={b}")


def cbar_upper_bound(a: int, b: int) -> Fraction:
    """Signature bound on limsup n(m)/m, where T(a, n(m)) <=_g T(b, m) with n(m) maximal."""
    _check_ab(a, b)
    r = -(-b // a)
    return Fraction(a * r * r - (a + 2 * b) * r + b * (b + 1), (a - 1) * b)


def cbar_trivial_bracket(a: int, b: int) -> tuple[Fraction, Fraction]:
    """(1, (b-1)/(a-1)): the bounds that need nothing beyond unknotting numbers."""
    _check_ab(a, b)
    return Fraction(1), Fraction(b - 1, a - 1)


def linear_bound_ratio(a: int, b: int, theta: Fraction) -> Fraction:
    """Asymptotic bound on n(m)/m obtained by testing signatures at a single angle."""
    theta = as_angle(theta)
    return linear_form(b, theta) / linear_form(a, theta)


def remark52_optimality_check(a: int, b: int, grid: int) -> bool:
    """True iff theta = 1/a minimizes the single-angle bound over the grid j/grid.

    The bound is a ratio of two continuous piecewise-linear functions of theta,
    so excluding the (nowhere dense) nonregular angles does not change its
    infimum over the grid; every grid point is used.
    """
    _check_ab(a, b)
    if not isinstance(grid, int) or grid < a * b:
        raise ValueError(f"grid must be an integer >= a*b = {a * b}, got {grid!r}")
    best = linear_bound_ratio(a, b, Fraction(1, a))
    return all(best <= linear_bound_ratio(a, b, Fraction(j, grid)) for j in range(1, grid))


# -- algebraic adjacency -------------------------------------------------------

def _exchange_moves(k: TorusKnot):
    # T(a, bc) -> T(b, ac) for a <= b, in either parameter order
    if k.is_unknot:
        return
    for a, rest in ((k.p, k.q), (k.q, k.p)):
        for b in range(max(a, 2), rest + 1):
            if rest % b == 0:
                c = rest // b
                try:
                    yield normalize(b, a * c), {"a": a, "b": b, "c": c}
                except ValueError:
                    continue


def algebraic_derivation(t1: TorusKnot, t2: TorusKnot, depth: int = 4) -> Optional[list[dict]]:
    """Shortest chain of domination and exchange steps from T1 to T2, or None.

    Chains are composed assuming the algebraic relation is transitive.
    """
    if t1 == t2:
        return []
    u2 = unknotting_number(t2)
    if unknotting_number(t1) > u2:
        return None
    universe = list(iter_knots(u2, include_unknot=True))
    parent: dict[TorusKnot, tuple[Optional[TorusKnot], dict]] = {t1: (None, {})}
    queue = deque([(t1, 0)])
    while queue:
        k, d = queue.popleft()
        if d >= depth:
            continue
        moves: list[tuple[TorusKnot, dict]] = []
        if _dominates(k, t2):
            moves.append((t2, {"rule": "domination"}))
        for nxt, params in _exchange_moves(k):
            if unknotting_number(nxt) <= u2:
                moves.append((nxt, {"rule": "exchange", **params}))
        if d + 1 < depth:
            moves.extend((x, {"rule": "domination"}) for x in universe if x != k and _dominates(k, x))
        for nxt, step in moves:
            if nxt in parent:
                continue
            parent[nxt] = (k, step)
            if nxt == t2:
                return _unwind(parent, t2)
            queue.append((nxt, d + 1))
    return None


def _unwind(parent, target: TorusKnot) -> list[dict]:
    chain = []
    node = target
    while parent[node][0] is not None:
        prev, step = parent[node]
        chain.append({"from": str(prev), "to": str(node), **step})
        node = prev
    return chain[::-1]


def check_algebraic_adjacency_sufficient(t1: TorusKnot, t2: TorusKnot, depth: int = 4) -> bool:
    """True if ``T1 <=_a T2`` follows from the domination and exchange rules.

    False only means no derivation within ``depth`` steps was found.
    """
    return algebraic_derivation(t1, t2, depth) is not None


def check_algebraic_adjacency(t1: TorusKnot, t2: TorusKnot, depth: int = 4) -> AdjacencyVerdict:
    chain = algebraic_derivation(t1, t2, depth)
    if chain is not None:
        return AdjacencyVerdict(ADJACENT, "AlgebraicRules", notion=ALGEBRAIC,
                                detail={"chain": chain, "assumes": "transitivity of <=_a"})
    u1, u2 = unknotting_number(t1), unknotting_number(t2)
    if u1 > u2 or (u1 == u2 and t1 != t2):
        return AdjacencyVerdict(NOT_ADJACENT, "UObstruction", notion=ALGEBRAIC,
                                detail={"u1": u1, "u2": u2})
    return AdjacencyVerdict(UNDETERMINED, "None", notion=ALGEBRAIC)


def compare_notions(t1: TorusKnot, t2: TorusKnot, depth: int = 4) -> dict:
    gordian = check_gordian_adjacency(t1, t2)
    chain = algebraic_derivation(t1, t2, depth)
    return {
        "T1": str(t1),
        "T2": str(t2),
        "gordian": gordian.to_json(),
        "algebraic_derivable": chain is not None,
        "algebraic_chain": chain,
        "diverge": chain is not None and gordian.status == NOT_ADJACENT,
    }


def index2_candidate_scan(max_u: int) -> list[TorusKnot]:
    """Torus knots with u <= max_u and zero signature defect, sorted by (index, q).

    Only these can have a Gordian predecessor of index 2: signature obstruction
    rules out every knot where u exceeds half the classical signature.
    """
    if not isinstance(max_u, int) or max_u < 1:
        raise ValueError(f"max_u must be a positive integer, got {max_u!r}")
    found = [k for k in iter_knots(max_u) if signature_defect(k) == 0]
    return sorted(found, key=lambda k: (index(k), k.q))


def claim_window(m: int) -> tuple[Fraction, Fraction]:
    """Open interval of angles just below 1/2 where sigma(T(3, m)) drops by 2."""
    if m % 2 == 0:
        return Fraction(1, 2) - Fraction(2, 3 * m), Fraction(1, 2) - Fraction(1, 3 * m)
    return Fraction(1, 2) - Fraction(3, 6 * m), Fraction(1, 2) - Fraction(1, 6 * m)
