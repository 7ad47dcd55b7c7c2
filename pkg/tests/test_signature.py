from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import brute_breakpoints, brute_profile, brute_signature

from gordian.adjacency import claim_window
from gordian.signature import (
    InvalidAngleError,
    SignatureProfile,
    as_angle,
    classical_signature,
    gg_linear_approx,
    is_regular,
    jump_set,
    linear_form,
    lt_signature,
    lt_signatures,
    midpoints,
    parse_angle,
    signature_defect,
    signature_profile,
)
from gordian.torus import UNKNOT, normalize

F = Fraction
small_knots = st.tuples(st.integers(2, 13), st.integers(3, 30)).filter(
    lambda t: t[0] < t[1] and math.gcd(*t) == 1).map(lambda t: normalize(*t))
angles = st.fractions(min_value=0, max_value=1, max_denominator=500).filter(lambda t: 0 < t < 1)


def test_trefoil_jump_set():
    assert jump_set(normalize(2, 3)).elements == (F(5, 6), F(7, 6))


def test_jump_set_t35():
    expected = [F(n, 15) for n in (8, 11, 13, 14, 16, 17, 19, 22)]
    assert list(jump_set(normalize(3, 5))) == expected
    assert F(8, 15) in jump_set(normalize(3, 5))


def test_unknot_has_no_jumps():
    assert len(jump_set(UNKNOT)) == 0
    assert lt_signature(UNKNOT, F(1, 3)) == 0
    assert signature_profile(UNKNOT).values == (0,)


def test_point_values():
    assert lt_signature(normalize(3, 7), F(1, 2)) == 8
    assert lt_signature(normalize(2, 9), F(3, 20)) == 2
    assert classical_signature(normalize(2, 3)) == 2
    assert classical_signature(normalize(3, 4)) == 6


def test_profile_t29_and_t35():
    p29 = signature_profile(normalize(2, 9))
    assert p29.breakpoints == tuple(F(n, 18) for n in (1, 3, 5, 7, 11, 13, 15, 17))
    assert p29.values == (0, 2, 4, 6, 8, 6, 4, 2, 0)
    p35 = signature_profile(normalize(3, 5))
    assert p35.breakpoints == tuple(F(n, 15) for n in (1, 2, 4, 7, 8, 11, 13, 14))
    assert p35.values == (0, 2, 4, 6, 8, 6, 4, 2, 0)


def test_trefoil_profile_intervals():
    prof = signature_profile(normalize(2, 3))
    assert prof.intervals() == [(0, F(1, 6), 0), (F(1, 6), F(5, 6), 2), (F(5, 6), 1, 0)]
    assert prof.value_at(F(1, 2)) == 2
    with pytest.raises(InvalidAngleError):
        prof.value_at(F(1, 6))


def test_profile_json_round_trip():
    prof = signature_profile(normalize(3, 5))
    payload = prof.to_json()
    assert payload["breakpoints"][0] == "1/15"
    assert SignatureProfile.from_json(payload) == prof


def test_signature_defect():
    assert signature_defect(normalize(3, 7)) == 2
    assert signature_defect(normalize(2, 9)) == 0
    assert signature_defect(normalize(3, 5)) == 0
    assert signature_defect(normalize(3, 4)) == 0
    assert signature_defect(normalize(4, 5)) > 0


def test_linear_approximation_values():
    assert gg_linear_approx(2, 3, F(1, 2)) == 3
    assert gg_linear_approx(3, 5, F(1, 2)) == F(20, 3)
    assert linear_form(3, F(1, 2)) == F(4, 3)
    with pytest.raises(ValueError):
        gg_linear_approx(3, 6, F(1, 2))
    with pytest.raises(ValueError):
        gg_linear_approx(1, 5, F(1, 2))


def test_angle_validation():
    assert parse_angle("3/7") == F(3, 7)
    assert as_angle("1/2") == F(1, 2)
    for bad in ("0.5", "2/4", "0/1", "1/1", "3/2", "1/0", "-1/3", "a/b", "1"):
        with pytest.raises(InvalidAngleError):
            parse_angle(bad)
    with pytest.raises(InvalidAngleError):
        as_angle(0.5)
    with pytest.raises(InvalidAngleError):
        lt_signature(normalize(2, 3), F(0))
    with pytest.raises(InvalidAngleError):
        lt_signature(normalize(2, 3), F(1))


def test_regularity_matches_root_of_unity_condition():
    # theta is a jump iff (pq theta) is an integer not divisible by p or q
    for p in range(2, 13):
        for q in range(p + 1, 13):
            if math.gcd(p, q) != 1:
                continue
            knot = normalize(p, q)
            n = p * q
            for j in range(1, n):
                arithmetic = j % p != 0 and j % q != 0
                assert is_regular(knot, F(j, n)) == (not arithmetic)
            assert is_regular(knot, F(1, n + 1))


def test_breakpoint_count_is_twice_unknotting_number():
    for p in range(2, 9):
        for q in range(p + 1, 20):
            if math.gcd(p, q) == 1:
                prof = signature_profile(normalize(p, q))
                assert len(prof.breakpoints) == (p - 1) * (q - 1)
                assert list(prof.breakpoints) == brute_breakpoints(p, q)


def test_profiles_against_oracle():
    for p in range(2, 7):
        for q in range(p + 1, 16):
            if math.gcd(p, q) == 1:
                prof = signature_profile(normalize(p, q))
                bps, values = brute_profile(p, q)
                assert list(prof.breakpoints) == bps
                assert list(prof.values) == values


def test_signature_drops_by_two_just_below_half():
    for l in range(1, 6):
        for k in (3 + 4 * l, 4 + 4 * l):
            m = math.ceil(F(3 * k, 2) - 1)
            knot = normalize(3, m)
            lo, hi = claim_window(m)
            assert 0 < lo < hi < F(1, 2)
            assert classical_signature(knot) == 2 * k
            for theta in ((lo + hi) / 2, lo + (hi - lo) / 7):
                assert lt_signature(knot, theta) == 2 * k - 2


def test_drop_family_needs_the_residue_condition():
    # k = 5 gives T(3,7) whose classical signature is 8, not 10
    assert classical_signature(normalize(3, 7)) == 8


@given(small_knots, angles)
def test_kernel_matches_definition(knot, theta):
    assert lt_signature(knot, theta) == brute_signature(knot.p, knot.q, theta)


@given(small_knots, angles)
def test_symmetric_under_conjugate_angle(knot, theta):
    assert lt_signature(knot, theta) == lt_signature(knot, 1 - theta)


@given(small_knots, st.lists(angles, max_size=8))
def test_vectorized_matches_scalar(knot, thetas):
    assert lt_signatures(knot, thetas) == [lt_signature(knot, t) for t in thetas]


@given(small_knots, angles)
def test_even_at_regular_angles(knot, theta):
    if is_regular(knot, theta):
        assert lt_signature(knot, theta) % 2 == 0
        assert signature_profile(knot).value_at(theta) == lt_signature(knot, theta)
    else:
        assert lt_signature(knot, theta) % 2 == 1


@given(small_knots, angles)
def test_bounded_by_twice_unknotting_number(knot, theta):
    assert 0 <= lt_signature(knot, theta) <= (knot.p - 1) * (knot.q - 1)
