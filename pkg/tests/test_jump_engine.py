import itertools

import pytest
from hypothesis import given, settings, strategies as st

from newtonjump import InvalidInputError, NotConvenientError, Support, newton_number, parse_germ
from newtonjump.geometry import build_diagram
from newtonjump.jump_engine import (
    enumerate_candidates,
    evaluate_candidates,
    jump_of_candidate,
    lambda_nd_bruteforce,
    lambda_nd_degenerate,
)

from conftest import convenient_supports


def triangle(p, q, r):
    return Support.of((p, 0, 0), (0, q, 0), (0, 0, r))


def test_candidates_a1():
    expected = sorted(
        p for p in itertools.product(range(3), repeat=3) if any(p) and sum(p) <= 2
    )
    assert len(expected) == 9
    assert enumerate_candidates(triangle(2, 2, 2)) == expected


def test_candidates_unit_simplex():
    assert enumerate_candidates(triangle(1, 1, 1)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_candidates_paper_triangle_count():
    oracle = [
        (a, b, c)
        for a in range(12) for b in range(7) for c in range(6)
        if (a, b, c) != (0, 0, 0) and 30 * a + 55 * b + 66 * c <= 330
    ]
    got = enumerate_candidates(triangle(11, 6, 5))
    assert got == sorted(oracle)
    assert len(got) == 101


def test_candidates_require_convenience():
    with pytest.raises(NotConvenientError):
        enumerate_candidates(Support.of((2, 0, 0), (0, 2, 0)))


@pytest.mark.parametrize(
    "exponent, jump",
    [
        ((1, 3, 2), 3),
        ((10, 0, 0), 20),
        ((9, 1, 0), 4),
        ((0, 1, 4), 10),
        ((2, 0, 4), 5),
        ((11, 0, 0), 0),
        ((0, 6, 0), 0),
        ((5, 5, 5), 0),
    ],
)
def test_jump_of_candidate_paper_triangle(paper_example, exponent, jump):
    c = jump_of_candidate(paper_example, exponent)
    assert c.jump == jump
    assert c.nu_after == 200 - jump


def test_jump_of_candidate_rejects_bad_exponent(paper_example):
    with pytest.raises(InvalidInputError):
        jump_of_candidate(paper_example, (0, 0, 0))
    with pytest.raises(InvalidInputError):
        jump_of_candidate(paper_example, (1, 2))


@settings(max_examples=40, deadline=None)
@given(convenient_supports(box=7, max_extra=4))
def test_diagram_vertices_give_zero_jump(s):
    for v in build_diagram(s).vertices:
        assert jump_of_candidate(s, v).jump == 0


def test_bruteforce_paper_example(paper_example):
    report = lambda_nd_bruteforce(paper_example)
    assert report.lambda_nd == 3
    assert (1, 3, 2) in report.realizing_exponents
    assert report.nu_before == 200
    assert report.candidates_examined == 101
    assert report.method == "bruteforce"
    for e in report.realizing_exponents:
        assert jump_of_candidate(paper_example, e).jump == 3


@pytest.mark.parametrize("p, q, r, lam", [(2, 2, 2, 1), (5, 3, 2, 1)])
def test_bruteforce_small(p, q, r, lam):
    assert lambda_nd_bruteforce(triangle(p, q, r)).lambda_nd == lam


def test_bruteforce_trace(paper_example):
    report = lambda_nd_bruteforce(paper_example, trace=True)
    assert len(report.trace) == 101
    assert {"exponent": [1, 3, 2], "nu_after": 197, "jump": 3} in report.trace
    assert report.to_dict()["trace"] == report.trace


def test_parallel_evaluation_is_deterministic(paper_example):
    serial = evaluate_candidates(paper_example)
    parallel = evaluate_candidates(paper_example, jobs=2)
    assert serial == parallel
    assert lambda_nd_bruteforce(paper_example, jobs=2).to_dict() == lambda_nd_bruteforce(paper_example).to_dict()


def test_smooth_germ_has_no_positive_jump():
    from newtonjump import InvariantViolation

    with pytest.raises(InvariantViolation):
        lambda_nd_bruteforce(triangle(1, 4, 4))


def test_degenerate_branches():
    a1 = triangle(2, 2, 2)
    assert lambda_nd_degenerate(a1, 4).lambda_nd == 3
    assert lambda_nd_degenerate(a1, 4).method == "degenerate"
    assert lambda_nd_degenerate(a1, 1).lambda_nd == 1
    assert lambda_nd_degenerate(triangle(11, 6, 5), 200).lambda_nd == 3
    with pytest.raises(InvalidInputError):
        lambda_nd_degenerate(a1, 0)


def test_plane_curve_bruteforce():
    s = parse_germ("x^4 + y^4", dimension=2)
    report = lambda_nd_bruteforce(s)
    # by hand from 2A - W1 - W2 + 1: (3,0) -> 12-7+1 = 6, (1,2) -> 12-8+1 = 5, (1,1) -> 8-8+1 = 1
    assert newton_number(s) == 9
    assert jump_of_candidate(s, (1, 2)).jump == 4
    assert jump_of_candidate(s, (1, 1)).jump == 8
    assert report.lambda_nd == 3
    assert report.realizing_exponents == [(0, 3), (3, 0)]


@settings(max_examples=30, deadline=None)
@given(convenient_supports(box=6, max_extra=3), st.permutations([0, 1, 2]))
def test_lambda_permutation_invariant(s, perm):
    if newton_number(s) == 0:
        return
    moved = Support(3, frozenset(tuple(p[perm[i]] for i in range(3)) for p in s.points))
    a = lambda_nd_bruteforce(s)
    b = lambda_nd_bruteforce(moved)
    assert a.lambda_nd == b.lambda_nd
    assert 1 <= a.lambda_nd <= a.nu_before


@settings(max_examples=30, deadline=None)
@given(convenient_supports(box=6, max_extra=3))
def test_candidate_jumps_nonnegative_and_in_region(s):
    d = build_diagram(s)
    nu = newton_number(s)
    for c in evaluate_candidates(s):
        assert 0 <= c.jump <= nu
        assert all(0 <= x <= w for x, w in zip(c.exponent, d.axis_intercepts))
