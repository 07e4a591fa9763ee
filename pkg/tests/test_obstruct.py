"""Decomposition, jump comparisons, the lambda functionals, and reports."""

import random
from fractions import Fraction
from math import gcd

import pytest

from lspaceknots import (
    Algebraicity,
    Cable,
    ConstraintError,
    DecompositionFailure,
    DomainError,
    NotLSpace,
    PRETZEL_P237,
    PiecewiseLinear,
    Verdict,
    algebraicity_report,
    cable,
    decompose_into_consecutive_torus,
    independence_matrix,
    jfamily,
    jump_equality,
    lambda_invariant,
    pl_combine,
    torus,
    torus_consecutive_upsilon,
    upsilon_of_knot,
)
from lspaceknots.upsilon import ZERO

F = Fraction


# --- decomposition ------------------------------------------------------------


def test_decompose_trefoil_is_itself():
    dec = decompose_into_consecutive_torus(torus_consecutive_upsilon(2))
    assert dec.coefficient_dict() == {2: 1}
    assert dec.all_integer and dec.all_nonnegative


def test_decompose_t37():
    dec = decompose_into_consecutive_torus(upsilon_of_knot(torus(3, 7)))
    assert dec.coefficient_dict() == {3: 2}
    assert dec.all_integer and dec.all_nonnegative


def test_decompose_j3_fails_at_four_fifths():
    dec = decompose_into_consecutive_torus(upsilon_of_knot(jfamily(3)))
    assert not dec.succeeded
    assert dec.failure_reason is DecompositionFailure.NON_DYADIC_LOCATION
    assert dec.failure_location == F(4, 5)


def test_decompose_zero_function():
    dec = decompose_into_consecutive_torus(ZERO)
    assert dec.succeeded and dec.coefficient_dict() == {}


def test_decompose_handles_rational_and_negative_coefficients():
    f = pl_combine(
        [
            (F(1, 2), torus_consecutive_upsilon(4)),
            (-2, torus_consecutive_upsilon(3)),
        ]
    )
    dec = decompose_into_consecutive_torus(f)
    assert dec.succeeded
    assert dec.coefficient_dict() == {4: F(1, 2), 3: -2}
    assert not dec.all_integer
    assert not dec.all_nonnegative


def test_decompose_preconditions():
    shifted = PiecewiseLinear((0, 2), 1, (0,))
    with pytest.raises(DomainError):
        decompose_into_consecutive_torus(shifted)
    asymmetric = PiecewiseLinear((0, F(1, 2), 2), 0, (F(-1), F(1, 3)))
    with pytest.raises(DomainError):
        decompose_into_consecutive_torus(asymmetric)


def test_decompose_reconstruction_on_sampled_towers():
    samples = [torus(4, 7), torus(5, 6), torus(6, 13), cable(torus(2, 3), 2, 15)]
    for knot in samples:
        f = upsilon_of_knot(knot)
        dec = decompose_into_consecutive_torus(f)
        assert dec.succeeded and dec.all_integer and dec.all_nonnegative
        rebuilt = pl_combine(
            [(c, torus_consecutive_upsilon(n)) for n, c in dec.coefficients]
        )
        assert rebuilt == f


# --- jump comparisons -----------------------------------------------------------


def test_jump_equality_t37():
    cmp = jump_equality(upsilon_of_knot(torus(3, 7)), 3)
    assert cmp.equal
    assert cmp.jump_at_2_over_p == cmp.jump_at_4_over_p == 6


def test_jump_equality_j3_at_5():
    cmp = jump_equality(upsilon_of_knot(jfamily(3)), 5)
    assert not cmp.equal
    assert (cmp.jump_at_2_over_p, cmp.jump_at_4_over_p) == (5, 0)


def test_jump_equality_constant_zero():
    assert jump_equality(ZERO, 7).equal


def test_jump_equality_rejects_even_p():
    with pytest.raises(ConstraintError):
        jump_equality(ZERO, 4)
    with pytest.raises(ConstraintError):
        jump_equality(ZERO, 1)


# --- the lambda functionals -------------------------------------------------------


def test_lambda_on_j3():
    f = upsilon_of_knot(jfamily(3))
    assert lambda_invariant(3, f) == 1
    assert lambda_invariant(4, f) == 0


def test_lambda_vanishes_on_consecutive_torus():
    assert lambda_invariant(3, torus_consecutive_upsilon(5)) == 0


def test_lambda_rejects_small_k():
    with pytest.raises(ConstraintError):
        lambda_invariant(1, ZERO)


def test_lambda_vanishes_on_random_combinations():
    rng = random.Random(5)
    for _ in range(60):
        ns = rng.sample(range(2, 21), 4)
        f = pl_combine(
            [(rng.randint(-3, 3), torus_consecutive_upsilon(n)) for n in ns]
        )
        for k in range(2, 13):
            assert lambda_invariant(k, f) == 0


def test_lambda_diagonal_on_jfamily():
    for k in (3, 5, 9):
        assert lambda_invariant(k, upsilon_of_knot(jfamily(k))) == 1


# --- independence matrix -----------------------------------------------------------


def test_matrix_single_entry():
    assert independence_matrix(3, 3) == ((F(1),),)


def test_matrix_3_to_5_triangular():
    matrix = independence_matrix(3, 5)
    for r in range(3):
        assert matrix[r][r] == 1
        for c in range(r + 1, 3):
            assert matrix[r][c] == 0


def test_matrix_rejects_bad_range():
    with pytest.raises(ConstraintError):
        independence_matrix(2, 5)
    with pytest.raises(ConstraintError):
        independence_matrix(5, 4)


# --- reports --------------------------------------------------------------------


def test_report_torus_3_7():
    report = algebraicity_report(torus(3, 7))
    assert report.verdict is Verdict.ALGEBRAIC
    assert report.closed and report.closure_witness is None
    assert report.jump_equality_failures == ()
    assert report.decomposition.succeeded
    assert report.reasons == ()


def test_report_j4():
    report = algebraicity_report(jfamily(4))
    assert report.verdict is Verdict.NOT_ALGEBRAIC
    assert report.closed  # the closure obstruction alone cannot see this family
    assert 7 in {cmp.p for cmp in report.jump_equality_failures}
    assert "jump-inequality" in report.reasons
    assert "no-consecutive-torus-expansion" in report.reasons
    assert "index-criterion" in report.reasons
    assert "semigroup-not-closed" not in report.reasons


def test_report_pretzel():
    report = algebraicity_report(PRETZEL_P237)
    assert report.verdict is Verdict.NOT_ALGEBRAIC
    assert not report.closed
    assert report.closure_witness == (3, 3)
    assert "semigroup-not-closed" in report.reasons
    assert report.index_criterion is Algebraicity.UNKNOWN


def test_report_candidate_without_obstructions():
    from lspaceknots import explicit_alexander, torus_alexander

    report = algebraicity_report(explicit_alexander(torus_alexander(2, 3)))
    assert report.verdict is Verdict.NO_OBSTRUCTION_FOUND
    assert report.index_criterion is Algebraicity.UNKNOWN
    assert report.reasons == ()


def test_report_rejects_non_lspace():
    with pytest.raises(NotLSpace):
        algebraicity_report(Cable(torus(2, 3), 2, 1))


def test_report_closure_never_fires_on_certified_towers():
    for k in range(3, 8):
        report = algebraicity_report(jfamily(k))
        assert report.closed
        assert report.verdict is Verdict.NOT_ALGEBRAIC
