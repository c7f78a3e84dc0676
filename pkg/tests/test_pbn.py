"""Poly-Bernoulli numbers: sentinel values, dualities, and the oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from akzkit.mzv_numeric import bernoulli_number
from akzkit.pbn import (
    B_symbolic,
    C_symbolic,
    bivariate_generating_check,
    congruence_check,
    duality_check_B,
    duality_check_C,
    finite_mzv_mod_p,
    multi_poly_bernoulli,
    multi_poly_bernoulli_brute,
    poly_bernoulli_B,
    poly_bernoulli_B_stirling,
    poly_bernoulli_C,
    poly_bernoulli_C_stirling,
    stirling_oracle_check,
)


def test_first_column_sentinels():
    assert poly_bernoulli_B(1, 1) == Fraction(1, 2)
    assert poly_bernoulli_C(1, 1) == Fraction(-1, 2)
    assert poly_bernoulli_B(0, 5) == 1
    assert poly_bernoulli_C(0, 5) == 1


def test_negative_upper_index_values_are_the_lonesum_counts():
    # the symmetric table: rows n, columns k, both negated
    assert poly_bernoulli_B(1, -1) == 2
    assert poly_bernoulli_B(2, -2) == 14
    assert poly_bernoulli_B(3, -2) == 46
    assert poly_bernoulli_B(2, -3) == 46


def test_k_equal_one_collapses_to_classical_bernoulli():
    for n in range(13):
        expected = bernoulli_number(n)
        if n == 1:
            expected = -expected
        assert poly_bernoulli_B(n, 1) == expected


@given(st.integers(0, 10), st.integers(0, 10))
def test_symmetric_duality_for_B(n, k):
    assert poly_bernoulli_B(n, -k) == poly_bernoulli_B(k, -n)


@given(st.integers(0, 10), st.integers(0, 10))
def test_shifted_duality_for_C(n, k):
    assert poly_bernoulli_C(n, -k - 1) == poly_bernoulli_C(k, -n - 1)


def test_duality_check_batteries_pass_exactly():
    for reports in (duality_check_B(8, 8), duality_check_C(8, 8)):
        assert reports
        for r in reports:
            assert r.status == "pass_exact", r.one_line()


@given(st.integers(0, 14), st.integers(-6, 6))
@settings(deadline=None)
def test_stirling_sums_agree_with_the_generating_series(n, k):
    assert poly_bernoulli_B_stirling(n, k) == poly_bernoulli_B(n, k)
    assert poly_bernoulli_C_stirling(n, k) == poly_bernoulli_C(n, k)


def test_stirling_oracle_battery():
    reports = stirling_oracle_check(max_n=18, max_abs_k=5)
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("kind", ["B", "C"])
@pytest.mark.parametrize(
    "index", [(2,), (-2,), (1, 2), (2, -1), (0, 1), (1, 1, 1), (2, 1, -2)]
)
def test_multi_index_series_matches_brute_force(kind, index):
    for n in range(9):
        assert multi_poly_bernoulli(n, index, kind) == multi_poly_bernoulli_brute(
            n, index, kind
        ), (kind, index, n)


def test_multi_index_depth_one_reduces_to_the_plain_numbers():
    for n in range(10):
        for k in range(-4, 5):
            assert multi_poly_bernoulli(n, (k,), "B") == poly_bernoulli_B(n, k)
            assert multi_poly_bernoulli(n, (k,), "C") == poly_bernoulli_C(n, k)


def test_symbolic_forms_print_as_dirichlet_polynomials():
    assert str(B_symbolic(1)) == "2^-s"
    assert str(B_symbolic(2)) == "-2^-s + 2*3^-s"
    assert str(C_symbolic(1)) == "-1 + 2^-s"


def test_symbolic_forms_evaluate_to_the_numbers():
    for n in range(1, 9):
        bsym = B_symbolic(n)
        csym = C_symbolic(n)
        for k in range(-5, 6):
            assert bsym.evaluate_exact(k) == poly_bernoulli_B(n, k)
            assert csym.evaluate_exact(k) == poly_bernoulli_C(n, k)


def test_bivariate_generating_function_rows():
    reports = bivariate_generating_check(max_n=7, max_k=7)
    assert reports
    assert all(r.passed for r in reports)


def test_finite_sum_congruence_battery():
    reports = congruence_check()
    assert any(r.status == "pass_exact" for r in reports)
    assert not any(r.failed for r in reports)
    # bad primes must be skipped, not silently compared
    for r in reports:
        assert r.status in ("pass_exact", "skipped_bad_prime"), r.one_line()


def test_finite_sum_mod_p_small_case_by_hand():
    # sum of 1/m over 0 < m < 5, inverses mod 5: 1 + 3 + 2 + 4 = 10 = 0
    assert finite_mzv_mod_p((1,), 5) == 0


def test_rejects_garbage_indices():
    with pytest.raises((ValueError, TypeError)):
        multi_poly_bernoulli(3, (), "B")
    with pytest.raises(ValueError):
        multi_poly_bernoulli(3, (1,), "Q")
    with pytest.raises((ValueError, TypeError)):
        poly_bernoulli_B(-1, 2)
