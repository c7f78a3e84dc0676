"""Exact power-series arithmetic and the closed rational forms built on it."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from akzkit.exact_series import (
    RationalFunctionRep,
    TruncatedSeries,
    compose_one_minus_exp,
    mpl_coeffs,
    negative_mpl,
    negative_mpl_certificate_check,
    one_minus_exp,
    stirling2,
)

fractions = st.fractions(min_value=-4, max_value=4, max_denominator=20)


def series(min_size=1, max_size=7):
    return st.lists(fractions, min_size=min_size, max_size=max_size).map(
        lambda cs: TruncatedSeries(tuple(cs))
    )


@given(series(), series())
def test_addition_and_subtraction_cancel(a, b):
    cap = min(a.cap, b.cap)
    assert ((a + b) - b).coeffs == a.truncate(cap).coeffs


@given(series(), series())
def test_multiplication_commutes(a, b):
    assert (a * b).coeffs == (b * a).coeffs


@given(series(max_size=5), series(max_size=5), series(max_size=5))
def test_multiplication_distributes_over_addition(a, b, c):
    cap = min(a.cap, b.cap, c.cap)
    lhs = a * (b + c)
    rhs = a * b + a * c
    assert lhs.truncate(cap).coeffs == rhs.truncate(cap).coeffs


@given(series(), series())
def test_divide_undoes_multiplication(a, b):
    if b.coeffs[0] == 0:
        b = b + TruncatedSeries.from_list([1], b.cap)
    cap = min(a.cap, b.cap)
    assert (a * b).divide(b).truncate(cap).coeffs == a.truncate(cap).coeffs


def test_divide_requires_a_unit_constant_term():
    t = TruncatedSeries.from_list([0, 1], 4)
    with pytest.raises(ValueError):
        t.divide(TruncatedSeries.from_list([0, 1], 4))


def test_compose_substitutes_polynomials():
    # (1 + x)^2 at x = t + t^2:  1 + 2(t + t^2) + (t + t^2)^2
    outer = TruncatedSeries.from_list([1, 2, 1], 4)
    inner = TruncatedSeries.from_list([0, 1, 1], 4)
    assert outer.compose(inner).coeffs == (
        Fraction(1),
        Fraction(2),
        Fraction(3),
        Fraction(2),
        Fraction(1),
    )


def test_compose_rejects_nonzero_inner_constant():
    outer = TruncatedSeries.from_list([1, 1], 3)
    with pytest.raises(ValueError):
        outer.compose(TruncatedSeries.from_list([1, 1], 3))


@given(series(min_size=2))
def test_derivative_of_shift_recovers_leading_data(a):
    shifted = TruncatedSeries((Fraction(0),) + a.coeffs)
    assert shifted.derivative().coeffs[0] == a.coeffs[0]


def test_one_minus_exp_signs():
    plus = one_minus_exp(1, 5)   # 1 - e^t
    minus = one_minus_exp(-1, 5)  # 1 - e^-t
    assert plus.coeffs[0] == 0 and minus.coeffs[0] == 0
    assert plus.coeffs[1] == -1 and minus.coeffs[1] == 1
    assert plus.coeffs[2] == Fraction(-1, 2) and minus.coeffs[2] == Fraction(-1, 2)


def test_compose_one_minus_exp_agrees_with_generic_compose():
    cap = 10
    a = TruncatedSeries.from_list([0, 1, Fraction(1, 4), Fraction(1, 9)], cap)
    direct = a.compose(one_minus_exp(-1, cap))
    assert compose_one_minus_exp(a, -1, cap).coeffs == direct.coeffs


def test_mpl_coeffs_depth_one_is_the_polylogarithm():
    got = mpl_coeffs((2,), 6).coeffs
    assert got == tuple(
        Fraction(0) if n == 0 else Fraction(1, n * n) for n in range(7)
    )


def test_mpl_coeffs_depth_two_against_a_nested_loop():
    cap = 12
    got = mpl_coeffs((1, 2), cap).coeffs
    for n in range(cap + 1):
        expected = sum(
            (Fraction(1, m1) * Fraction(1, n * n) for m1 in range(1, n)),
            Fraction(0),
        )
        assert got[n] == expected, f"coefficient {n}"


def test_mpl_coeffs_allows_zero_and_negative_exponents():
    got = mpl_coeffs((0, -1), 5).coeffs
    for n in range(2, 6):
        expected = sum(Fraction(n) for _ in range(1, n))
        assert got[n] == expected


def test_stirling2_small_table():
    table = {
        (0, 0): 1,
        (4, 2): 7,
        (5, 3): 25,
        (6, 3): 90,
        (7, 1): 1,
        (3, 5): 0,
    }
    for (n, m), v in table.items():
        assert stirling2(n, m) == v


@given(st.integers(1, 9), st.integers(1, 9))
def test_stirling2_recurrence(n, m):
    assert stirling2(n + 1, m) == m * stirling2(n, m) + stirling2(n, m - 1)


def test_rational_rep_taylor_matches_geometric_expansion():
    # z / (1 - z)^2 = sum n z^n
    rep = RationalFunctionRep((Fraction(0), Fraction(1)), 2)
    assert rep.taylor_coefficients(6).coeffs == tuple(Fraction(n) for n in range(7))


def test_rational_rep_with_no_pole_is_the_numerator():
    rep = RationalFunctionRep((Fraction(3), Fraction(-2)), 0)
    assert rep.taylor_coefficients(4).coeffs == (
        Fraction(3),
        Fraction(-2),
        Fraction(0),
        Fraction(0),
        Fraction(0),
    )


def test_negative_mpl_depth_one_closed_form():
    # all exponents zero: the sum over 0 < m_1 < ... < m_r of z^(m_r) with
    # multiplicity binom(m_r - 1, r - 1), so z^r / (1 - z)^r
    rep = negative_mpl((0, 0))
    assert rep.pole_order == 2
    assert rep.numerator == (Fraction(0), Fraction(0), Fraction(1))


@settings(deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_negative_mpl_taylor_always_matches_the_defining_sum(parts):
    parts = tuple(parts)
    rep = negative_mpl(parts)
    cap = 14
    assert rep.taylor_coefficients(cap).coeffs == mpl_coeffs(
        tuple(-p for p in parts), cap
    ).coeffs


def test_certificate_battery_is_clean():
    reports = negative_mpl_certificate_check(max_total=8, taylor_cap=20)
    assert reports, "expected at least one certified index"
    for r in reports:
        assert r.passed, r.one_line()
