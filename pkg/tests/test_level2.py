"""Parity-level analogues: series structure, psi routes, quadrature."""

from fractions import Fraction

import mpmath
import pytest

from akzkit.level2 import (
    ath_coeffs,
    ath_series_identities,
    height_one_duality_check,
    odd_zeta_relation_check,
    psi_at_positive,
    psi_depth1_integral,
    psi_depth1_integral_check,
    psi_formula_crosscheck,
    psi_alternating_form,
    t_binomial_identity_check,
)
from akzkit.mzv_numeric import PoleError, t0_value, t_value, zeta


def _agree(a, b, extra=0):
    return abs(a.value - b.value) <= a.error_bound + b.error_bound + extra


def test_parity_pattern_zeroes_coefficients():
    # depth two wants m_1 odd and m_2 even, so odd coefficients vanish
    series = ath_coeffs((1, 1), 10)
    for n in range(1, 11, 2):
        assert series.coeffs[n] == 0
    assert series.coeffs[4] == Fraction(1, 3)  # (1 + 1/3) / 4


def test_depth_one_coefficients_are_odd_reciprocal_powers():
    series = ath_coeffs((3,), 9)
    for n in range(10):
        expected = Fraction(1, n**3) if n % 2 == 1 else Fraction(0)
        assert series.coeffs[n] == expected


def test_series_identity_battery():
    reports = ath_series_identities()
    assert len(reports) > 20
    for r in reports:
        assert r.passed, r.one_line()


def test_psi_at_one_lifts_the_last_entry():
    assert _agree(psi_at_positive(1, 2, 1), t_value((3,)))
    assert _agree(psi_at_positive(3, 1, 1), t_value((1, 1, 2)))


def test_psi_at_two_by_hand():
    # r = 1, k = 2: the composition sum has two terms
    expected = t_value((2, 2)) + t_value((1, 3)).scale(2)
    assert _agree(psi_at_positive(1, 2, 2), expected)


def test_psi_rejects_bad_parameters():
    for bad in [(0, 2, 1), (1, 0, 1), (1, 2, 0), (1, 2, -3)]:
        with pytest.raises(ValueError):
            psi_at_positive(*bad)


def test_alternate_route_diverges_at_one_for_higher_k():
    with pytest.raises(PoleError):
        psi_alternating_form(2, 2, 1)


def test_the_two_psi_routes_agree():
    reports = psi_formula_crosscheck(max_r=2, max_k=2, m_values=(1, 2, 3))
    skipped = [r for r in reports if r.status == "skipped_pole"]
    assert skipped, "expected the m=1, k>=2 instances to be skipped"
    assert not any(r.failed for r in reports)


def test_height_one_duality_battery():
    reports = height_one_duality_check(max_rk=3)
    assert reports
    assert not any(r.failed for r in reports)


def test_binomial_identity_battery():
    reports = t_binomial_identity_check(m_values=(1, 2), r_values=(1,), k_values=(2,))
    ids = {r.identity_id for r in reports}
    assert "level2.oddeven-display" in ids
    for r in reports:
        assert r.passed, r.one_line()


def test_quadrature_reproduces_the_closed_value():
    got = psi_depth1_integral(2, 1)
    ref = t_value((3,))
    assert abs(got.value - ref.value) <= got.error_bound + ref.error_bound
    # the reported quadrature bound should be far below the comparison
    # tolerance used elsewhere
    assert got.error_bound < 1e-12


def test_quadrature_battery():
    reports = psi_depth1_integral_check(k_values=(2,), s_values=(1, 2))
    for r in reports:
        assert r.passed, r.one_line()


def test_quadrature_rejects_divergent_parameters():
    with pytest.raises(ValueError):
        psi_depth1_integral(1, 1)
    with pytest.raises(ValueError):
        psi_depth1_integral(2, 0)


def test_odd_zeta_battery():
    reports = odd_zeta_relation_check()
    assert len(reports) == 7
    assert not any(r.failed for r in reports)


def test_odd_depth_one_value_directly():
    got = t0_value((3,))
    want = zeta(3).scale(Fraction(7, 8))
    assert _agree(got, want)
    assert abs(t0_value((2,)).value - mpmath.pi**2 / 8) < 1e-60
