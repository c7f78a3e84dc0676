"""The xi / eta interpolations: closed forms, specializations, and the
identity batteries at reduced ranges (full ranges run in the acceptance
suite)."""

from fractions import Fraction

import pytest

from akzkit.ak_zeta import (
    display_identities_check,
    eta_at_positive,
    eta_closed_nonpositive,
    eta_closed_vs_symbolic_check,
    eta_dual_pair_check,
    eta_nonpositive_value,
    eta_symmetry_check,
    eta_threeway_check,
    eta_value_formulas_check,
    etaxi_relation_check,
    landen_check,
    nonpositive_specialization_check,
    xi_at_positive,
    xi_depth1_enumeration_check,
    xi_explicit_family,
    xi_family_crosscheck,
    xi_nonpositive,
    xi_series_representation_check,
    xitilde_closed,
)
from akzkit.mzv_numeric import PoleError, mzv, zeta
from akzkit.pbn import poly_bernoulli_B, poly_bernoulli_C


def _agree(a, b, extra=0):
    return abs(a.value - b.value) <= a.error_bound + b.error_bound + extra


def test_depth_one_at_argument_one_is_plain_zeta():
    for k in (1, 2, 3, 5):
        assert _agree(xi_at_positive((k,), 1), zeta(k + 1))


def test_eta_at_one_one_is_zeta_two():
    assert _agree(eta_at_positive((1,), 1), zeta(2))


def test_xi_21_at_2_matches_its_zeta_expansion():
    lhs = xi_at_positive((2, 1), 2)
    rhs = (mzv((2, 3)) + mzv((3, 2))).scale(2)
    assert _agree(lhs, rhs)


def test_closed_dirichlet_strings():
    assert str(eta_closed_nonpositive((1,))) == "2^-s"
    assert str(eta_closed_nonpositive((2,))) == "-2^-s + 2*3^-s"
    assert str(xitilde_closed((2,))) == "-1 + 2*2^-s"


def test_closed_forms_specialize_to_the_numbers():
    # the depth-one closed form in s is the poly-Bernoulli number with
    # the roles of the two slots exchanged, at every integer argument
    for k in range(1, 7):
        closed = eta_closed_nonpositive((k,))
        for s in range(-6, 7):
            assert closed.evaluate_exact(s) == poly_bernoulli_B(k, s)


def test_nonpositive_values_are_poly_bernoulli():
    for k in range(1, 6):
        for m in range(0, 6):
            assert eta_nonpositive_value((k,), m) == poly_bernoulli_B(m, k)
            assert xi_nonpositive((k,), m) == (-1) ** m * poly_bernoulli_C(m, k)


def test_all_zero_index_has_no_dirichlet_tilde_form():
    with pytest.raises(ValueError):
        xitilde_closed((0,))


def test_family_route_matches_the_general_route():
    cases = [((2,), 2), ((3,), 2), ((1, 2), 2), ((2, 1), 3), ((1, 1, 2), 2)]
    for index, m in cases:
        assert _agree(xi_explicit_family(index, m), xi_at_positive(index, m)), index


def test_family_route_raises_where_a_constituent_diverges():
    with pytest.raises(PoleError):
        xi_explicit_family((1, 2), 1)


def test_unsupported_family_shape_is_rejected():
    with pytest.raises(ValueError):
        xi_explicit_family((3, 2), 2)


@pytest.mark.parametrize(
    "battery",
    [
        lambda: landen_check(max_weight=4, order=14),
        lambda: etaxi_relation_check(max_weight=4, m_values=(1, 2)),
        lambda: eta_symmetry_check(max_k=3, max_n=3),
        lambda: eta_value_formulas_check(max_k=3, max_m=3),
        lambda: eta_dual_pair_check(max_k=5, max_n=5),
        lambda: xi_depth1_enumeration_check(max_k=3, max_m=3),
        lambda: eta_closed_vs_symbolic_check(max_k=8),
        lambda: nonpositive_specialization_check(max_total=5, max_m=6),
        lambda: display_identities_check(),
    ],
    ids=[
        "landen",
        "reflections",
        "symmetry",
        "depth1-formula",
        "dual-pairs",
        "depth1-enumeration",
        "closed-vs-symbolic",
        "nonpositive",
        "displays",
    ],
)
def test_identity_batteries_pass(battery):
    reports = battery()
    assert reports
    for r in reports:
        assert not r.failed, r.one_line()


def test_family_crosscheck_covers_poles_and_passes():
    reports = xi_family_crosscheck()
    assert any(r.status == "skipped_pole" for r in reports)
    assert not any(r.failed for r in reports)


def test_series_oracle_batteries_pass_at_reduced_cutoff():
    reports = eta_threeway_check(pairs=((1, 1), (1, 2), (2, 2)), cutoff=200_000)
    reports += xi_series_representation_check(max_k=2, max_n=2, cutoff=200_000)
    for r in reports:
        assert not r.failed, r.one_line()


def test_symmetric_value_spot_check():
    # eta(1; 2) = eta(2; 1) = 2 zeta(3), both slots give the same number
    a = eta_at_positive((1,), 2)
    b = eta_at_positive((2,), 1)
    target = zeta(3).scale(2)
    assert _agree(a, target)
    assert _agree(b, target)
