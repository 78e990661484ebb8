from fractions import Fraction

import pytest

from core.errors import InvariantDomainError
from invariants.degeneration_counts import F_inv, N1_inv, N2_inv, N3_inv, N_inv
from invariants.identities import (
    IDENTITY_CHECKS,
    applicable_checks,
    check_F_schubert,
    alpha_is_a,
    check_N_decomposition,
    identity_b_eq_e,
    identity_c_combination,
    identity_N2_N3,
    identity_N_decomposition,
    identity_N_N1,
)
from invariants.pencil_counts import (
    a_inv,
    alpha,
    b_inv,
    c_inv,
    e_inv,
    hurwitz_ramification_degree,
    r_inv,
    rho,
    simple_branch_points,
)
from invariants.psi_degeneration import d3_degeneration_terms, d3_psi_via_degeneration, psi_coefficients_via_fibral_curve


@pytest.mark.parametrize(
    "func, args, expected",
    [
        (a_inv, (3, 2), 1),
        (a_inv, (4, 4), 3),
        (a_inv, (3, 1), 0),
        (b_inv, (3, 3), 24),
        (b_inv, (4, 5), 120),
        (c_inv, (4, 4, 2), 14),
        (c_inv, (4, 4, 1), 3),
        (c_inv, (3, 2, 1), 0),
        (e_inv, (3, 2), 16),
        (e_inv, (4, 4), 96),
        (e_inv, (4, 3), 48),
        (r_inv, (3, 3), 160),
        (r_inv, (3, 1), 16),
        (r_inv, (1, 1), 0),
        (r_inv, (3, 2), 70),
        (rho, (4, 1, 3), 0),
        (rho, (5, 1, 4), 1),
        (rho, (0, 1, 3), 4),
        (hurwitz_ramification_degree, (3, 2), 8),
        (hurwitz_ramification_degree, (3, 1), 6),
        (hurwitz_ramification_degree, (1, 0), 0),
        (alpha, (3,), 1),
        (alpha, (4,), 3),
    ],
)
def test_pencil_counts(func, args, expected):
    assert func(*args) == expected


@pytest.mark.parametrize(
    "func, values",
    [
        (F_inv, {3: 1, 4: 2, 6: 19}),
        (N_inv, {3: 80, 4: 912, 5: 6480}),
        (N1_inv, {3: 8, 4: 492, 5: 4440}),
        (N2_inv, {3: 70, 4: 816, 5: 5706}),
        (N3_inv, {3: 0, 4: 210, 5: 2184}),
    ],
)
def test_degeneration_counts(func, values):
    assert {d: func(d) for d in values} == values


@pytest.mark.parametrize(
    "func, args",
    [
        (a_inv, (1, 1)),
        (a_inv, (3, 7)),
        (b_inv, (2, 0)),
        (c_inv, (4, 4, 0)),
        (e_inv, (2, 2)),
        (r_inv, (1, 2)),
        (N_inv, (2,)),
        (F_inv, (1,)),
        (alpha, (2,)),
        (simple_branch_points, (2,)),
    ],
)
def test_domain_errors(func, args):
    with pytest.raises(InvariantDomainError):
        func(*args)


@pytest.mark.parametrize("d", range(3, 9))
def test_simple_branch_points(d):
    assert simple_branch_points(d) == 6 * d - 12


@pytest.mark.parametrize("d", range(3, 16))
def test_identities_hold(d):
    reports = {name: check(d) for name, check in applicable_checks(d).items()}
    failing = {name: report.residual for name, report in reports.items() if not report.holds}
    assert failing == {}


@pytest.mark.parametrize("d", [4, 7, 12])
def test_boolean_identities(d):
    assert identity_N_decomposition(d)
    assert identity_N_N1(d)
    assert identity_b_eq_e(d)
    assert identity_c_combination(d)
    assert alpha_is_a(d)


def test_applicable_checks_by_degree():
    assert set(applicable_checks(3)) == {"N_decomposition", "N_N1", "c_combination", "alpha_is_a"}
    assert set(applicable_checks(4)) == set(IDENTITY_CHECKS)


def test_decomposition_terms_at_three():
    report = check_N_decomposition(3)
    assert report.lhs == 80
    assert report.terms["two_cusp_tails"] == 64
    assert report.side_checks == {"schubert_term": True}


def test_N2_N3_needs_degree_four():
    assert identity_N2_N3(4)
    with pytest.raises(InvariantDomainError):
        identity_N2_N3(3)


def test_degeneration_counts_are_documented():
    assert all(func.__doc__ for func in (F_inv, N_inv, N1_inv, N2_inv, N3_inv))


@pytest.mark.parametrize("d", range(3, 9))
def test_F_matches_schubert_integral(d):
    assert check_F_schubert(d).holds


def test_d3_degeneration():
    terms = d3_degeneration_terms()
    assert (terms.case_i, terms.case_ii, terms.case_iii) == (600, 640, 40)
    assert terms.n0 == 1280
    assert d3_psi_via_degeneration() == 640


def test_psi_coefficients_on_fibral_curve():
    assert psi_coefficients_via_fibral_curve() == {
        "W": Fraction(3),
        "D1": Fraction(80),
        "D2": Fraction(160),
        "D3": Fraction(640),
    }
