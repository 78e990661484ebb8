from fractions import Fraction

import pytest

from core.errors import InvariantDomainError
from core.linear_system import evaluate_residuals
from pic.named_classes import genus2_rhs
from pic.pullback import chi_pullback
from solver.closed_form import ClosedFormVariant, closed_form, prefactor
from solver.constants_table import (
    CITED_CONSTANTS,
    DEGREE_DEPENDENT_CONSTANTS,
    ELLIPTIC_QUARTIC_PENCILS,
    inconsistent_constants,
)
from solver.constraints import (
    c0_rhs_terms,
    constraint_C0,
    constraint_elliptic_tails,
    constraint_psi,
)
from solver.report import HIGHERDELTAS_RATIO, coefficient_rows, compare_report
from solver.tr_class import TrClass, expand_tr_class, solve_tr_class, tr_constraint_system


@pytest.mark.parametrize(
    "d, coefficients",
    [
        (3, (2912, 311, 824)),
        (4, (10948, 1260, 4184, 6276)),
    ],
)
def test_solved_class(d, coefficients):
    assert solve_tr_class(d).coefficients() == coefficients


@pytest.mark.parametrize("d, rhs", [(3, 4), (4, 12), (5, 36)])
def test_elliptic_tails_rhs(d, rhs):
    row = constraint_elliptic_tails(d)
    assert row.rhs == rhs
    assert row.coefficients == (1, -12, 1)


def test_psi_row():
    assert constraint_psi(3).coefficients == (0, 0, 1)
    assert constraint_psi(3).rhs == 824
    assert constraint_psi(5).coefficients == (0, 0, Fraction(5, 3))
    assert constraint_psi(5).rhs == 35880


@pytest.mark.parametrize("d, rhs", [(3, 420), (4, 5896), (5, 47724)])
def test_c0_rhs(d, rhs):
    assert constraint_C0(d).rhs == rhs
    assert sum(c0_rhs_terms(d).values()) == rhs


def test_c0_terms_at_three():
    assert c0_rhs_terms(3) == {
        "(d-1)N(d)": 160,
        "N_2(d)": 210,
        "(d-2)e(d, 2d-4)": 48,
        "c(d,2d-4,1)+c(d,2d-4,3)+2c(d,2d-4,2)": 0,
        "{2d-4\\choose d-1}": 2,
    }


@pytest.mark.parametrize("d", range(3, 11))
def test_solution_has_zero_residuals(d):
    tr = solve_tr_class(d)
    system = tr_constraint_system(d)
    assert evaluate_residuals(system, tr.coefficients()[:3]) == [0, 0, 0]


@pytest.mark.parametrize("d", range(3, 11))
def test_solver_matches_corrected_closed_form(d):
    assert solve_tr_class(d) == closed_form(d, ClosedFormVariant.CORRECTED)


@pytest.mark.parametrize("d", range(3, 9))
def test_pullback_matches_genus2_decomposition(d):
    assert chi_pullback(solve_tr_class(d).to_mg_class(), d) == genus2_rhs(d)


def test_flag_proportionality_in_solution():
    tr = solve_tr_class(6)
    g = tr.g
    for i, b in enumerate(tr.B[1:], start=1):
        assert b == Fraction(i * (g - i), g - 1) * tr.B[1]


def test_expand_and_render():
    tr = expand_tr_class(4, 10948, 1260, 4184)
    assert tr.B == (1260, 4184, 6276)
    assert str(tr) == "10948λ - 1260δ0 - 4184δ1 - 6276δ2"
    assert tr.common_denominator() == 1
    assert TrClass.coefficient_names(4) == ("A", "B0", "B1", "B2")


def test_tr_class_validation():
    with pytest.raises(InvariantDomainError):
        TrClass.of(2, 1, [1])
    with pytest.raises(ValueError):
        TrClass.of(4, 1, [1, 2])
    with pytest.raises(InvariantDomainError):
        solve_tr_class(2)


def test_closed_form_variants_at_three():
    assert prefactor(3) == Fraction(1, 3)
    printed = closed_form(3, ClosedFormVariant.AS_PRINTED)
    assert printed.A == 2912 - 30160
    assert printed.B == (311, 824)
    higher = closed_form(3, ClosedFormVariant.HIGHERDELTAS_PRINTED)
    assert higher.B[1] * HIGHERDELTAS_RATIO == 824


@pytest.mark.parametrize("d", [3, 4, 7])
def test_compare_report_flags(d):
    report = compare_report(d)
    names = [flag.name for flag in report.flags]
    assert names == ["a_constant_1885", f"higherdeltas_factor_{HIGHERDELTAS_RATIO}"]
    assert not report.has_failure
    assert report.matches(ClosedFormVariant.CORRECTED)
    assert report.mismatched(ClosedFormVariant.AS_PRINTED) == ["A"]


def test_coefficient_rows():
    rows = coefficient_rows(compare_report(3))
    assert rows[0] == ("A", 2912, 2912, 2912 - 30160)
    assert [row[0] for row in rows] == ["A", "B0", "B1"]


def test_cited_constants_cross_check():
    assert inconsistent_constants() == {}
    assert all(c.is_consistent() for c in CITED_CONSTANTS)
    assert ELLIPTIC_QUARTIC_PENCILS.recomputed() == 38


@pytest.mark.parametrize("d", range(4, 10))
def test_degree_dependent_constants(d):
    assert all(constant.is_consistent(d) for constant in DEGREE_DEPENDENT_CONSTANTS)
