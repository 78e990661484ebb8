from fractions import Fraction

import pytest

from core.cited_constant import CitedConstant
from core import linear_system
from core.errors import DerivationInconsistencyError, InconsistentSystemError, UnderdeterminedSystemError
from core.linear_system import LinearRow, LinearSystem, evaluate_residuals, solve_linear
from core.scalar import as_integer, binomial, format_rational, inv_factorial, latex_rational


@pytest.mark.parametrize("n, expected", [(0, 1), (3, Fraction(1, 6)), (-1, 0), (-2, 0)])
def test_inv_factorial(n, expected):
    assert inv_factorial(n) == expected


@pytest.mark.parametrize("n, k, expected", [(4, 3, 4), (2, 3, 0), (5, -1, 0), (-2, 1, 0), (10, 5, 252)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_as_integer_rejects_fraction():
    assert as_integer(Fraction(12, 4)) == 3
    with pytest.raises(ValueError, match="a\\(3,2\\)"):
        as_integer(Fraction(1, 2), "a(3,2)")


def test_formatting():
    assert format_rational(Fraction(103, 6)) == "103/6"
    assert format_rational(Fraction(-8, 2)) == "-4"
    assert latex_rational(Fraction(-1, 2)) == "-\\frac{1}{2}"
    assert latex_rational(7) == "7"


def test_solve_linear_overdetermined_consistent():
    system = LinearSystem.from_rows(
        LinearRow.of([1, 1], 3, "sum"),
        LinearRow.of([1, -1], 1, "difference"),
        LinearRow.of([2, 0], 4, "double"),
    )
    solution = solve_linear(system)
    assert solution == [2, 1]
    assert evaluate_residuals(system, solution) == [0, 0, 0]
    assert system.rows[1].describe(["x", "y"]) == "1·x + -1·y = 1"


def test_solve_linear_fractions():
    system = LinearSystem.from_rows(LinearRow.of([3, 0], 1, "x"), LinearRow.of([0, 2], 5, "y"))
    assert solve_linear(system) == [Fraction(1, 3), Fraction(5, 2)]


def test_solve_linear_inconsistent_names_row():
    system = LinearSystem.from_rows(
        LinearRow.of([1, 1], 3, "first"),
        LinearRow.of([2, 2], 7, "second"),
    )
    with pytest.raises(InconsistentSystemError) as excinfo:
        solve_linear(system)
    assert excinfo.value.label == "second"


def test_solve_linear_underdetermined_reports_deficiency():
    system = LinearSystem.from_rows(LinearRow.of([1, 1, 0], 3, "only"))
    with pytest.raises(UnderdeterminedSystemError) as excinfo:
        solve_linear(system)
    assert excinfo.value.deficiency == 2


def test_solve_linear_rejects_nonzero_residual(monkeypatch):
    system = LinearSystem.from_rows(LinearRow.of([1, 0], 1, "x"), LinearRow.of([0, 1], 2, "y"))
    monkeypatch.setattr(linear_system, "evaluate_residuals", lambda system, solution: [Fraction(0), Fraction(1)])
    with pytest.raises(DerivationInconsistencyError, match=r"ungleich 0 in y$"):
        solve_linear(system)


@pytest.mark.parametrize(
    "rows",
    [
        (),
        (LinearRow.of([1], 1, "a"), LinearRow.of([1, 2], 1, "b")),
        (LinearRow.of([1], 1, "a"), LinearRow.of([2], 2, "a")),
    ],
)
def test_linear_system_validation(rows):
    with pytest.raises(ValueError):
        LinearSystem(rows)


def test_cited_constant_cross_check():
    assert CitedConstant("plain", 5, "quote").is_consistent()
    assert CitedConstant("checked", 6, "quote", lambda: 6).is_consistent()
    assert not CitedConstant("drifted", 6, "quote", lambda: 7).is_consistent()
