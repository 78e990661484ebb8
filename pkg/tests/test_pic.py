from fractions import Fraction

import pytest

from core.errors import InvariantDomainError, PullbackUndefinedError
from pic.classes import M21Class, MgClass, mumford_reduce
from pic.named_classes import DIAZ_CLASS, genus2_coefficients, genus2_rhs, named_classes, reconstruct_D1, solve_for_named_class
from pic.pullback import (
    ELLIPTIC_PENCIL,
    chi_pullback,
    elliptic_pencil_intersection,
    flag_coefficients,
    moving_node_intersection,
)
from solver.tr_class import solve_tr_class


def test_mumford_reduction():
    w = named_classes()["W"]
    assert mumford_reduce(w) == M21Class.of(3, -6, Fraction(1, 2))
    assert mumford_reduce(w).delta1 == 0
    assert w == M21Class.of(3, -6, Fraction(1, 2))
    assert hash(w) == hash(mumford_reduce(w))


def test_class_arithmetic_and_rendering():
    tr3 = MgClass.of(3, 2912, [-311, -824])
    assert str(tr3) == "2912λ - 311δ0 - 824δ1"
    assert tr3.to_latex() == "2912\\lambda - 311\\delta_{0} - 824\\delta_{1}"
    assert str(named_classes()["W"]) == "3ψ - λ - δ1"
    assert tr3 - tr3 == MgClass.zero(3)
    assert str(MgClass.zero(3)) == "0"


def test_class_validation():
    with pytest.raises(ValueError):
        MgClass.of(1, 1, [0])
    with pytest.raises(ValueError):
        MgClass.of(5, 1, [0, 0])
    with pytest.raises(ValueError):
        MgClass.zero(3) + MgClass.zero(4)


def test_chi_pullback_of_diaz():
    assert chi_pullback(DIAZ_CLASS).vector == (128, 264, -30, -96)


def test_chi_pullback_genus3_shifts_delta1():
    pulled = chi_pullback(MgClass.of(3, 2912, [-311, -824]), d=3)
    assert pulled.vector == (824, 2912, -311, -824)
    assert pulled == M21Class.of(824, -1208, 101)


def test_chi_pullback_drops_higher_deltas():
    c = MgClass.of(7, 1, [2, 3, 4, 5])
    assert chi_pullback(c, d=5).vector == (-4, 1, 2, 3)


def test_chi_pullback_undefined():
    with pytest.raises(PullbackUndefinedError):
        chi_pullback(MgClass.zero(2))
    with pytest.raises(PullbackUndefinedError):
        chi_pullback(MgClass.zero(5), d=3)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_diaz_pullback_rejects_degree(d):
    with pytest.raises(PullbackUndefinedError):
        chi_pullback(DIAZ_CLASS, d=d)


def test_reconstruct_D1():
    assert reconstruct_D1() == M21Class.of(80, -120, 10)
    assert reconstruct_D1() == named_classes()["D1"]


def test_diaz_splits_into_D1_and_weierstrass():
    classes = named_classes()
    assert chi_pullback(DIAZ_CLASS) == classes["D1"] + 16 * classes["W"]


@pytest.mark.parametrize(
    "d, expected",
    [(3, M21Class.of(824, -1208, 101)), (4, M21Class.of(6276, -9972, 832))],
)
def test_genus2_rhs(d, expected):
    assert genus2_rhs(d) == expected


def test_genus2_coefficients():
    assert genus2_coefficients(3) == {"W": 8, "D1": 8, "D2": 1, "D3": 0}
    with pytest.raises(InvariantDomainError):
        genus2_coefficients(2)


@pytest.mark.parametrize("d, target", [(3, "D2"), (4, "D3"), (5, "D1")])
def test_named_class_routes(d, target):
    tr = solve_tr_class(d).to_mg_class()
    assert solve_for_named_class(tr, d, target) == named_classes()[target]


def test_named_class_route_needs_nonzero_coefficient():
    tr = solve_tr_class(3).to_mg_class()
    with pytest.raises(InvariantDomainError):
        solve_for_named_class(tr, 3, "D3")


def test_flag_coefficients():
    assert flag_coefficients(9, 8) == (8, 14, 18, 20)
    assert flag_coefficients(5, 4184)[1] == 6276
    with pytest.raises(InvariantDomainError):
        flag_coefficients(2, 1)


def test_test_curve_intersections():
    tr3 = MgClass.of(3, 2912, [-311, -824])
    assert ELLIPTIC_PENCIL.unknown_row() == [1, -12, 1]
    assert elliptic_pencil_intersection(tr3) == 4
    assert moving_node_intersection(tr3) == 420
