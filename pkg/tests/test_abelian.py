import pytest

from abelian.ee_lattice import (
    DIAGONAL,
    F1,
    F2,
    EECurveClass,
    ee_class_from_pairings,
    ee_half_self_intersection,
    ee_intersect,
    elliptic_pencil_count_u_v,
    named_ee_classes,
)
from abelian.theta_pullback import (
    ENU3_DIAGONAL_EXCESS,
    enu3_count,
    excess_corrected_count,
    theta_pullback_closed_form,
    theta_pullback_degree,
)
from core.errors import InvariantDomainError


def test_gram_matrix():
    assert ee_intersect(F1, F2) == ee_intersect(F1, DIAGONAL) == ee_intersect(F2, DIAGONAL) == 1
    assert ee_intersect(F1, F1) == ee_intersect(DIAGONAL, DIAGONAL) == 0


@pytest.mark.parametrize(
    "pairings, expected",
    [
        ((15, 3, 8), EECurveClass.of(10, 5, -2)),
        ((8, 3, 3), EECurveClass.of(4, 4, -1)),
        ((9, 4, 1), EECurveClass.of(3, 6, -2)),
    ],
)
def test_class_from_pairings(pairings, expected):
    reconstructed = ee_class_from_pairings(*pairings)
    assert reconstructed == expected
    assert (
        ee_intersect(reconstructed, DIAGONAL),
        ee_intersect(reconstructed, F1),
        ee_intersect(reconstructed, F2),
    ) == pairings


def test_sigma_self_intersection():
    sigma = named_ee_classes()["Sigma"]
    assert ee_intersect(sigma, sigma) == 40
    assert ee_half_self_intersection(sigma) == 20
    assert str(sigma) == "10F₁ + 5F₂ + -2Δ"


def test_u_v_count():
    assert elliptic_pencil_count_u_v() == 11


@pytest.mark.parametrize("g, b, c, expected", [(2, 3, 3, 162), (3, 2, 3, 216), (2, 1, 1, 2)])
def test_theta_pullback_degree(g, b, c, expected):
    assert theta_pullback_degree(g, b, c) == expected


@pytest.mark.parametrize("g", [2, 3, 4])
@pytest.mark.parametrize("b, c", [(1, 2), (2, 2), (3, 1)])
def test_theta_pullback_matches_closed_form(g, b, c):
    assert theta_pullback_degree(g, b, c) == theta_pullback_closed_form(g, b, c)


def test_theta_pullback_domain():
    with pytest.raises(InvariantDomainError):
        theta_pullback_degree(1, 1, 1)
    with pytest.raises(InvariantDomainError):
        theta_pullback_degree(2, 0, 1)


def test_excess_corrected_counts():
    assert excess_corrected_count(3, 3) == 160
    assert excess_corrected_count(3, 2) == 70
    with pytest.raises(InvariantDomainError):
        excess_corrected_count(2, 3)


def test_enu3():
    assert ENU3_DIAGONAL_EXCESS.is_consistent()
    assert enu3_count() == 210
