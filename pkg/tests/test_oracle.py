import random

import pytest

from core.errors import (
    InsufficientTorsionError,
    InvalidPointError,
    InvariantDomainError,
    NoSolutionsOverFieldError,
    SearchExhaustedError,
)
from oracle.curve_search import FullTorsionCurveFinder, find_full_torsion_curve
from oracle.torsion_counts import (
    count_affine_combination,
    count_torsion_solutions,
    count_triple_pencil_pairs,
    torsion_solutions,
)
from oracle.weierstrass_curve import INFINITY, ECPoint, WeierstrassCurve, group_law, scalar_multiply


@pytest.fixture(scope="module")
def three_torsion_curve():
    curve, _ = find_full_torsion_curve(3)
    return curve


def affine(curve):
    return [P for P in curve.points if not P.is_infinity]


def test_curve_validation():
    with pytest.raises(ValueError):
        WeierstrassCurve(4, 1, 1)
    with pytest.raises(ValueError):
        WeierstrassCurve(3, 1, 1)
    with pytest.raises(ValueError):
        WeierstrassCurve(7, 0, 0)


def test_group_identities(three_torsion_curve):
    curve = three_torsion_curve
    for P in curve.points:
        assert group_law(P, INFINITY, curve) == P
        assert curve.add(P, curve.negate(P)) == INFINITY
        assert scalar_multiply(curve.order, P, curve) == INFINITY
        assert curve.multiply(-1, P) == curve.negate(P)


def test_associativity_on_sample():
    curve = WeierstrassCurve(101, 2, 3)
    rng = random.Random(7)
    for _ in range(50):
        P, Q, R = rng.sample(curve.points, 3)
        assert curve.add(curve.add(P, Q), R) == curve.add(P, curve.add(Q, R))


def test_add_rejects_point_off_curve(three_torsion_curve):
    curve = three_torsion_curve
    outside = next(
        ECPoint(x, y) for x in range(curve.p) for y in range(curve.p) if not curve.contains(ECPoint(x, y))
    )
    with pytest.raises(InvalidPointError):
        curve.add(outside, INFINITY)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_find_full_torsion_curve(n):
    curve, (n1, n2) = find_full_torsion_curve(n)
    assert curve.p % n == 1
    assert n1 % n == 0 and n2 % n1 == 0
    assert n1 * n2 == curve.order
    assert len(curve.torsion_points(n)) == n * n


def test_finder_validation():
    with pytest.raises(InvariantDomainError):
        FullTorsionCurveFinder(5)
    with pytest.raises(InvariantDomainError):
        FullTorsionCurveFinder(3, p_max=5)
    with pytest.raises(SearchExhaustedError):
        find_full_torsion_curve(4, p_max=7)


def test_triple_pencil_pairs(three_torsion_curve):
    curve = three_torsion_curve
    for base in affine(curve):
        count = count_triple_pencil_pairs(curve, base)
        assert count.triple_points == 8
        assert count.residual_simple_points == 2
        assert count.pencils == 8


def test_affine_combination_has_nine_solutions(three_torsion_curve):
    curve = three_torsion_curve
    points = affine(curve)
    for X0, Q in zip(points, reversed(points)):
        P = curve.add(curve.multiply(3, X0), curve.multiply(-2, Q))
        if P.is_infinity:
            continue
        assert count_affine_combination(curve, P, Q) == 9


def test_double_solutions():
    curve, _ = find_full_torsion_curve(2)
    for Q in affine(curve):
        target = curve.multiply(2, Q)
        assert count_torsion_solutions(curve, 2, target) == 4
    assert len(torsion_solutions(curve, 2, INFINITY)) == 4


def test_target_without_solutions(three_torsion_curve):
    curve = three_torsion_curve
    target = next(P for P in curve.points if not torsion_solutions(curve, 3, P))
    with pytest.raises(NoSolutionsOverFieldError):
        count_torsion_solutions(curve, 3, target)


def test_insufficient_torsion():
    curve = next(c for c in FullTorsionCurveFinder(2).candidates() if not c.has_full_torsion(2))
    with pytest.raises(InsufficientTorsionError):
        count_torsion_solutions(curve, 2, INFINITY)


def test_exclusions_must_lie_on_curve(three_torsion_curve):
    curve = three_torsion_curve
    outside = next(ECPoint(x, 0) for x in range(curve.p) if curve.rhs(x) != 0)
    with pytest.raises(InvalidPointError):
        count_torsion_solutions(curve, 3, INFINITY, [outside])
