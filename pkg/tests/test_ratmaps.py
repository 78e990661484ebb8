import random
from fractions import Fraction

import pytest
from sympy import Rational, sqrt

from core.errors import DegenerateMapError
from ratmaps.quad_ext import QuadExtScalar, quadratic_roots
from ratmaps.rational_function import (
    P1_INFINITY,
    ClosedPoint,
    FiberExpectation,
    MobiusMap,
    check_inversion_symmetry,
    compose_mobius,
    divisor_mass,
    has_ramification_divisor,
    pulled_back_divisor,
    ramification_at,
    ramification_divisor,
    ratfn,
    sample_mobius_maps,
    T,
    verify_four_one_profile,
)
from ratmaps.tail_covers import (
    PRINTED_TAIL_PARAMETERS,
    check_quartic_triple_cover,
    derive_tail_cover,
    quartic_triple_cover,
    satisfies_tail_condition,
    tail_cover_map,
    tail_cover_parameters,
    tail_parameter_polynomial,
)

ROOTS = (QuadExtScalar.of(Fraction(-1, 4), Fraction(1, 4)), QuadExtScalar.of(Fraction(-1, 4), Fraction(-1, 4)))


def q(u, v=0):
    return QuadExtScalar.of(u, v)


def test_quad_ext_arithmetic():
    root = q(0, 1)
    assert root * root == q(-2)
    assert (q(1, 1) * q(1, -1)) == q(3)
    assert q(1, 1) / q(1, 1) == q(1)
    assert q(3, 2).norm() == 17
    assert q(4).is_rational and not q(0, 1).is_rational
    assert 1 - q(1, 1) == q(0, -1)
    assert q(1, 1) ** -1 * q(1, 1) == q(1)
    with pytest.raises(ZeroDivisionError):
        q(1) / q(0)


def test_quad_ext_sympy_roundtrip():
    assert QuadExtScalar.from_sympy(sqrt(-2)) == q(0, 1)
    value = q(Fraction(-1, 4), Fraction(1, 4))
    assert QuadExtScalar.from_sympy(value.to_sympy()) == value


def test_quad_ext_rendering():
    assert str(q(Fraction(-1, 4), Fraction(1, 4))) == "-1/4 + 1/4√−2"
    assert str(q(0, -1)) == "-√−2"
    assert str(q(5)) == "5"
    assert q(1, 1).to_latex() == "1 + \\sqrt{-2}"


def test_quadratic_roots():
    assert quadratic_roots(16, 8, 3) == ROOTS
    assert quadratic_roots(1, -3, 2) == (q(2), q(1))
    with pytest.raises(ValueError):
        quadratic_roots(1, 0, 1)
    with pytest.raises(ValueError):
        quadratic_roots(0, 1, 1)


def test_ramification_of_power_map():
    assert ramification_divisor(ratfn(T**3)) == {q(0): 2, P1_INFINITY: 2}


def test_ramification_with_closed_point():
    divisor = ramification_divisor(ratfn(T**3 + 3 * T))
    closed = [point for point in divisor if isinstance(point, ClosedPoint)]
    assert len(closed) == 1 and closed[0].degree == 2
    assert divisor[P1_INFINITY] == 2
    assert divisor_mass(divisor) == 4


def test_constant_map_is_degenerate():
    with pytest.raises(DegenerateMapError):
        ramification_divisor(ratfn(5))


def test_inversion_symmetry():
    assert check_inversion_symmetry(ratfn(T**3)) == q(1)
    assert check_inversion_symmetry(ratfn(T**2 + 1)) is None


def test_quartic_triple_cover():
    f = quartic_triple_cover()
    assert f.degree == 4
    assert (f.derivative_numerator() - ratfn(12 * T**2 * (T - 1) ** 2).numerator).is_zero
    check = check_quartic_triple_cover()
    assert check.ramification == {q(0): 2, q(1): 2, P1_INFINITY: 2}
    assert check.inversion_constant == q(4)
    assert check.inversion_discrepancy


def test_fiber_profile():
    f = quartic_triple_cover()
    assert f.fiber_multiplicity(q(0), q(0)) == 3
    assert f.fiber_multiplicity(q(0), q(2)) == 1
    assert f.fiber_multiplicity(P1_INFINITY, P1_INFINITY) == 3
    assert verify_four_one_profile(f, [FiberExpectation(q(0), q(0), 3), FiberExpectation(q(0), q(2), 1)])
    assert not verify_four_one_profile(f, [FiberExpectation(q(0), q(2), 2)])
    assert not verify_four_one_profile(ratfn(T**3), [])


def test_tail_parameter_polynomial():
    polynomial = tail_parameter_polynomial()
    assert polynomial.all_coeffs() == [256, -256, 0, 0, 27]


def test_derive_tail_cover():
    derivation = derive_tail_cover()
    assert set(derivation.parameters) == set(ROOTS)
    assert derivation.degenerate_root == q(Fraction(3, 4))
    assert derivation.degenerate_multiplicity == 2
    assert derivation.sign_discrepancy
    assert derivation.printed_satisfy_condition == (False, False)
    assert tail_cover_parameters() == derivation.parameters


def test_tail_condition():
    for r in ROOTS:
        assert satisfies_tail_condition(r)
    for r in PRINTED_TAIL_PARAMETERS:
        assert not satisfies_tail_condition(r)
    assert satisfies_tail_condition(q(Fraction(3, 4)))


def test_tail_cover_ramification():
    r = ROOTS[0]
    divisor = ramification_divisor(tail_cover_map(r))
    assert divisor == {q(0): 3, Fraction(4, 3) * r: 1, P1_INFINITY: 2}


def test_mobius_invariance_deterministic():
    shift = MobiusMap.of(1, 1, 0, 1)
    f = ratfn(T**3)
    assert ramification_divisor(compose_mobius(f, shift)) == {q(-1): 2, P1_INFINITY: 2}
    assert pulled_back_divisor(ramification_divisor(f), shift) == {q(-1): 2, P1_INFINITY: 2}


def test_mobius_invariance_sampled():
    f = quartic_triple_cover()
    divisor = ramification_divisor(f)
    for mobius in sample_mobius_maps(random.Random(11), 3):
        composed = ramification_divisor(compose_mobius(f, mobius))
        assert composed == pulled_back_divisor(divisor, mobius)
        assert divisor_mass(composed) == 6


def test_rational_quadratic_branch_points_split_over_field():
    f = ratfn(Rational(16, 3) * T**3 + 4 * T**2 + 3 * T)
    first, second = quadratic_roots(16, 8, 3)
    assert ramification_divisor(f) == {first: 1, second: 1, P1_INFINITY: 2}


def test_pointwise_ramification_matches_divisor():
    f = quartic_triple_cover()
    divisor = ramification_divisor(f)
    assert all(ramification_at(f, point) == k for point, k in divisor.items())
    assert has_ramification_divisor(f, divisor)
    assert not has_ramification_divisor(f, {q(0): 2, q(1): 2, q(2): 2})
    assert not has_ramification_divisor(f, {q(0): 2, q(1): 2})


def test_mobius_invariance_of_tail_covers():
    mobius = MobiusMap.of(2, -1, 1, 3)
    for r in ROOTS:
        f = tail_cover_map(r)
        composed = compose_mobius(f, mobius)
        assert composed.degree == 4
        assert has_ramification_divisor(composed, pulled_back_divisor(ramification_divisor(f), mobius))


def test_composition_keeps_closed_points():
    f = ratfn(T**3 + 3 * T)
    composed = compose_mobius(f, MobiusMap.of(1, 1, 0, 1))
    assert divisor_mass(ramification_divisor(composed)) == 4
    assert has_ramification_divisor(composed, ramification_divisor(composed))


def test_mobius_must_be_invertible():
    with pytest.raises(ValueError):
        MobiusMap.of(1, 2, 2, 4)
