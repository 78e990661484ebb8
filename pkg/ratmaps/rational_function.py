"""
Rationale Funktionen P¹ → P¹ über ℚ(√−2).

Zähler und Nenner werden so gespeichert, wie sie gegeben sind: gemeinsame
Faktoren werden gekürzt, die Skalierung bleibt erhalten. Punkte der
projektiven Geraden sind `QuadExtScalar`, `P1_INFINITY` oder (für nicht
rationale Nullstellen) ein `ClosedPoint`.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import Poly, QQ, Symbol, fraction, sqrt, sympify, together

from core.errors import DegenerateMapError
from core.scalar import Rational
from ratmaps.quad_ext import QuadExtScalar, quadratic_roots

logger = logging.getLogger(__name__)

T = Symbol("t")
FIELD = QQ.algebraic_field(sqrt(-2))


@dataclass(frozen=True)
class PointAtInfinity:
    def __str__(self) -> str:
        return "∞"


P1_INFINITY = PointAtInfinity()


@dataclass(frozen=True)
class ClosedPoint:
    """Nullstellen eines irreduziblen Faktors vom Grad > 1."""

    factor: str
    degree: int

    def __str__(self) -> str:
        return f"V({self.factor})"


Point = Union[QuadExtScalar, PointAtInfinity, ClosedPoint]


def _poly(expr) -> Poly:
    return Poly(expr, T, domain=FIELD)


def _reversed(poly: Poly) -> Poly:
    """t^deg · p(1/t)."""
    return Poly(list(reversed(poly.all_coeffs())), T, domain=FIELD)


def root_multiplicity(poly: Poly, point: QuadExtScalar) -> int:
    if poly.is_zero:
        raise DegenerateMapError("das Nullpolynom")
    linear = _poly(T - point.to_sympy())
    multiplicity = 0
    while poly.degree() > 0 and poly.rem(linear).is_zero:
        poly = poly.exquo(linear)
        multiplicity += 1
    return multiplicity


@dataclass(frozen=True)
class RatFn:
    numerator: Poly
    denominator: Poly

    @classmethod
    def from_expr(cls, expr) -> "RatFn":
        top, bottom = fraction(together(sympify(expr)))
        numerator, denominator = _poly(top), _poly(bottom)
        if denominator.is_zero:
            raise DegenerateMapError(f"{expr} (Nenner 0)")
        common = numerator.gcd(denominator)
        if common.degree() > 0:
            numerator, denominator = numerator.exquo(common), denominator.exquo(common)
        return cls(numerator, denominator)

    def __str__(self) -> str:
        return f"({self.numerator.as_expr()})/({self.denominator.as_expr()})"

    @property
    def degree(self) -> int:
        return max(self.numerator.degree(), self.denominator.degree())

    def derivative_numerator(self) -> Poly:
        """N'·D − N·D'."""
        return self.numerator.diff(T) * self.denominator - self.numerator * self.denominator.diff(T)

    def evaluate(self, point: Point) -> Point:
        if isinstance(point, PointAtInfinity):
            n, m = self.numerator.degree(), self.denominator.degree()
            if n > m:
                return P1_INFINITY
            if n < m:
                return QuadExtScalar.of(0)
            return QuadExtScalar.from_sympy(self.numerator.LC()) / QuadExtScalar.from_sympy(self.denominator.LC())

        value = point.to_sympy()
        denominator = QuadExtScalar.from_sympy(self.denominator.eval(value))
        if denominator == QuadExtScalar.of(0):
            return P1_INFINITY
        return QuadExtScalar.from_sympy(self.numerator.eval(value)) / denominator

    def infinity_ramification(self) -> int:
        """Verzweigungsindex − 1 im Punkt ∞, berechnet in der Koordinate 1/t."""
        n, m = self.numerator.degree(), self.denominator.degree()
        if n != m:
            return abs(n - m) - 1
        rest = self.numerator.mul_ground(self.denominator.LC()) - self.denominator.mul_ground(self.numerator.LC())
        if rest.is_zero:
            raise DegenerateMapError(str(self))
        return m - rest.degree() - 1

    def fiber_multiplicity(self, target: Point, point: Point) -> int:
        """Vielfachheit von `point` in der Faser f*(target)."""
        if isinstance(target, PointAtInfinity):
            if isinstance(point, PointAtInfinity):
                return max(self.numerator.degree() - self.denominator.degree(), 0)
            return root_multiplicity(self.denominator, point)

        shifted = self.numerator - self.denominator.mul_ground(target.to_sympy())
        if shifted.is_zero:
            raise DegenerateMapError(str(self))
        if isinstance(point, PointAtInfinity):
            return max(self.denominator.degree() - shifted.degree(), 0)
        return root_multiplicity(shifted, point)


def ratfn(expr) -> RatFn:
    return RatFn.from_expr(expr)


def _split_factor(factor: Poly) -> List[Point]:
    """Punkte eines über ℚ bzw. ℚ(√−2) irreduziblen Faktors."""
    coefficients = [QuadExtScalar.from_sympy(c) for c in factor.all_coeffs()]
    if factor.degree() == 1:
        leading, constant = coefficients
        return [-constant / leading]
    if factor.degree() == 2 and all(c.is_rational for c in coefficients):
        try:
            return list(quadratic_roots(*(c.u for c in coefficients)))
        except ValueError:
            pass
    return [ClosedPoint(str(factor.monic().as_expr()), factor.degree())]


def _field_factors(poly: Poly) -> List[Tuple[Poly, int]]:
    """Faktoren über ℚ(√−2); Potenzen von t und lineare Reste ohne Faktorisierung."""
    coefficients = poly.all_coeffs()
    zeros = 0
    while coefficients[-1 - zeros] == 0:
        zeros += 1
    factors: List[Tuple[Poly, int]] = [(_poly(T), zeros)] if zeros else []
    rest = Poly(coefficients[: len(coefficients) - zeros], T, domain=FIELD)
    if rest.degree() == 1:
        return factors + [(rest, 1)]
    if rest.degree() > 1:
        factors += rest.factor_list()[1]
    return factors


def _factors(poly: Poly) -> List[Tuple[Poly, int]]:
    """
    Irreduzible Faktoren über ℚ(√−2).

    Bei rationalen Koeffizienten wird über ℚ faktorisiert; nur Faktoren vom
    Grad ≥ 3 werden danach noch über ℚ(√−2) zerlegt.
    """
    if not all(QuadExtScalar.from_sympy(c).is_rational for c in poly.all_coeffs()):
        return _field_factors(poly)
    factors: List[Tuple[Poly, int]] = []
    for factor, multiplicity in Poly(poly.as_expr(), T, domain=QQ).factor_list()[1]:
        if factor.degree() <= 2:
            factors.append((factor, multiplicity))
        else:
            factors += [(piece, multiplicity) for piece, _ in _poly(factor.as_expr()).factor_list()[1]]
    return factors


def ramification_divisor(f: RatFn) -> Dict[Point, int]:
    """
    Verzweigungsdivisor von f als Abbildung Punkt → (Index − 1).

    Endliche Punkte: Nullstellen von N'D − ND' mit Vielfachheit;
    ∞ über die Gradbilanz von f bzw. f − f(∞).

    Raises:
        DegenerateMapError: f ist konstant
    """
    derivative = f.derivative_numerator()
    if derivative.is_zero:
        raise DegenerateMapError(str(f))

    divisor: Dict[Point, int] = {}
    for factor, multiplicity in _factors(derivative):
        for point in _split_factor(factor):
            divisor[point] = multiplicity

    at_infinity = f.infinity_ramification()
    if at_infinity:
        divisor[P1_INFINITY] = at_infinity
    return divisor


def ramification_at(f: RatFn, point: Point) -> int:
    """Index − 1 von f in einem einzelnen Punkt, ohne Faktorisierung."""
    if isinstance(point, PointAtInfinity):
        return f.infinity_ramification()
    if isinstance(point, ClosedPoint):
        raise ValueError(f"{point} ist kein einzelner Punkt")
    derivative = f.derivative_numerator()
    if derivative.is_zero:
        raise DegenerateMapError(str(f))
    return root_multiplicity(derivative, point)


def has_ramification_divisor(f: RatFn, divisor: Dict[Point, int]) -> bool:
    """
    Prüft, ob `divisor` genau der Verzweigungsdivisor von f ist.

    Stimmen alle Punkte einzeln und ist die Masse 2·deg − 2, bleibt für
    weitere Verzweigung nichts übrig.
    """
    if any(isinstance(point, ClosedPoint) for point in divisor):
        return ramification_divisor(f) == divisor
    if divisor_mass(divisor) != 2 * f.degree - 2:
        return False
    return all(ramification_at(f, point) == multiplicity for point, multiplicity in divisor.items())


def divisor_mass(divisor: Dict[Point, int]) -> int:
    return sum(multiplicity * getattr(point, "degree", 1) for point, multiplicity in divisor.items())


def check_inversion_symmetry(f: RatFn) -> Optional[QuadExtScalar]:
    """
    Konstante c mit f(t)·f(1/t) = c, falls es sie gibt, sonst None.

    Mit N* = t^n·N(1/t), D* = t^m·D(1/t) gilt f(t)·f(1/t) = N·N*·t^m / (D·D*·t^n).
    """
    n, m = f.numerator.degree(), f.denominator.degree()
    top = f.numerator * _reversed(f.numerator) * _poly(T**m)
    bottom = f.denominator * _reversed(f.denominator) * _poly(T**n)
    if top.degree() != bottom.degree():
        return None
    if top.mul_ground(bottom.LC()) != bottom.mul_ground(top.LC()):
        return None
    return QuadExtScalar.from_sympy(top.LC()) / QuadExtScalar.from_sympy(bottom.LC())


@dataclass(frozen=True)
class FiberExpectation:
    """Erwartung: `point` liegt mit Vielfachheit ≥ `index` in f*(target)."""

    target: Point
    point: Point
    index: int


def verify_four_one_profile(f: RatFn, expectations: Sequence[FiberExpectation]) -> bool:
    if f.degree != 4:
        logger.warning("❌ %s hat Grad %d statt 4", f, f.degree)
        return False
    for expectation in expectations:
        found = f.fiber_multiplicity(expectation.target, expectation.point)
        if found < expectation.index:
            logger.info(
                "❌ %s: Faser über %s enthält %s nur %d-fach (erwartet %d)",
                f, expectation.target, expectation.point, found, expectation.index,
            )
            return False
    return True


@dataclass(frozen=True)
class MobiusMap:
    """t ↦ (a·t + b)/(c·t + d) über ℚ."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError(f"{self} ist nicht invertierbar")

    @classmethod
    def of(cls, a: Rational, b: Rational, c: Rational, d: Rational) -> "MobiusMap":
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    def __str__(self) -> str:
        return f"t ↦ ({self.a}t + {self.b})/({self.c}t + {self.d})"

    def preimage(self, point: Point) -> Point:
        """m⁻¹(w) = (d·w − b)/(−c·w + a)."""
        if isinstance(point, PointAtInfinity):
            return P1_INFINITY if self.c == 0 else QuadExtScalar.of(-self.d / self.c)
        denominator = -self.c * point + self.a
        if denominator == QuadExtScalar.of(0):
            return P1_INFINITY
        return (self.d * point - self.b) / denominator


def compose_mobius(f: RatFn, mobius: MobiusMap) -> RatFn:
    """
    f ∘ m über die homogenisierten Formen N(a·t + b, c·t + d), D(a·t + b, c·t + d).

    m ist invertierbar, teilerfremde Formen bleiben teilerfremd.
    """
    top = _poly(sympify(mobius.a) * T + sympify(mobius.b))
    bottom = _poly(sympify(mobius.c) * T + sympify(mobius.d))
    n = f.degree

    def homogenized(poly: Poly) -> Poly:
        result = _poly(0)
        for power, coefficient in enumerate(reversed(poly.all_coeffs())):
            result += (top**power * bottom ** (n - power)).mul_ground(coefficient)
        return result

    return RatFn(homogenized(f.numerator), homogenized(f.denominator))


def pulled_back_divisor(divisor: Dict[Point, int], mobius: MobiusMap) -> Dict[Point, int]:
    return {mobius.preimage(point): multiplicity for point, multiplicity in divisor.items()}


def sample_mobius_maps(rng, count: int, bound: int = 5) -> List[MobiusMap]:
    maps: List[MobiusMap] = []
    while len(maps) < count:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if a * d - b * c != 0:
            maps.append(MobiusMap.of(a, b, c, d))
    return maps
