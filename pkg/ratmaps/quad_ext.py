"""Exakte Arithmetik in ℚ(√−2): Elemente u + v·√−2 mit u, v ∈ ℚ."""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple, Union

from sympy import Expr, Rational, sqrt, sympify

from core.scalar import Rational as ExactRational
from core.scalar import format_rational

SQRT_MINUS_TWO = sqrt(-2)


def sympy_to_fraction(value) -> Fraction:
    value = sympify(value)
    if not value.is_Rational:
        raise ValueError(f"{value} ist nicht rational")
    return Fraction(int(value.p), int(value.q))


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exakte Quadratwurzel einer nichtnegativen rationalen Zahl, sonst None."""
    if value < 0:
        return None
    numerator, denominator = isqrt(value.numerator), isqrt(value.denominator)
    if numerator * numerator == value.numerator and denominator * denominator == value.denominator:
        return Fraction(numerator, denominator)
    return None


@dataclass(frozen=True)
class QuadExtScalar:
    u: Fraction
    v: Fraction = Fraction(0)

    @classmethod
    def of(cls, u: ExactRational, v: ExactRational = 0) -> "QuadExtScalar":
        return cls(Fraction(u), Fraction(v))

    @classmethod
    def coerce(cls, value: Union["QuadExtScalar", ExactRational]) -> "QuadExtScalar":
        return value if isinstance(value, QuadExtScalar) else cls.of(value)

    @classmethod
    def from_sympy(cls, expr: Expr) -> "QuadExtScalar":
        real, imaginary = sympify(expr).expand().as_real_imag()
        return cls(sympy_to_fraction(real), sympy_to_fraction(imaginary / sqrt(2)))

    def to_sympy(self) -> Expr:
        return Rational(self.u.numerator, self.u.denominator) + Rational(
            self.v.numerator, self.v.denominator
        ) * SQRT_MINUS_TWO

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def conjugate(self) -> "QuadExtScalar":
        return QuadExtScalar(self.u, -self.v)

    def norm(self) -> Fraction:
        return self.u * self.u + 2 * self.v * self.v

    def __add__(self, other) -> "QuadExtScalar":
        other = QuadExtScalar.coerce(other)
        return QuadExtScalar(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self) -> "QuadExtScalar":
        return QuadExtScalar(-self.u, -self.v)

    def __sub__(self, other) -> "QuadExtScalar":
        return self + (-QuadExtScalar.coerce(other))

    def __rsub__(self, other) -> "QuadExtScalar":
        return QuadExtScalar.coerce(other) - self

    def __mul__(self, other) -> "QuadExtScalar":
        other = QuadExtScalar.coerce(other)
        # √−2 · √−2 = −2
        return QuadExtScalar(
            self.u * other.u - 2 * self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadExtScalar":
        other = QuadExtScalar.coerce(other)
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("Division durch 0 in ℚ(√−2)")
        return self * other.conjugate() * QuadExtScalar.of(1 / norm)

    def __rtruediv__(self, other) -> "QuadExtScalar":
        return QuadExtScalar.coerce(other) / self

    def __pow__(self, exponent: int) -> "QuadExtScalar":
        if exponent < 0:
            return QuadExtScalar.of(1) / self**-exponent
        result = QuadExtScalar.of(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        if self.v == 0:
            return format_rational(self.u)
        sign = "-" if self.v < 0 else "+"
        magnitude = abs(self.v)
        radical = "√−2" if magnitude == 1 else f"{format_rational(magnitude)}√−2"
        if self.u == 0:
            return f"{'-' if self.v < 0 else ''}{radical}"
        return f"{format_rational(self.u)} {sign} {radical}"

    def to_latex(self) -> str:
        return str(self).replace("√−2", "\\sqrt{-2}")


def quadratic_roots(a: ExactRational, b: ExactRational, c: ExactRational) -> Tuple[QuadExtScalar, QuadExtScalar]:
    """
    Nullstellen von a·x² + b·x + c mit rationalen Koeffizienten in ℚ(√−2).

    Raises:
        ValueError: wenn die Diskriminante weder ein rationales Quadrat noch
            −2 mal ein rationales Quadrat ist
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise ValueError("kein quadratisches Polynom (a = 0)")
    discriminant = b * b - 4 * a * c

    real_root = _rational_sqrt(discriminant)
    if real_root is not None:
        root = QuadExtScalar.of(real_root)
    else:
        radical = _rational_sqrt(discriminant / -2)
        if radical is None:
            raise ValueError(f"Diskriminante {discriminant} zerfällt nicht über ℚ(√−2)")
        root = QuadExtScalar.of(0, radical)

    denominator = 2 * a
    return ((-b + root) / denominator, (-b - root) / denominator)
