"""
Exakte Skalare: ganze Zahlen (int) und gekürzte Brüche (Fraction).

Alle Fakultätsreziproken laufen über `inv_factorial`, damit die Konvention
1/n! := 0 für n < 0 überall gleich angewendet wird.
"""

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def inv_factorial(n: int) -> Fraction:
    """Gibt 1/n! zurück, exakt 0 für negative n."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(n))


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_integer(value: Rational, context: str = "") -> int:
    """
    Wandelt einen exakten Wert in int um.

    Raises:
        ValueError: wenn der Wert nicht ganzzahlig ist
    """
    value = Fraction(value)
    if value.denominator != 1:
        where = f" ({context})" if context else ""
        raise ValueError(f"Wert {value} ist nicht ganzzahlig{where}")
    return value.numerator


def format_rational(value: Rational) -> str:
    """Dezimaldarstellung ohne Präzisionsverlust, z.B. '824' oder '103/6'."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def latex_rational(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"
