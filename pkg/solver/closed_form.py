"""
Gedruckte geschlossene Formeln für TR̄_d.

Vorfaktor 2(2d−6)!/(d!(d−3)!) mal (a, b₀, b_i). Drei Lesarten:
`CORRECTED` liest das a-Polynom mit 1885d, `AS_PRINTED` mit der Konstanten
1885, `HIGHERDELTAS_PRINTED` verwendet für b_i (i ≥ 1) den Vorfaktor
(2d−6)!/(2·d!(d−3)!) ohne den Faktor 12.
"""

from enum import Enum
from fractions import Fraction
from math import factorial

from core.errors import InvariantDomainError
from core.scalar import inv_factorial
from solver.tr_class import TrClass


class ClosedFormVariant(str, Enum):
    CORRECTED = "corrected"
    AS_PRINTED = "as_printed"
    HIGHERDELTAS_PRINTED = "higherdeltas_printed"


CLOSED_FORM_QUOTES = {
    ClosedFormVariant.CORRECTED: "b_i=12i(2d-3-i)(36d^3-156d^2+180d-5)",
    ClosedFormVariant.AS_PRINTED: "a=24(36d^4-36d^3-640d^2+1885-1475)",
    ClosedFormVariant.HIGHERDELTAS_PRINTED: "b_i=\\frac{(2d-6)!}{2\\ d! (d-3)!} \\ i(2d-3-i)(36d^3-156d^2+180d-5)",
}


def prefactor(d: int) -> Fraction:
    return 2 * factorial(2 * d - 6) * inv_factorial(d) * inv_factorial(d - 3)


def a_polynomial(d: int, variant: ClosedFormVariant = ClosedFormVariant.CORRECTED) -> int:
    linear = 1885 if variant is ClosedFormVariant.AS_PRINTED else 1885 * d
    return 24 * (36 * d**4 - 36 * d**3 - 640 * d**2 + linear - 1475)


def b0_polynomial(d: int) -> int:
    return 144 * d**4 - 528 * d**3 - 298 * d**2 + 3049 * d - 2940


def higher_b_polynomial(d: int, i: int) -> int:
    return 12 * i * (2 * d - 3 - i) * (36 * d**3 - 156 * d**2 + 180 * d - 5)


def closed_form(d: int, variant: ClosedFormVariant = ClosedFormVariant.CORRECTED) -> TrClass:
    if d < 3:
        raise InvariantDomainError("closed_form", f"erwartet d ≥ 3 (d={d})")
    factor = prefactor(d)
    A = factor * a_polynomial(d, variant)
    B0 = factor * b0_polynomial(d)

    if variant is ClosedFormVariant.HIGHERDELTAS_PRINTED:
        higher_factor = factorial(2 * d - 6) * inv_factorial(d) * inv_factorial(d - 3) / 2
        higher = [
            higher_factor * i * (2 * d - 3 - i) * (36 * d**3 - 156 * d**2 + 180 * d - 5)
            for i in range(1, d - 1)
        ]
    else:
        higher = [factor * higher_b_polynomial(d, i) for i in range(1, d - 1)]

    return TrClass.of(d, A, [B0] + higher)
