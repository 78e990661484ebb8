from fractions import Fraction
from typing import Dict

from core.errors import InvariantDomainError
from invariants.degeneration_counts import N1_inv
from invariants.pencil_counts import a_inv, e_inv, r_inv
from pic.classes import M21Class, MgClass
from pic.pullback import chi_pullback

# Diaz-Divisor auf M̄₄: Kurven mit einem Punkt, an dem ein g¹₄ total verzweigt ist
DIAZ_CLASS = MgClass.of(4, 264, [-30, -96, -128])

NAMED_CLASS_QUOTES = {
    "W": "W̄ ≡ 3ψ−λ−δ_1",
    "D1": "D̄_1 ≡ 80ψ+10δ_0−120λ",
    "D2": "D̄_2 ≡ −200λ+160ψ+17δ_0",
    "D3": "D̄_3 ≡ 640ψ−860λ+72δ_0",
}


def named_classes() -> Dict[str, M21Class]:
    return {
        "W": M21Class.of(3, -1, 0, -1),
        "D1": M21Class.of(80, -120, 10),
        "D2": M21Class.of(160, -200, 17),
        "D3": M21Class.of(640, -860, 72),
    }


def reconstruct_D1() -> M21Class:
    """χ*(Diaz) = D̄₁ + r(3,1)·W̄, also D̄₁ = χ*(Diaz) − 16·W̄."""
    difference = chi_pullback(DIAZ_CLASS) - r_inv(3, 1) * named_classes()["W"]
    return difference.reduced()


def genus2_coefficients(d: int) -> Dict[str, int]:
    """Vielfachheiten von W̄, D̄₁, D̄₂, D̄₃ in der Zerlegung von χ*(TR̄_d)."""
    if d < 3:
        raise InvariantDomainError("genus2_rhs", f"erwartet d ≥ 3 (d={d})")
    g = 2 * d - 5
    return {
        "W": N1_inv(d),
        "D1": e_inv(d, g),
        "D2": a_inv(d - 1, g),
        "D3": a_inv(d, g),
    }


def genus2_rhs(d: int) -> M21Class:
    classes = named_classes()
    total = M21Class.of(0, 0, 0)
    for name, coefficient in genus2_coefficients(d).items():
        total = total + coefficient * classes[name]
    return total.reduced()


def solve_for_named_class(tr: MgClass, d: int, target: str) -> M21Class:
    """
    Löst die Zerlegung von χ*(TR̄_d) nach einer der Klassen W̄, D̄₁, D̄₂, D̄₃ auf.

    Für d = 3 liefert das D̄₂, für d = 4 D̄₃.
    """
    coefficients = genus2_coefficients(d)
    if coefficients.get(target, 0) == 0:
        raise InvariantDomainError(
            "solve_for_named_class", f"{target} kommt für d={d} nicht in der Zerlegung vor"
        )
    classes = named_classes()
    rest = chi_pullback(tr, d)
    for name, coefficient in coefficients.items():
        if name != target:
            rest = rest - coefficient * classes[name]
    return (Fraction(1, coefficients[target]) * rest).reduced()
