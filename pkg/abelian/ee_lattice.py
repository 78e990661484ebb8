from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from core.linear_system import LinearRow, LinearSystem, solve_linear
from core.scalar import Rational, format_rational


@dataclass(frozen=True)
class EECurveClass:
    """Kurvenklasse f1·F₁ + f2·F₂ + diag·Δ auf E×E."""

    f1: Fraction
    f2: Fraction
    diag: Fraction

    @classmethod
    def of(cls, f1: Rational, f2: Rational, diag: Rational) -> "EECurveClass":
        return cls(Fraction(f1), Fraction(f2), Fraction(diag))

    @property
    def vector(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.f1, self.f2, self.diag)

    def __str__(self) -> str:
        return f"{format_rational(self.f1)}F₁ + {format_rational(self.f2)}F₂ + {format_rational(self.diag)}Δ"


# F₁·F₂ = F₁·Δ = F₂·Δ = 1, alle Quadrate 0 (Δ² = 0 auf E×E)
GRAM_MATRIX: Tuple[Tuple[int, int, int], ...] = (
    (0, 1, 1),
    (1, 0, 1),
    (1, 1, 0),
)

F1 = EECurveClass.of(1, 0, 0)
F2 = EECurveClass.of(0, 1, 0)
DIAGONAL = EECurveClass.of(0, 0, 1)


def ee_intersect(c1: EECurveClass, c2: EECurveClass) -> Fraction:
    return sum(
        (
            x * GRAM_MATRIX[i][j] * y
            for i, x in enumerate(c1.vector)
            for j, y in enumerate(c2.vector)
        ),
        Fraction(0),
    )


def ee_half_self_intersection(c: EECurveClass) -> Fraction:
    return ee_intersect(c, c) / 2


def ee_class_from_pairings(
    with_diag: Rational, with_f1: Rational, with_f2: Rational
) -> EECurveClass:
    """Eindeutige Klasse mit den gegebenen Schnittzahlen mit Δ, F₁ und F₂."""
    system = LinearSystem.from_rows(
        LinearRow.of(_pairing_row(DIAGONAL), with_diag, "·Δ"),
        LinearRow.of(_pairing_row(F1), with_f1, "·F₁"),
        LinearRow.of(_pairing_row(F2), with_f2, "·F₂"),
    )
    return EECurveClass.of(*solve_linear(system))


def _pairing_row(basis_class: EECurveClass) -> Tuple[Fraction, ...]:
    return tuple(
        ee_intersect(unit, basis_class) for unit in (F1, F2, DIAGONAL)
    )


# Schnittzahlen (·Δ, ·F₁, ·F₂) der Korrespondenzkurven
SIGMA_PAIRINGS = (15, 3, 8)
U_PAIRINGS = (8, 3, 3)
V_PAIRINGS = (9, 4, 1)


def named_ee_classes() -> Dict[str, EECurveClass]:
    """Σ, U und V, rekonstruiert aus ihren Schnittzahlen."""
    return {
        "Sigma": ee_class_from_pairings(*SIGMA_PAIRINGS),
        "U": ee_class_from_pairings(*U_PAIRINGS),
        "V": ee_class_from_pairings(*V_PAIRINGS),
    }


def elliptic_pencil_count_u_v() -> Fraction:
    """Anzahl 11 = U·V der Büschel im elliptischen Fall."""
    classes = named_ee_classes()
    return ee_intersect(classes["U"], classes["V"])
