import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from core.errors import InvariantDomainError, PullbackUndefinedError
from core.scalar import Rational
from pic.classes import M21Class, MgClass

logger = logging.getLogger(__name__)

# Annahme für δ_i, i ≥ 3: der angeheftete Schwanz ist fest und allgemein
HIGHER_DELTA_ASSUMPTION = "χ*(δ_i) = 0 for 3 ≤ i ≤ ⌊g/2⌋"


def chi_pullback(c: MgClass, d: Optional[int] = None) -> M21Class:
    """
    Rückzug unter χ: M̄_{2,1} → M̄_g, [C, p] ↦ C ∪_p (fester Schwanz).

    g ≥ 4: χ*(δ₂) = −ψ, λ, δ₀, δ₁ bleiben, δ_i (i ≥ 3) ↦ 0.
    g = 3: Schwanz und markierte Komponente fallen zusammen, δ₁ ↦ δ₁ − ψ.
    Mit d muss g = 2d − 3 sein; die Diaz-Klasse (g = 4) wird ohne d zurückgezogen.
    """
    if d is not None and c.g != 2 * d - 3:
        raise PullbackUndefinedError(c.g, d)
    if c.g < 3:
        raise PullbackUndefinedError(c.g)

    delta0, delta1 = c.delta[0], c.delta[1]
    if c.g == 3:
        return M21Class(-delta1, c.lambda_, delta0, delta1)
    if any(x != 0 for x in c.delta[3:]):
        logger.debug("δ_i für i ≥ 3 entfallen unter χ (%s)", HIGHER_DELTA_ASSUMPTION)
    return M21Class(-c.delta[2], c.lambda_, delta0, delta1)


def flag_coefficients(g: int, b1: Rational) -> Tuple[Fraction, ...]:
    """b_i = i(g−i)/(g−1)·b₁ für i = 1..⌊g/2⌋, erzwungen durch den Flaggen-Rückzug."""
    if g < 3:
        raise InvariantDomainError("flag_coefficients", f"erwartet g ≥ 3 (g={g})")
    b1 = Fraction(b1)
    return tuple(Fraction(i * (g - i), g - 1) * b1 for i in range(1, g // 2 + 1))


@dataclass(frozen=True)
class OneParameterFamily:
    """Testkurve in M̄_g, gegeben durch ihre Schnittzahlen mit λ, δ₀, δ₁."""

    name: str
    with_lambda: int
    with_delta0: int
    with_delta1: int

    def intersect(self, c: MgClass) -> Fraction:
        return (
            self.with_lambda * c.lambda_
            + self.with_delta0 * c.delta[0]
            + self.with_delta1 * c.delta[1]
        )

    def unknown_row(self) -> List[int]:
        """Koeffizienten für die Unbekannten (A, B₀, B₁) einer Klasse Aλ − B₀δ₀ − B₁δ₁."""
        return [self.with_lambda, -self.with_delta0, -self.with_delta1]


# Büschel ebener Kubiken, im Basispunkt angeheftet
ELLIPTIC_PENCIL = OneParameterFamily("R", 1, 12, -1)


def moving_node_family(g: int) -> OneParameterFamily:
    """Fester Punkt q einer allgemeinen Kurve vom Geschlecht g−1, p ∈ C wandert, p ~ q verklebt."""
    return OneParameterFamily("C0", 0, -(2 * g - 2), 1)


def elliptic_pencil_intersection(c: MgClass) -> Fraction:
    return ELLIPTIC_PENCIL.intersect(c)


def moving_node_intersection(c: MgClass) -> Fraction:
    return moving_node_family(c.g).intersect(c)
