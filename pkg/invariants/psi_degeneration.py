"""
ψ-Koeffizienten der Divisoren auf M̄_{2,1} über Zählungen auf der
Faserkurve {[C, x] : x ∈ C} für eine feste allgemeine Geschlecht-2-Kurve C.

Auf der Faserkurve gilt ψ = 2g − 2 = 2 und λ = δ₀ = δ₁ = 0, der
ψ-Koeffizient ist also (Anzahl der Punkte im Divisor) / 2.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from abelian.ee_lattice import DIAGONAL, F2, ee_half_self_intersection, ee_intersect, named_ee_classes
from invariants.pencil_counts import hurwitz_ramification_degree, r_inv

FIBRAL_PSI_DEGREE = 2  # 2g − 2 für g = 2


@dataclass(frozen=True)
class D3Degeneration:
    """Beiträge zu n₀ bei Degeneration C → C₁ ∪_q C₂ mit elliptischen C_i."""

    sigma_diag: Fraction
    sigma_f2: Fraction
    half_square: Fraction
    full_square: Fraction

    @property
    def case_i(self) -> Fraction:
        return 2 * self.sigma_diag * self.half_square

    @property
    def case_ii(self) -> Fraction:
        return 2 * self.sigma_f2 * self.full_square

    @property
    def case_iii(self) -> Fraction:
        return 2 * self.half_square

    @property
    def n0(self) -> Fraction:
        return self.case_i + self.case_ii + self.case_iii


def d3_degeneration_terms() -> D3Degeneration:
    sigma = named_ee_classes()["Sigma"]
    return D3Degeneration(
        sigma_diag=ee_intersect(sigma, DIAGONAL),
        sigma_f2=ee_intersect(sigma, F2),
        half_square=ee_half_self_intersection(sigma),
        full_square=ee_intersect(sigma, sigma),
    )


def d3_psi_via_degeneration() -> int:
    """(D̄₃)_ψ = n₀ / (2g − 2) mit n₀ = 2·15·20 + 2·8·40 + 2·20 = 1280."""
    value = d3_degeneration_terms().n0 / FIBRAL_PSI_DEGREE
    assert value.denominator == 1, value
    return value.numerator


def psi_coefficients_via_fibral_curve() -> Dict[str, Fraction]:
    weierstrass_points = 2 * 2 + 2
    residual_simple_points = hurwitz_ramification_degree(3, 2) - 4
    return {
        "W": Fraction(weierstrass_points, FIBRAL_PSI_DEGREE),
        "D1": Fraction(r_inv(3, 3), FIBRAL_PSI_DEGREE),
        "D2": Fraction(residual_simple_points * r_inv(3, 3) // 2, FIBRAL_PSI_DEGREE),
        "D3": Fraction(d3_psi_via_degeneration()),
    }
