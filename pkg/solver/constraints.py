"""
Die drei linearen Bedingungen an die Koeffizienten (A, B₀, B₁) von
TR̄_d = Aλ − Σ B_i δ_i auf M̄_g, g = 2d − 3.
"""

from dataclasses import dataclass
from typing import Dict, List

from core.errors import InvariantDomainError
from core.linear_system import LinearRow
from core.scalar import binomial
from invariants.degeneration_counts import N2_inv, N_inv
from invariants.pencil_counts import a_inv, c_inv, e_inv
from pic.classes import MgClass
from pic.named_classes import genus2_rhs
from pic.pullback import ELLIPTIC_PENCIL, chi_pullback, flag_coefficients, moving_node_family
from solver.constants_table import (
    C0_GAMMA2_QUARTIC_TAILS,
    C0_LOWER_DEGREE_MULTIPLICITY,
    C0_QUARTIC_TAIL_MULTIPLICITY,
    C0_TRIPLE_TAIL_MULTIPLICITY,
    C0_TWO_TRIPLE_POINTS_MULTIPLICITY,
    FERMAT_TAIL_MULTIPLICITY,
)

UNKNOWNS = ("A", "B0", "B1")


def _require_degree(d: int, name: str):
    if d < 3:
        raise InvariantDomainError(name, f"erwartet d ≥ 3 (d={d})")


def constraint_elliptic_tails(d: int) -> LinearRow:
    """R·TR̄_d = 4·a(d, 2d−4) für das Büschel ebener Kubiken."""
    _require_degree(d, "constraint_elliptic_tails")
    rhs = FERMAT_TAIL_MULTIPLICITY.value * a_inv(d, 2 * d - 4)
    return LinearRow.of(
        ELLIPTIC_PENCIL.unknown_row(), rhs, f"elliptic_tails(d={d}): a-12b_0+b_1=4a(d, 2d-4)"
    )


def _unknown_basis_classes(d: int) -> List[MgClass]:
    """Die Klassen, deren Koeffizienten A, B₀, B₁ sind (B_i über die Flaggen-Proportionalität)."""
    g = 2 * d - 3
    size = g // 2 + 1
    higher = flag_coefficients(g, 1)
    return [
        MgClass.of(g, 1, [0] * size),
        MgClass.of(g, 0, [-1] + [0] * (size - 1)),
        MgClass.of(g, 0, [0] + [-x for x in higher]),
    ]


def constraint_psi(d: int) -> LinearRow:
    """
    ψ-Koeffizient von χ*(TR̄_d) gegen die Zerlegung in W̄, D̄₁, D̄₂, D̄₃.

    Die linke Seite entsteht durch Rückzug der drei Basisklassen, für d ≥ 4
    also (2(g−2)/(g−1))·B₁, für d = 3 (δ₁ ↦ δ₁ − ψ) einfach B₁.
    """
    _require_degree(d, "constraint_psi")
    coefficients = [chi_pullback(c, d).psi for c in _unknown_basis_classes(d)]
    return LinearRow.of(
        coefficients, genus2_rhs(d).psi, f"psi(d={d}): the coefficient of ψ in its expansion"
    )


@dataclass(frozen=True)
class C0Contribution:
    """Ein Beitrag zu C⁰·TR̄_d samt seiner Vielfachheit."""

    label: str
    count: int
    multiplicity: int

    @property
    def total(self) -> int:
        return self.count * self.multiplicity


def c0_contributions(d: int) -> List[C0Contribution]:
    _require_degree(d, "c0_contributions")
    g_tail = 2 * d - 4
    quartic_tails = (
        c_inv(d, g_tail, 1) + c_inv(d, g_tail, 3) + C0_GAMMA2_QUARTIC_TAILS.value * c_inv(d, g_tail, 2)
    )
    return [
        C0Contribution("(d-1)N(d)", (d - 1) * N_inv(d), C0_TWO_TRIPLE_POINTS_MULTIPLICITY.value),
        C0Contribution("N_2(d)", N2_inv(d), C0_TRIPLE_TAIL_MULTIPLICITY.value),
        C0Contribution("(d-2)e(d, 2d-4)", (d - 2) * e_inv(d, g_tail), C0_TRIPLE_TAIL_MULTIPLICITY.value),
        C0Contribution("c(d,2d-4,1)+c(d,2d-4,3)+2c(d,2d-4,2)", quartic_tails, C0_QUARTIC_TAIL_MULTIPLICITY.value),
        C0Contribution("{2d-4\\choose d-1}", binomial(g_tail, d - 1), C0_LOWER_DEGREE_MULTIPLICITY.value),
    ]


def c0_rhs_terms(d: int) -> Dict[str, int]:
    return {contribution.label: contribution.total for contribution in c0_contributions(d)}


def constraint_C0(d: int) -> LinearRow:
    """(2g−2)B₀ − B₁ = C⁰·TR̄_d, summiert über die Fälle der Degeneration C/p∼q."""
    _require_degree(d, "constraint_C0")
    g = 2 * d - 3
    rhs = sum(contribution.total for contribution in c0_contributions(d))
    return LinearRow.of(
        moving_node_family(g).unknown_row(), rhs, f"C0(d={d}): (2g-2)b_0-b_1=C^0\\cdot TR_d"
    )


def constraint_rows(d: int) -> List[LinearRow]:
    return [constraint_elliptic_tails(d), constraint_psi(d), constraint_C0(d)]
