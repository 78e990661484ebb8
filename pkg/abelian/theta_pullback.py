"""
Rückzug des Theta-Divisors unter φ: C×C → Pic(C), φ(x, y) = b·x − c·y.

H¹ jedes Faktors wird durch eine symplektische Basis α₁..α_g, β₁..β_g
beschrieben; θ = Σ u_i∧v_i zieht sich zu Σ (bα_i⁽¹⁾ − cα_i⁽²⁾)∧(bβ_i⁽¹⁾ − cβ_i⁽²⁾)
zurück. Integriert wird gegen [pt]×[pt] = α_i⁽¹⁾∧β_i⁽¹⁾∧α_j⁽²⁾∧β_j⁽²⁾.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Dict, NamedTuple, Tuple

from core.cited_constant import CitedConstant
from core.errors import InvariantDomainError


class CycleKind(IntEnum):
    ALPHA = 0
    BETA = 1


class Cocycle(NamedTuple):
    factor: int
    index: int
    kind: CycleKind


Monomial = Tuple[Cocycle, ...]


def _sort_with_sign(generators: Tuple[Cocycle, ...]) -> Tuple[int, Monomial]:
    """Sortiert 1-Formen; jede Vertauschung kostet ein Vorzeichen, Wiederholung ergibt 0."""
    if len(set(generators)) != len(generators):
        return 0, ()
    items = list(generators)
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


@dataclass
class ExteriorForm:
    terms: Dict[Monomial, Fraction] = field(default_factory=dict)

    @classmethod
    def generator(cls, cocycle: Cocycle, coefficient=1) -> "ExteriorForm":
        return cls({(cocycle,): Fraction(coefficient)})

    def __add__(self, other: "ExteriorForm") -> "ExteriorForm":
        collected: Dict[Monomial, Fraction] = defaultdict(Fraction, self.terms)
        for monomial, coefficient in other.terms.items():
            collected[monomial] += coefficient
        return ExteriorForm({m: c for m, c in collected.items() if c != 0})

    def scale(self, factor) -> "ExteriorForm":
        return ExteriorForm({m: c * factor for m, c in self.terms.items() if c * factor != 0})

    def wedge(self, other: "ExteriorForm") -> "ExteriorForm":
        collected: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                sign, monomial = _sort_with_sign(left + right)
                if sign:
                    collected[monomial] += sign * a * b
        return ExteriorForm({m: c for m, c in collected.items() if c != 0})


@dataclass(frozen=True)
class SymplecticLattice:
    """H¹(C×C) mit Integrationsregel gegen die Klasse [pt]×[pt]."""

    g: int

    def cocycle(self, factor: int, index: int, kind: CycleKind) -> ExteriorForm:
        return ExteriorForm.generator(Cocycle(factor, index, kind))

    def pulled_back_theta(self, b: int, c: int) -> ExteriorForm:
        theta = ExteriorForm()
        for i in range(1, self.g + 1):
            u = self.cocycle(1, i, CycleKind.ALPHA).scale(b) + self.cocycle(2, i, CycleKind.ALPHA).scale(-c)
            v = self.cocycle(1, i, CycleKind.BETA).scale(b) + self.cocycle(2, i, CycleKind.BETA).scale(-c)
            theta = theta + u.wedge(v)
        return theta

    def integrate(self, form: ExteriorForm) -> Fraction:
        total = Fraction(0)
        for monomial, coefficient in form.terms.items():
            if len(monomial) == 4 and self._is_point_class(monomial):
                total += coefficient
        return total

    @staticmethod
    def _is_point_class(monomial: Monomial) -> bool:
        first, second, third, fourth = monomial
        return (
            first.factor == second.factor == 1
            and third.factor == fourth.factor == 2
            and first.index == second.index
            and third.index == fourth.index
            and (first.kind, second.kind) == (CycleKind.ALPHA, CycleKind.BETA)
            and (third.kind, fourth.kind) == (CycleKind.ALPHA, CycleKind.BETA)
        )


def theta_pullback_degree(g: int, b: int, c: int) -> int:
    """∫_{C×C} (φ*θ)²/2 per Entwicklung in der äußeren Algebra."""
    if g < 2 or b < 1 or c < 1:
        raise InvariantDomainError("theta_pullback", f"erwartet g ≥ 2, b, c ≥ 1 (g={g}, b={b}, c={c})")
    lattice = SymplecticLattice(g)
    theta = lattice.pulled_back_theta(b, c)
    degree = lattice.integrate(theta.wedge(theta)) / 2
    assert degree.denominator == 1, degree
    return degree.numerator


def theta_pullback_closed_form(g: int, b: int, c: int) -> int:
    return g * (g - 1) * b * b * c * c


GENUS2_DIAGONAL_EXCESS = CitedConstant(
    name="genus2_diagonal_excess",
    value=2,
    quote="This excess intersection contribution is equal to 2",
)

ENU3_DIAGONAL_EXCESS = CitedConstant(
    name="enu3_diagonal_excess",
    value=6,
    quote="intersection multiplicity at the point (p, p) is equal to 6=g(g-1)",
    cross_check=lambda: 3 * (3 - 1),
)


def excess_corrected_count(g2_a: int, g2_b: int) -> int:
    """Paare auf einer Geschlecht-2-Kurve: Theta-Grad minus Diagonalbeitrag."""
    if not g2_a >= g2_b >= 1:
        raise InvariantDomainError("excess_corrected_count", f"erwartet a ≥ b ≥ 1 (a={g2_a}, b={g2_b})")
    return theta_pullback_degree(2, g2_a, g2_b) - GENUS2_DIAGONAL_EXCESS.value


def enu3_count() -> int:
    return theta_pullback_degree(3, 2, 3) - ENU3_DIAGONAL_EXCESS.value
