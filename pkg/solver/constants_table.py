"""
Zitierte Vielfachheiten und Zählkonstanten der Nebenbedingungen.

Jede Konstante trägt ihren wörtlichen Ankertext; wo möglich rechnet
`cross_check` den Wert unabhängig aus anderen Modulen nach.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

from abelian.ee_lattice import ee_half_self_intersection, ee_intersect, elliptic_pencil_count_u_v, named_ee_classes
from core.cited_constant import CitedConstant
from invariants.pencil_counts import hurwitz_ramification_degree
from pic.pullback import ELLIPTIC_PENCIL
from ratmaps.tail_covers import tail_cover_parameters


@dataclass(frozen=True)
class DegreeDependentConstant:
    """Zitierte Konstante, die von d abhängt (z.B. 6d − 16)."""

    name: str
    formula: Callable[[int], int]
    quote: str
    cross_check: Callable[[int], int]

    def value(self, d: int) -> int:
        return self.formula(d)

    def is_consistent(self, d: int) -> bool:
        return self.formula(d) == self.cross_check(d)


def _torsion_without_origin(n: int) -> int:
    return n * n - 1


# Elliptische Schwänze
ELLIPTIC_PENCIL_LAMBDA = CitedConstant(
    name="elliptic_pencil_lambda",
    value=1,
    quote="R\\cdot \\lambda=1",
    cross_check=lambda: ELLIPTIC_PENCIL.with_lambda,
)
ELLIPTIC_PENCIL_DELTA0 = CitedConstant(
    name="elliptic_pencil_delta0",
    value=12,
    quote="R\\cdot \\delta_0=12",
    cross_check=lambda: ELLIPTIC_PENCIL.with_delta0,
)
ELLIPTIC_PENCIL_DELTA1 = CitedConstant(
    name="elliptic_pencil_delta1",
    value=-1,
    quote="R\\cdot \\delta_1=-1",
    cross_check=lambda: ELLIPTIC_PENCIL.with_delta1,
)
FERMAT_TAIL_MULTIPLICITY = CitedConstant(
    name="fermat_tail_multiplicity",
    value=4,
    quote="each point of intersection will contribute 4=24/6 times",
    cross_check=lambda: Fraction(24, 6),
)

# Testkurve C⁰, Fälle (i) bis (iii)
C0_TWO_TRIPLE_POINTS_MULTIPLICITY = CitedConstant(
    name="c0_two_triple_points_multiplicity",
    value=1,
    quote="each of the (d-1)N(d) admissible coverings found at this step is to be counted with multiplicity 1",
)
C0_TRIPLE_TAIL_MULTIPLICITY = CitedConstant(
    name="c0_triple_tail_multiplicity",
    value=3,
    quote="they each must be counted with multiplicity 3",
)
C0_LOWER_DEGREE_MULTIPLICITY = CitedConstant(
    name="c0_lower_degree_multiplicity",
    value=2,
    quote="elements of \\mathfrak h_d is counted with multiplicity 2",
)
C0_QUARTIC_TAIL_MULTIPLICITY = CitedConstant(
    name="c0_quartic_tail_multiplicity",
    value=2,
    quote="gets counted with multiplicity 2",
    cross_check=lambda: Fraction(4, 2),
)
C0_GAMMA2_QUARTIC_TAILS = CitedConstant(
    name="c0_gamma2_quartic_tails",
    value=2,
    quote="When \\gamma=2, there are two \\mathfrak g^1_4's",
)

# Zählungen auf elliptischen Kurven
TRIPLE_TORSION_CHOICES = CitedConstant(
    name="triple_torsion_choices",
    value=8,
    quote="which gives 8 choices for y",
    cross_check=lambda: _torsion_without_origin(3),
)
QUADRUPLE_TORSION_CHOICES = CitedConstant(
    name="quadruple_torsion_choices",
    value=15,
    quote="This yields 15 choices for",
    cross_check=lambda: _torsion_without_origin(4),
)
DOUBLE_TORSION_CHOICES = CitedConstant(
    name="double_torsion_choices",
    value=3,
    quote="This gives 3 choices for f_E",
    cross_check=lambda: _torsion_without_origin(2),
)
AFFINE_TRIPLE_SOLUTIONS = CitedConstant(
    name="affine_triple_solutions",
    value=9,
    quote="3x\\equiv p+2q on E which has 9 solutions",
    cross_check=lambda: 3 * 3,
)
AFFINE_DOUBLE_SOLUTIONS = CitedConstant(
    name="affine_double_solutions",
    value=4,
    quote="3q\\equiv 2y+p on E which has 4 solutions",
    cross_check=lambda: 2 * 2,
)
SIGMA_HALF_SQUARE = CitedConstant(
    name="sigma_half_square",
    value=20,
    quote="=\\Sigma^2/2=20",
    cross_check=lambda: ee_half_self_intersection(named_ee_classes()["Sigma"]),
)
SIGMA_SQUARE = CitedConstant(
    name="sigma_square",
    value=40,
    quote="This number equals 40",
    cross_check=lambda: ee_intersect(named_ee_classes()["Sigma"], named_ee_classes()["Sigma"]),
)
ELLIPTIC_CUBIC_PENCILS = CitedConstant(
    name="elliptic_cubic_pencils",
    value=11,
    quote="There are 11 pencils",
    cross_check=elliptic_pencil_count_u_v,
)

# Die 38 Quartik-Überlagerungen auf E ∪_r T
QUARTIC_CASE_TRIPLE_ON_E = CitedConstant(
    name="quartic_case_triple_on_e",
    value=16,
    quote="This procedure produces 16=8\\cdot 2 admissible \\mathfrak g^1_4's",
    cross_check=lambda: TRIPLE_TORSION_CHOICES.value * (hurwitz_ramification_degree(3, 1) - 4),
)
QUARTIC_CASE_SPLIT = CitedConstant(
    name="quartic_case_split",
    value=6,
    quote="We have produced 6=2\\cdot 3 coverings",
    cross_check=lambda: 2 * DOUBLE_TORSION_CHOICES.value,
)
QUARTIC_CASE_TAIL_PARAMETER = CitedConstant(
    name="quartic_case_tail_parameter",
    value=16,
    quote="Thus we obtain another 16=8\\cdot 2 admissible \\mathfrak g^1_4's in this case",
    cross_check=lambda: TRIPLE_TORSION_CHOICES.value * len(tail_cover_parameters()),
)
ELLIPTIC_QUARTIC_PENCILS = CitedConstant(
    name="elliptic_quartic_pencils",
    value=38,
    quote="we found 38=16+6+16 admissible coverings",
    cross_check=lambda: (
        QUARTIC_CASE_TRIPLE_ON_E.value + QUARTIC_CASE_SPLIT.value + QUARTIC_CASE_TAIL_PARAMETER.value
    ),
)

CITED_CONSTANTS: List[CitedConstant] = [
    ELLIPTIC_PENCIL_LAMBDA,
    ELLIPTIC_PENCIL_DELTA0,
    ELLIPTIC_PENCIL_DELTA1,
    FERMAT_TAIL_MULTIPLICITY,
    C0_TWO_TRIPLE_POINTS_MULTIPLICITY,
    C0_TRIPLE_TAIL_MULTIPLICITY,
    C0_LOWER_DEGREE_MULTIPLICITY,
    C0_QUARTIC_TAIL_MULTIPLICITY,
    C0_GAMMA2_QUARTIC_TAILS,
    TRIPLE_TORSION_CHOICES,
    QUADRUPLE_TORSION_CHOICES,
    DOUBLE_TORSION_CHOICES,
    AFFINE_TRIPLE_SOLUTIONS,
    AFFINE_DOUBLE_SOLUTIONS,
    SIGMA_HALF_SQUARE,
    SIGMA_SQUARE,
    ELLIPTIC_CUBIC_PENCILS,
    QUARTIC_CASE_TRIPLE_ON_E,
    QUARTIC_CASE_SPLIT,
    QUARTIC_CASE_TAIL_PARAMETER,
    ELLIPTIC_QUARTIC_PENCILS,
]

# Restliche einfache Verzweigungspunkte eines g¹_{d−1} auf dem Geschlecht-(2d−5)-Teil
LOWER_PENCIL_SIMPLE_POINTS_AFTER_TRIPLE = DegreeDependentConstant(
    name="lower_pencil_simple_points_after_triple",
    formula=lambda d: 6 * d - 16,
    quote="one of the 6d-16 simple ramification points of l",
    cross_check=lambda d: hurwitz_ramification_degree(d - 1, 2 * d - 5) - 2,
)
LOWER_PENCIL_POINTS_AFTER_DOUBLE = DegreeDependentConstant(
    name="lower_pencil_points_after_double",
    formula=lambda d: 6 * d - 15,
    quote="one of the 6d-15 ramification points of f_C",
    cross_check=lambda d: hurwitz_ramification_degree(d - 1, 2 * d - 5) - 1,
)

DEGREE_DEPENDENT_CONSTANTS: List[DegreeDependentConstant] = [
    LOWER_PENCIL_SIMPLE_POINTS_AFTER_TRIPLE,
    LOWER_PENCIL_POINTS_AFTER_DOUBLE,
]


def inconsistent_constants(d: int = 4) -> Dict[str, str]:
    """Gibt alle Einträge zurück, deren Nachrechnung vom zitierten Wert abweicht."""
    mismatches = {}
    for constant in CITED_CONSTANTS:
        if not constant.is_consistent():
            mismatches[constant.name] = f"{constant.value} ≠ {constant.recomputed()}"
    for constant in DEGREE_DEPENDENT_CONSTANTS:
        if not constant.is_consistent(d):
            mismatches[constant.name] = f"{constant.value(d)} ≠ {constant.cross_check(d)} (d={d})"
    return mismatches
