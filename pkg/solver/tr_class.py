import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Tuple

from core.errors import (
    ConstraintDegeneracyError,
    InconsistentSystemError,
    InvariantDomainError,
    UnderdeterminedSystemError,
)
from core.linear_system import LinearSystem, evaluate_residuals, solve_linear
from core.scalar import Rational, format_rational
from pic.classes import MgClass
from pic.pullback import flag_coefficients
from solver.constraints import UNKNOWNS, constraint_rows

logger = logging.getLogger(__name__)

GENUS3_CLASS_QUOTE = "2912 λ−311 δ_0− 824 δ_1"


@dataclass(frozen=True)
class TrClass:
    """Koeffizienten von TR̄_d = Aλ − Σ_{i=0}^{d−2} B_i δ_i auf M̄_{2d−3}."""

    d: int
    A: Fraction
    B: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 3:
            raise InvariantDomainError("TrClass", f"erwartet d ≥ 3 (d={self.d})")
        if len(self.B) != self.d - 1:
            raise ValueError(f"TR̄_{self.d} braucht {self.d - 1} B-Koeffizienten, erhalten {len(self.B)}")

    @classmethod
    def of(cls, d: int, A: Rational, B) -> "TrClass":
        return cls(d, Fraction(A), tuple(Fraction(x) for x in B))

    @property
    def g(self) -> int:
        return 2 * self.d - 3

    def coefficients(self) -> Tuple[Fraction, ...]:
        return (self.A,) + self.B

    @staticmethod
    def coefficient_names(d: int) -> Tuple[str, ...]:
        return ("A",) + tuple(f"B{i}" for i in range(d - 1))

    def to_mg_class(self) -> MgClass:
        return MgClass.of(self.g, self.A, [-b for b in self.B])

    def common_denominator(self) -> int:
        return lcm(*(x.denominator for x in self.coefficients()))

    def __str__(self) -> str:
        return str(self.to_mg_class())

    def to_latex(self) -> str:
        return self.to_mg_class().to_latex()


def expand_tr_class(d: int, A: Rational, B0: Rational, B1: Rational) -> TrClass:
    """Ergänzt B₂..B_{d−2} über b_i = i(g−i)/(g−1)·b₁."""
    higher = flag_coefficients(2 * d - 3, B1)
    return TrClass.of(d, A, (B0,) + higher)


def tr_constraint_system(d: int) -> LinearSystem:
    return LinearSystem.from_rows(*constraint_rows(d))


def solve_tr_class(d: int) -> TrClass:
    """
    Löst die drei Bedingungen exakt und expandiert zur vollen Klasse.

    Raises:
        ConstraintDegeneracyError: wenn das System nicht eindeutig lösbar ist
    """
    system = tr_constraint_system(d)
    try:
        A, B0, B1 = solve_linear(system)
    except (UnderdeterminedSystemError, InconsistentSystemError) as e:
        raise ConstraintDegeneracyError(d, e) from e

    residuals = evaluate_residuals(system, (A, B0, B1))
    assert all(r == 0 for r in residuals), residuals

    tr = expand_tr_class(d, A, B0, B1)
    logger.info(
        "✅ TR̄_%d gelöst: %s",
        d,
        ", ".join(f"{name}={format_rational(x)}" for name, x in zip(UNKNOWNS, (A, B0, B1))),
    )
    return tr
