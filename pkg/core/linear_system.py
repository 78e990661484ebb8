import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from core.errors import DerivationInconsistencyError, InconsistentSystemError, UnderdeterminedSystemError
from core.scalar import Rational, format_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearRow:
    """Eine Gleichung Σ c_j x_j = rhs mit Quellenangabe."""

    coefficients: Tuple[Fraction, ...]
    rhs: Fraction
    label: str

    @classmethod
    def of(cls, coefficients: Sequence[Rational], rhs: Rational, label: str) -> "LinearRow":
        return cls(tuple(Fraction(c) for c in coefficients), Fraction(rhs), label)

    @property
    def width(self) -> int:
        return len(self.coefficients)

    def evaluate(self, solution: Sequence[Rational]) -> Fraction:
        return sum(
            (c * Fraction(x) for c, x in zip(self.coefficients, solution)), Fraction(0)
        )

    def describe(self, unknowns: Sequence[str]) -> str:
        terms = [
            f"{format_rational(c)}·{name}"
            for c, name in zip(self.coefficients, unknowns)
            if c != 0
        ]
        return f"{' + '.join(terms) or '0'} = {format_rational(self.rhs)}"


@dataclass(frozen=True)
class LinearSystem:
    rows: Tuple[LinearRow, ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("Ein lineares System braucht mindestens eine Zeile")
        widths = {row.width for row in self.rows}
        if len(widths) != 1:
            raise ValueError(f"Zeilen haben unterschiedliche Breiten: {sorted(widths)}")
        labels = [row.label for row in self.rows]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Zeilenbezeichnungen sind nicht eindeutig: {labels}")

    @classmethod
    def from_rows(cls, *rows: LinearRow) -> "LinearSystem":
        return cls(tuple(rows))

    @property
    def width(self) -> int:
        return self.rows[0].width


def evaluate_residuals(system: LinearSystem, solution: Sequence[Rational]) -> List[Fraction]:
    """Gibt für jede Zeile (linke Seite − rhs) exakt zurück."""
    return [row.evaluate(solution) - row.rhs for row in system.rows]


def solve_linear(system: LinearSystem) -> List[Fraction]:
    """
    Löst das System exakt per Gauß-Jordan-Elimination.

    Pivotwahl: erster von Null verschiedener Eintrag der Spalte.
    Überbestimmte, aber konsistente Systeme sind erlaubt.

    Raises:
        InconsistentSystemError: eine Zeile reduziert sich auf 0 = c mit c ≠ 0
        UnderdeterminedSystemError: Rang kleiner als die Anzahl der Unbekannten
        DerivationInconsistencyError: die Lösung erfüllt eine Zeile nicht exakt
    """
    width = system.width
    matrix = [list(row.coefficients) + [row.rhs] for row in system.rows]
    labels = [row.label for row in system.rows]

    rank = 0
    pivot_columns: List[int] = []
    for column in range(width):
        pivot = next(
            (r for r in range(rank, len(matrix)) if matrix[r][column] != 0), None
        )
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        labels[rank], labels[pivot] = labels[pivot], labels[rank]

        pivot_value = matrix[rank][column]
        matrix[rank] = [entry / pivot_value for entry in matrix[rank]]
        for r in range(len(matrix)):
            factor = matrix[r][column]
            if r != rank and factor != 0:
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]

        pivot_columns.append(column)
        rank += 1

    for r in range(rank, len(matrix)):
        if matrix[r][width] != 0:
            raise InconsistentSystemError(labels[r])
    if rank < width:
        raise UnderdeterminedSystemError(rank, width)

    solution = [Fraction(0)] * width
    for r, column in enumerate(pivot_columns):
        solution[column] = matrix[r][width]

    residuals = evaluate_residuals(system, solution)
    failing = [label for label, residual in zip((row.label for row in system.rows), residuals) if residual != 0]
    if failing:
        raise DerivationInconsistencyError(f"Residuen ungleich 0 in {', '.join(failing)}")
    logger.debug("✅ System mit %d Zeilen gelöst: %s", len(system.rows), solution)
    return solution
