"""
Zählungen der Form n·X = T auf Kurven mit voller rationaler n-Torsion.

Nur unter dieser Voraussetzung stimmen die Zählungen über F_p mit den
geometrischen Anzahlen überein; ohne sie wird abgebrochen.
"""

from dataclasses import dataclass
from typing import List, Sequence

from core.errors import InsufficientTorsionError, NoSolutionsOverFieldError
from invariants.pencil_counts import hurwitz_ramification_degree
from oracle.weierstrass_curve import ECPoint, WeierstrassCurve


def torsion_solutions(curve: WeierstrassCurve, n: int, target: ECPoint) -> List[ECPoint]:
    """Alle rationalen X mit n·X = target."""
    curve.require(target)
    return [X for X in curve.points if curve.multiply(n, X) == target]


def count_torsion_solutions(
    curve: WeierstrassCurve, n: int, target: ECPoint, exclusions: Sequence[ECPoint] = ()
) -> int:
    """
    Anzahl der X mit n·X = target, ohne die ausgeschlossenen Punkte.

    Raises:
        InsufficientTorsionError: E[n](F_p) hat weniger als n² Punkte
        NoSolutionsOverFieldError: target ist kein n-faches über F_p
    """
    torsion = curve.torsion_points(n)
    if len(torsion) != n * n:
        raise InsufficientTorsionError(n, len(torsion))
    curve.require(*exclusions)

    solutions = torsion_solutions(curve, n, target)
    if not solutions:
        raise NoSolutionsOverFieldError(n, target)
    excluded = set(exclusions)
    return sum(1 for X in solutions if X not in excluded)


def count_affine_combination(curve: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> int:
    """Lösungen von 3X = P + 2Q, ohne Ausschlüsse."""
    target = curve.add(P, curve.multiply(2, Q))
    return count_torsion_solutions(curve, 3, target)


@dataclass(frozen=True)
class TriplePencilCount:
    """Paare (u, v): u ≠ base mit 3u = 3·base, v ein restlicher einfacher Verzweigungspunkt."""

    triple_points: int
    residual_simple_points: int

    @property
    def pairs(self) -> int:
        return self.triple_points * self.residual_simple_points

    @property
    def pencils(self) -> int:
        # jedes Büschel wird über seine beiden einfachen Punkte doppelt gezählt
        return self.pairs // 2


def count_triple_pencil_pairs(curve: WeierstrassCurve, base: ECPoint) -> TriplePencilCount:
    triple_points = count_torsion_solutions(curve, 3, curve.multiply(3, base), [base])
    # g¹₃ auf E: 2·3 + 2·1 − 2 = 6 Verzweigungen, zwei Dreifachpunkte verbrauchen 4
    residual = hurwitz_ramification_degree(3, 1) - 4
    return TriplePencilCount(triple_points, residual)
