from typing import Iterator, Tuple

from sympy import primerange

from config.settings import ORACLE_PRIME_BOUND
from core.errors import InvariantDomainError, SearchExhaustedError
from oracle.weierstrass_curve import WeierstrassCurve
from util.logging_mixin import LoggingMixin

SUPPORTED_TORSION = (2, 3, 4)


class FullTorsionCurveFinder(LoggingMixin):
    """
    Sucht Kurven mit (ℤ/n)² ⊂ E(F_p).

    Nur Primzahlen p ≡ 1 mod n kommen in Frage (Weil-Paarung); innerhalb
    eines p werden alle nichtsingulären (a, b) in lexikographischer
    Reihenfolge geprüft.
    """

    def __init__(self, n: int, p_max: int = ORACLE_PRIME_BOUND):
        if n not in SUPPORTED_TORSION:
            raise InvariantDomainError("find_full_torsion_curve", f"erwartet n ∈ {SUPPORTED_TORSION} (n={n})")
        if p_max < 7:
            raise InvariantDomainError("find_full_torsion_curve", f"erwartet p_max ≥ 7 (p_max={p_max})")
        self.n = n
        self.p_max = p_max

    def candidates(self) -> Iterator[WeierstrassCurve]:
        for p in primerange(5, self.p_max + 1):
            if p % self.n != 1:
                continue
            for a in range(p):
                for b in range(p):
                    if (4 * a**3 + 27 * b**2) % p != 0:
                        yield WeierstrassCurve(p, a, b)

    def __iter__(self) -> Iterator[WeierstrassCurve]:
        for curve in self.candidates():
            if curve.has_full_torsion(self.n):
                self.logger.debug("🔍 %s hat volle %d-Torsion", curve, self.n)
                yield curve

    def find(self) -> Tuple[WeierstrassCurve, Tuple[int, int]]:
        curve = next(iter(self), None)
        if curve is None:
            self.logger.error("❌ Keine Kurve mit voller %d-Torsion bis p = %d", self.n, self.p_max)
            raise SearchExhaustedError(self.n, self.p_max)
        self.logger.info("✅ %s, Gruppe ℤ/%d × ℤ/%d", curve, *curve.group_structure)
        return curve, curve.group_structure


def iter_full_torsion_curves(n: int, p_max: int = ORACLE_PRIME_BOUND) -> Iterator[WeierstrassCurve]:
    return iter(FullTorsionCurveFinder(n, p_max))


def find_full_torsion_curve(n: int, p_max: int = ORACLE_PRIME_BOUND) -> Tuple[WeierstrassCurve, Tuple[int, int]]:
    return FullTorsionCurveFinder(n, p_max).find()
