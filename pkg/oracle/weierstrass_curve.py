"""
Elliptische Kurven y² = x³ + ax + b über F_p mit Sehnen-Tangenten-Gesetz.

Gruppenstruktur und Torsion werden durch vollständige Aufzählung der Punkte
bestimmt; das ist nur für kleine p (< 200) gedacht.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from sympy import divisors, isprime

from core.errors import InvalidPointError


@dataclass(frozen=True)
class ECPoint:
    """Affiner Punkt (x, y) oder der unendlich ferne Punkt (x = y = None)."""

    x: Optional[int] = None
    y: Optional[int] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = ECPoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    p: int
    a: int
    b: int

    def __post_init__(self):
        if self.p <= 3 or not isprime(self.p):
            raise ValueError(f"p muss eine Primzahl > 3 sein (p={self.p})")
        if self.discriminant % self.p == 0:
            raise ValueError(f"{self} ist singulär")

    @property
    def discriminant(self) -> int:
        return (4 * self.a**3 + 27 * self.b**2) % self.p

    def __str__(self) -> str:
        return f"y² = x³ + {self.a}x + {self.b} über F_{self.p}"

    def rhs(self, x: int) -> int:
        return (x * x * x + self.a * x + self.b) % self.p

    def contains(self, point: ECPoint) -> bool:
        if point.is_infinity:
            return True
        return (point.y * point.y - self.rhs(point.x)) % self.p == 0

    def require(self, *points: ECPoint):
        for point in points:
            if not self.contains(point):
                raise InvalidPointError(point, self)

    @cached_property
    def points(self) -> Tuple[ECPoint, ...]:
        square_roots: Dict[int, List[int]] = {}
        for y in range(self.p):
            square_roots.setdefault(y * y % self.p, []).append(y)
        affine = [
            ECPoint(x, y) for x in range(self.p) for y in square_roots.get(self.rhs(x), [])
        ]
        return (INFINITY, *affine)

    @property
    def order(self) -> int:
        return len(self.points)

    def negate(self, point: ECPoint) -> ECPoint:
        if point.is_infinity:
            return point
        return ECPoint(point.x, (-point.y) % self.p)

    def add(self, P: ECPoint, Q: ECPoint) -> ECPoint:
        self.require(P, Q)
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x and (P.y + Q.y) % self.p == 0:
            return INFINITY

        if P.x == Q.x:
            slope = (3 * P.x * P.x + self.a) * pow(2 * P.y, -1, self.p)
        else:
            slope = (Q.y - P.y) * pow(Q.x - P.x, -1, self.p)
        slope %= self.p

        x = (slope * slope - P.x - Q.x) % self.p
        y = (slope * (P.x - x) - P.y) % self.p
        return ECPoint(x, y)

    def multiply(self, k: int, P: ECPoint) -> ECPoint:
        """k·P per Double-and-Add, negative k über −P."""
        if k < 0:
            return self.multiply(-k, self.negate(P))
        result, addend = INFINITY, P
        while k:
            if k & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            k >>= 1
        return result

    def point_order(self, P: ECPoint) -> int:
        return next(k for k in divisors(self.order) if self.multiply(k, P).is_infinity)

    def torsion_points(self, n: int) -> List[ECPoint]:
        return [P for P in self.points if self.multiply(n, P).is_infinity]

    def has_full_torsion(self, n: int) -> bool:
        return self.order % (n * n) == 0 and len(self.torsion_points(n)) == n * n

    @cached_property
    def group_structure(self) -> Tuple[int, int]:
        """Invariante Faktoren (n₁, n₂) mit E(F_p) ≅ ℤ/n₁ × ℤ/n₂ und n₁ | n₂."""
        exponent = max(self.point_order(P) for P in self.points)
        return self.order // exponent, exponent


def group_law(P: ECPoint, Q: ECPoint, curve: WeierstrassCurve) -> ECPoint:
    return curve.add(P, Q)


def scalar_multiply(k: int, P: ECPoint, curve: WeierstrassCurve) -> ECPoint:
    return curve.multiply(k, P)
