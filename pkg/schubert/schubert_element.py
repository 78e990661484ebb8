from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple

from core.errors import InvalidSchubertIndexError


@dataclass(frozen=True, order=True)
class SchubertIndex:
    """
    Zweizeiliger Schubert-Index σ_(a,b) in G(1,n), Kodimension a + b.

    In Partitionsschreibweise entspricht (a,b) der Partition (b,a) im
    Kasten 2 × (n−1).
    """

    a: int
    b: int
    n: int

    def __post_init__(self):
        if not 0 <= self.a <= self.b <= self.n - 1:
            raise InvalidSchubertIndexError(self.a, self.b, self.n)

    @property
    def codimension(self) -> int:
        return self.a + self.b

    @classmethod
    def fundamental(cls, n: int) -> "SchubertIndex":
        return cls(0, 0, n)

    @classmethod
    def point(cls, n: int) -> "SchubertIndex":
        return cls(n - 1, n - 1, n)

    @classmethod
    def special(cls, c: int, n: int) -> "SchubertIndex":
        return cls(0, c, n)

    def dual(self) -> "SchubertIndex":
        return SchubertIndex(self.n - 1 - self.b, self.n - 1 - self.a, self.n)

    def __str__(self) -> str:
        return f"σ_({self.a},{self.b})"


@dataclass(frozen=True)
class SchubertElement:
    """Ganzzahlige Linearkombination von Schubert-Klassen in einem festen G(1,n)."""

    n: int
    terms: Dict[SchubertIndex, int] = field(default_factory=dict)

    def __post_init__(self):
        normalized = {}
        for index, coefficient in self.terms.items():
            if index.n != self.n:
                raise ValueError(f"{index} gehört nicht zu G(1,{self.n})")
            if coefficient != 0:
                normalized[index] = coefficient
        object.__setattr__(self, "terms", normalized)

    @classmethod
    def basis(cls, index: SchubertIndex) -> "SchubertElement":
        return cls(index.n, {index: 1})

    @classmethod
    def fundamental(cls, n: int) -> "SchubertElement":
        return cls.basis(SchubertIndex.fundamental(n))

    @classmethod
    def from_terms(cls, n: int, items: Iterable[Tuple[SchubertIndex, int]]) -> "SchubertElement":
        collected: Dict[SchubertIndex, int] = defaultdict(int)
        for index, coefficient in items:
            collected[index] += coefficient
        return cls(n, dict(collected))

    def coefficient(self, index: SchubertIndex) -> int:
        return self.terms.get(index, 0)

    def point_coefficient(self) -> int:
        return self.coefficient(SchubertIndex.point(self.n))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SchubertElement") -> "SchubertElement":
        if other.n != self.n:
            raise ValueError("Summanden aus verschiedenen Grassmannschen")
        return SchubertElement.from_terms(
            self.n, list(self.terms.items()) + list(other.terms.items())
        )

    def __rmul__(self, scalar: int) -> "SchubertElement":
        return SchubertElement(self.n, {i: scalar * c for i, c in self.terms.items()})

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(
            f"{'' if c == 1 else c}{index}" for index, c in sorted(self.terms.items())
        )
