from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from core.scalar import Rational


@dataclass(frozen=True)
class CitedConstant:
    """
    Eine Konstante, deren Wert nicht hergeleitet, sondern zitiert wird.

    `quote` ist der wörtliche Ankertext, `cross_check` berechnet den Wert
    (falls möglich) unabhängig aus anderen Modulen nach.
    """

    name: str
    value: Rational
    quote: str
    cross_check: Optional[Callable[[], Rational]] = None

    def recomputed(self) -> Optional[Fraction]:
        if self.cross_check is None:
            return None
        return Fraction(self.cross_check())

    def is_consistent(self) -> bool:
        recomputed = self.recomputed()
        return recomputed is None or recomputed == Fraction(self.value)
