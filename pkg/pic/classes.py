"""
Divisorklassen auf M̄_g (Basis λ, δ₀..δ_⌊g/2⌋) und auf M̄_{2,1}
(Basis ψ, λ, δ₀, δ₁ mit Mumfords Relation λ = δ₀/10 + δ₁/5).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from core.scalar import Rational, format_rational, latex_rational


def _combination(terms: Iterable[Tuple[Fraction, str]], formatter) -> str:
    parts = []
    for coefficient, symbol in terms:
        if coefficient == 0:
            continue
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(coefficient)
        body = symbol if magnitude == 1 else f"{formatter(magnitude)}{symbol}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    rendered = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        rendered += f" {sign} {body}"
    return rendered


@dataclass(frozen=True)
class MgClass:
    """λ-Koeffizient plus δ_i-Koeffizienten, i = 0..⌊g/2⌋."""

    g: int
    lambda_: Fraction
    delta: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"M̄_g erfordert g ≥ 2 (g={self.g})")
        if len(self.delta) != self.g // 2 + 1:
            raise ValueError(
                f"M̄_{self.g} braucht {self.g // 2 + 1} δ-Koeffizienten, erhalten {len(self.delta)}"
            )

    @classmethod
    def of(cls, g: int, lambda_: Rational, delta: Sequence[Rational]) -> "MgClass":
        return cls(g, Fraction(lambda_), tuple(Fraction(x) for x in delta))

    @classmethod
    def zero(cls, g: int) -> "MgClass":
        return cls.of(g, 0, [0] * (g // 2 + 1))

    def _check_genus(self, other: "MgClass"):
        if other.g != self.g:
            raise ValueError(f"Klassen auf M̄_{self.g} und M̄_{other.g} sind nicht kombinierbar")

    def __add__(self, other: "MgClass") -> "MgClass":
        self._check_genus(other)
        return MgClass(
            self.g,
            self.lambda_ + other.lambda_,
            tuple(x + y for x, y in zip(self.delta, other.delta)),
        )

    def __rmul__(self, scalar: Rational) -> "MgClass":
        scalar = Fraction(scalar)
        return MgClass(self.g, scalar * self.lambda_, tuple(scalar * x for x in self.delta))

    def __neg__(self) -> "MgClass":
        return -1 * self

    def __sub__(self, other: "MgClass") -> "MgClass":
        return self + (-other)

    def _terms(self):
        yield self.lambda_, "λ"
        for i, x in enumerate(self.delta):
            yield x, f"δ{i}"

    def __str__(self) -> str:
        return _combination(self._terms(), format_rational)

    def to_latex(self) -> str:
        terms = [(self.lambda_, "\\lambda")] + [
            (x, f"\\delta_{{{i}}}") for i, x in enumerate(self.delta)
        ]
        return _combination(terms, latex_rational)


@dataclass(frozen=True, eq=False)
class M21Class:
    """
    Klasse ψ·psi + λ·lambda_ + δ₀·delta0 + δ₁·delta1 auf M̄_{2,1}.

    Gleichheit wird immer in der reduzierten Basis {ψ, λ, δ₀} geprüft.
    """

    psi: Fraction
    lambda_: Fraction
    delta0: Fraction
    delta1: Fraction = Fraction(0)

    @classmethod
    def of(cls, psi: Rational, lambda_: Rational, delta0: Rational, delta1: Rational = 0) -> "M21Class":
        return cls(Fraction(psi), Fraction(lambda_), Fraction(delta0), Fraction(delta1))

    @property
    def vector(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.psi, self.lambda_, self.delta0, self.delta1)

    def reduced(self) -> "M21Class":
        # δ₁ = 5λ − δ₀/2
        return M21Class(
            self.psi,
            self.lambda_ + 5 * self.delta1,
            self.delta0 - self.delta1 / 2,
            Fraction(0),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, M21Class):
            return NotImplemented
        return self.reduced().vector == other.reduced().vector

    def __hash__(self) -> int:
        return hash(self.reduced().vector)

    def __add__(self, other: "M21Class") -> "M21Class":
        return M21Class(*(x + y for x, y in zip(self.vector, other.vector)))

    def __rmul__(self, scalar: Rational) -> "M21Class":
        scalar = Fraction(scalar)
        return M21Class(*(scalar * x for x in self.vector))

    def __neg__(self) -> "M21Class":
        return -1 * self

    def __sub__(self, other: "M21Class") -> "M21Class":
        return self + (-other)

    def _terms(self, psi: str, lam: str, d0: str, d1: str):
        return [(self.psi, psi), (self.lambda_, lam), (self.delta0, d0), (self.delta1, d1)]

    def __str__(self) -> str:
        return _combination(self._terms("ψ", "λ", "δ0", "δ1"), format_rational)

    def to_latex(self) -> str:
        return _combination(
            self._terms("\\psi", "\\lambda", "\\delta_{0}", "\\delta_{1}"), latex_rational
        )


def mumford_reduce(c: M21Class) -> M21Class:
    return c.reduced()
