"""
Kreuzidentitäten zwischen den Invarianten.

Jede Prüfung liefert einen `IdentityReport` mit allen Einzeltermen, damit
bei einer Abweichung sichtbar wird, welcher Term driftet. Die Funktionen
`identity_*` geben nur den Wahrheitswert zurück.
"""

from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Dict, Tuple

from core.errors import InvariantDomainError
from core.scalar import as_integer, binomial, inv_factorial
from invariants.degeneration_counts import F_inv, N1_inv, N2_inv, N3_inv, N_inv
from invariants.pencil_counts import a_inv, alpha, b_inv, c_inv, e_inv
from schubert.pieri import special_product_integral


@dataclass
class IdentityReport:
    name: str
    d: int
    lhs: int
    terms: Dict[str, int] = field(default_factory=dict)
    side_checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def rhs(self) -> int:
        return sum(self.terms.values())

    @property
    def residual(self) -> int:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.residual == 0 and all(self.side_checks.values())


def check_N_decomposition(d: int) -> IdentityReport:
    if d < 3:
        raise InvariantDomainError("N_decomposition", f"erwartet d ≥ 3 (d={d})")
    closed_first = as_integer(
        32 * factorial(2 * d - 4)
        * (inv_factorial(d - 3) ** 2 - inv_factorial(d) * inv_factorial(d - 6)),
        "N-Zerlegung",
    )
    schubert_first = 64 * binomial(2 * d - 4, 2) * special_product_integral(
        d, [2, 2] + [1] * (2 * d - 6)
    )
    return IdentityReport(
        name="N_decomposition",
        d=d,
        lhs=N_inv(d),
        terms={
            "two_cusp_tails": closed_first,
            "16·C(2d−4,d−1)": 16 * binomial(2 * d - 4, d - 1),
            "80·C(2d−4,d)": 80 * binomial(2 * d - 4, d),
        },
        side_checks={"schubert_term": closed_first == schubert_first},
    )


def check_N_N1(d: int) -> IdentityReport:
    if d < 3:
        raise InvariantDomainError("N_N1", f"erwartet d ≥ 3 (d={d})")
    g = 2 * d - 5
    return IdentityReport(
        name="N_N1",
        d=d,
        lhs=N_inv(d),
        terms={
            "N1(d)": N1_inv(d),
            "20·a(d,2d−5)": 20 * a_inv(d, g),
            "8·a(d−1,2d−5)": 8 * a_inv(d - 1, g),
            "8·e(d,2d−5)": 8 * e_inv(d, g),
        },
    )


def check_N2_N3(d: int) -> IdentityReport:
    if d < 4:
        raise InvariantDomainError("N2_N3", f"Zerlegung erfordert d ≥ 4 (d={d})")
    g = 2 * d - 5
    a_lower = a_inv(d - 1, g)
    return IdentityReport(
        name="N2_N3",
        d=d,
        lhs=N2_inv(d),
        terms={
            "4·e(d,2d−5)": 4 * e_inv(d, g),
            "(6d−16)·b(d−1,2d−5)": (6 * d - 16) * b_inv(d - 1, g),
            "38·a(d,2d−5)": 38 * a_inv(d, g),
            "11·a(d−1,2d−5)": 11 * a_lower,
            "9(6d−15)·a(d−1,2d−5)": 9 * (6 * d - 15) * a_lower,
            "N3(d)": N3_inv(d),
        },
    )


def check_b_eq_e(d: int) -> IdentityReport:
    if d < 4:
        raise InvariantDomainError("b_eq_e", f"erwartet d ≥ 4 (d={d})")
    g = 2 * d - 5
    return IdentityReport(
        name="b_eq_e", d=d, lhs=b_inv(d - 1, g), terms={"e(d−1,2d−5)": e_inv(d - 1, g)}
    )


def check_c_combination(d: int) -> IdentityReport:
    if d < 3:
        raise InvariantDomainError("c_combination", f"erwartet d ≥ 3 (d={d})")
    g = 2 * d - 4
    return IdentityReport(
        name="c_combination",
        d=d,
        lhs=128 * binomial(g, d),
        terms={
            "2·c(d,2d−4,1)": 2 * c_inv(d, g, 1),
            "2·c(d,2d−4,3)": 2 * c_inv(d, g, 3),
            "4·c(d,2d−4,2)": 4 * c_inv(d, g, 2),
        },
    )


def check_alpha_is_a(d: int) -> IdentityReport:
    return IdentityReport(
        name="alpha_is_a", d=d, lhs=alpha(d), terms={"a(d,2d−4)": a_inv(d, 2 * d - 4)}
    )


def check_F_schubert(d: int) -> IdentityReport:
    """F(d) gegen das Schubert-Integral σ_(0,2)²·σ_(0,1)^(2d−6)."""
    return IdentityReport(
        name="F_schubert",
        d=d,
        lhs=F_inv(d),
        terms={"∫σ_(0,2)²σ_(0,1)^(2d−6)": special_product_integral(d, [2, 2] + [1] * (2 * d - 6))},
    )


def identity_N_decomposition(d: int) -> bool:
    return check_N_decomposition(d).holds


def identity_N_N1(d: int) -> bool:
    return check_N_N1(d).holds


def identity_N2_N3(d: int) -> bool:
    return check_N2_N3(d).holds


def identity_b_eq_e(d: int) -> bool:
    return check_b_eq_e(d).holds


def identity_c_combination(d: int) -> bool:
    return check_c_combination(d).holds


def alpha_is_a(d: int) -> bool:
    return check_alpha_is_a(d).holds


# Name -> (Prüfung, kleinstes zulässiges d)
IDENTITY_CHECKS: Dict[str, Tuple[Callable[[int], IdentityReport], int]] = {
    "N_decomposition": (check_N_decomposition, 3),
    "N_N1": (check_N_N1, 3),
    "N2_N3": (check_N2_N3, 4),
    "b_eq_e": (check_b_eq_e, 4),
    "c_combination": (check_c_combination, 3),
    "alpha_is_a": (check_alpha_is_a, 3),
}


def applicable_checks(d: int) -> Dict[str, Callable[[int], IdentityReport]]:
    return {name: check for name, (check, d_min) in IDENTITY_CHECKS.items() if d >= d_min}
