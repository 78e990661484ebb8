"""
Anzahlen von Büscheln mit vorgeschriebener Verzweigung auf einer allgemeinen
Kurve vom Geschlecht g, plus Brill-Noether- und Riemann-Hurwitz-Buchhaltung.
"""

from math import factorial

from core.errors import InvariantDomainError
from core.scalar import as_integer, binomial, inv_factorial


def _require(condition: bool, name: str, message: str):
    if not condition:
        raise InvariantDomainError(name, message)


def a_inv(d: int, g: int) -> int:
    """Büschel L ∈ W¹_d(C) mit einem (2d−g−1)-fachen Punkt im festen Punkt p."""
    _require(d >= 2 and g >= 1 and 2 * d - g - 1 >= 0, "a", f"erwartet d ≥ 2, g ≥ 1, 2d−g−1 ≥ 0 (d={d}, g={g})")
    value = (2 * d - g - 1) * factorial(g) * inv_factorial(d) * inv_factorial(g - d + 1)
    return as_integer(value, f"a({d},{g})")


def b_inv(d: int, g: int) -> int:
    _require(d >= 2 and g >= 1 and 2 * d - g - 1 >= 0, "b", f"erwartet d ≥ 2, g ≥ 1, 2d−g−1 ≥ 0 (d={d}, g={g})")
    k = 2 * d - g
    value = (k - 1) * k * (k + 1) * factorial(g) * inv_factorial(d) * inv_factorial(g - d)
    return as_integer(value, f"b({d},{g})")


def c_inv(d: int, g: int, gamma: int) -> int:
    _require(gamma >= 1, "c", f"erwartet γ ≥ 1 (γ={gamma})")
    _require(g >= 0, "c", f"erwartet g ≥ 0 (g={g})")
    return (gamma * gamma * (2 * d - g) - gamma) * binomial(g, d)


def e_inv(d: int, g: int) -> int:
    _require(d >= 3 and g >= 0, "e", f"erwartet d ≥ 3, g ≥ 0 (d={d}, g={g})")
    value = 8 * factorial(g) * (
        inv_factorial(d - 3) * inv_factorial(g - d + 2)
        - inv_factorial(d) * inv_factorial(g - d - 1)
    )
    return as_integer(value, f"e({d},{g})")


def r_inv(a: int, b: int) -> int:
    """Paare x ≠ y auf einer Geschlecht-2-Kurve mit a·x ≡ b·y-artiger Relation: 2(a²b² − 1)."""
    _require(a >= b >= 0, "r", f"erwartet a ≥ b ≥ 0 (a={a}, b={b})")
    return 2 * (a * a * b * b - 1)


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether-Zahl ρ(g, r, d) = g − (r+1)(g−d+r)."""
    return g - (r + 1) * (g - d + r)


def hurwitz_ramification_degree(d: int, g: int) -> int:
    """Gesamter Verzweigungsgrad 2d + 2g − 2 einer Überlagerung vom Grad d."""
    _require(d >= 1, "hurwitz", f"erwartet d ≥ 1 (d={d})")
    return 2 * d + 2 * g - 2


def simple_branch_points(d: int) -> int:
    """Einfache Verzweigungspunkte neben den zwei Dreifachpunkten, Geschlecht 2d−3."""
    _require(d >= 3, "simple_branch_points", f"erwartet d ≥ 3 (d={d})")
    return hurwitz_ramification_degree(d, 2 * d - 3) - 4


def alpha(d: int) -> int:
    """Koeffizient α = 3(2d−4)!/(d!(d−3)!) der Einschränkung auf die Fermat-Kubik."""
    _require(d >= 3, "alpha", f"erwartet d ≥ 3 (d={d})")
    value = 3 * factorial(2 * d - 4) * inv_factorial(d) * inv_factorial(d - 3)
    return as_integer(value, f"α({d})")
