"""Geschlossene Formeln für Büschel mit zwei unbestimmten Dreifachpunkten."""

from math import factorial

from core.errors import InvariantDomainError
from core.scalar import as_integer, inv_factorial


def _require_d(name: str, d: int):
    if d < 3:
        raise InvariantDomainError(name, f"erwartet d ≥ 3 (d={d})")


def F_inv(d: int) -> int:
    """g¹_d auf zweifach punktierter Kurve vom Geschlecht 2d−6 mit Dreifachpunkten in p und q."""
    _require_d("F", d)
    value = factorial(2 * d - 6) * (
        inv_factorial(d - 3) ** 2 - inv_factorial(d) * inv_factorial(d - 6)
    )
    return as_integer(value, f"F({d})")


def N_inv(d: int) -> int:
    """Büschel mit Dreifachverzweigung in zwei unbestimmten Punkten, Geschlecht 2d−4."""
    _require_d("N", d)
    value = (
        48 * (6 * d * d - 28 * d + 35) * factorial(2 * d - 4)
        * inv_factorial(d) * inv_factorial(d - 3)
    )
    return as_integer(value, f"N({d})")


def N1_inv(d: int) -> int:
    """Wie N, zusätzlich mit einem Doppelpunkt im festen Punkt p, Geschlecht 2d−5."""
    _require_d("N1", d)
    value = (
        24 * (12 * d ** 3 - 92 * d * d + 240 * d - 215) * factorial(2 * d - 4)
        * inv_factorial(d) * inv_factorial(d - 2)
    )
    return as_integer(value, f"N1({d})")


def N2_inv(d: int) -> int:
    """Büschel mit Dreifachpunkt in x und Verzweigung p + 2y, Geschlecht 2d−4 mit festem p."""
    _require_d("N2", d)
    value = (
        6 * (40 * d * d - 179 * d + 212) * factorial(2 * d - 4)
        * inv_factorial(d) * inv_factorial(d - 3)
    )
    return as_integer(value, f"N2({d})")


def N3_inv(d: int) -> int:
    """Büschel mit Dreifachpunkt in x und Verzweigung 2q + 2y, Geschlecht 2d−5 mit festem q."""
    # N3(3) = 0 über den Faktor (d−3)
    _require_d("N3", d)
    value = (
        84 * (d - 3) * (2 * d * d - 10 * d + 13) * factorial(2 * d - 4)
        * inv_factorial(d) * inv_factorial(d - 2)
    )
    return as_integer(value, f"N3({d})")
