"""Pieri-Multiplikation, Giambelli-Zerlegung und Integrale auf G(1,n)."""

from typing import List, Sequence, Tuple

from core.errors import InvalidSpecialClassError, NotTopDegreeError
from core.scalar import binomial
from schubert.schubert_element import SchubertElement, SchubertIndex

Monomial = Tuple[int, ...]


def pieri_multiply(element: SchubertElement, c: int) -> SchubertElement:
    """
    Multipliziert mit der speziellen Klasse σ_(0,c).

    σ_(0,c)·σ_(a,b) = Σ σ_(a′,b′) über a′ + b′ = a + b + c mit
    a ≤ a′ ≤ b ≤ b′ ≤ n−1; Terme außerhalb des Kastens entfallen.
    """
    n = element.n
    if not 1 <= c <= n - 1:
        raise InvalidSpecialClassError(c, n)

    products = []
    for index, coefficient in element.terms.items():
        total = index.a + index.b + c
        # b ≤ b′ ≤ n−1 schränkt a′ = total − b′ zusätzlich ein
        for a_new in range(max(index.a, total - (n - 1)), min(index.b, index.a + c) + 1):
            products.append((SchubertIndex(a_new, total - a_new, n), coefficient))
    return SchubertElement.from_terms(n, products)


def multiply_specials(element: SchubertElement, cs: Sequence[int]) -> SchubertElement:
    for c in cs:
        element = pieri_multiply(element, c)
        if element.is_zero:
            break
    return element


def special_product_integral(n: int, cs: Sequence[int]) -> int:
    """Koeffizient der Punktklasse im Produkt der σ_(0,c), c ∈ cs."""
    top_degree = 2 * (n - 1)
    if sum(cs) != top_degree:
        raise NotTopDegreeError(sum(cs), top_degree)
    product = multiply_specials(SchubertElement.fundamental(n), cs)
    return product.point_coefficient()


def giambelli(index: SchubertIndex) -> List[Tuple[int, Monomial]]:
    """
    σ_(a,b) = σ_b·σ_a − σ_(b+1)·σ_(a−1) als Polynom in speziellen Klassen.

    σ_0 = 1 wird weggelassen; Terme mit σ_(−1) oder σ_k, k > n−1, entfallen.
    """
    n = index.n
    expansion = []
    for sign, degrees in ((1, (index.b, index.a)), (-1, (index.b + 1, index.a - 1))):
        if any(k < 0 or k > n - 1 for k in degrees):
            continue
        expansion.append((sign, tuple(k for k in degrees if k > 0)))
    return expansion


def schubert_pairing(x: SchubertIndex, y: SchubertIndex) -> int:
    """Integral von σ_x·σ_y über G(1,n)."""
    if x.n != y.n:
        raise ValueError(f"{x} und {y} liegen in verschiedenen Grassmannschen")
    top_degree = 2 * (x.n - 1)
    if x.codimension + y.codimension != top_degree:
        raise NotTopDegreeError(x.codimension + y.codimension, top_degree)

    base = SchubertElement.basis(x)
    return sum(
        sign * multiply_specials(base, monomial).point_coefficient()
        for sign, monomial in giambelli(y)
    )


def catalan_degree(n: int) -> int:
    """Grad von G(1,n) in der Plücker-Einbettung: (2n−2)!/(n!(n−1)!)."""
    return binomial(2 * n - 2, n - 1) // n
