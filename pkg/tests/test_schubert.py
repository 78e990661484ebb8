import pytest

from core.errors import InvalidSchubertIndexError, InvalidSpecialClassError, NotTopDegreeError
from schubert.pieri import (
    catalan_degree,
    giambelli,
    multiply_specials,
    pieri_multiply,
    schubert_pairing,
    special_product_integral,
)
from schubert.schubert_element import SchubertElement, SchubertIndex


def element(n, *terms):
    return SchubertElement.from_terms(n, [(SchubertIndex(a, b, n), c) for a, b, c in terms])


def test_pieri_in_g13():
    special = SchubertElement.basis(SchubertIndex.special(1, 3))
    assert pieri_multiply(special, 1) == element(3, (0, 2, 1), (1, 1, 1))
    assert pieri_multiply(element(3, (1, 1, 1)), 1) == element(3, (1, 2, 1))
    assert pieri_multiply(element(3, (2, 2, 1)), 2).is_zero


def test_pieri_respects_box():
    assert pieri_multiply(element(3, (0, 2, 1)), 2) == element(3, (2, 2, 1))
    assert pieri_multiply(element(4, (1, 2, 1)), 1) == element(4, (1, 3, 1), (2, 2, 1))


@pytest.mark.parametrize("c", [0, 3, -1])
def test_invalid_special_class(c):
    with pytest.raises(InvalidSpecialClassError):
        pieri_multiply(SchubertElement.fundamental(3), c)


def test_invalid_index():
    with pytest.raises(InvalidSchubertIndexError):
        SchubertIndex(2, 1, 3)
    with pytest.raises(InvalidSchubertIndexError):
        SchubertIndex(0, 3, 3)


@pytest.mark.parametrize(
    "n, cs, expected",
    [
        (3, [2, 2], 1),
        (4, [2, 2, 1, 1], 2),
        (4, [1] * 6, 5),
        (5, [3, 1, 1, 1, 1, 1], 4),
    ],
)
def test_special_product_integral(n, cs, expected):
    assert special_product_integral(n, cs) == expected


def test_special_product_integral_requires_top_degree():
    with pytest.raises(NotTopDegreeError) as excinfo:
        special_product_integral(3, [1])
    assert excinfo.value.top_degree == 4


@pytest.mark.parametrize("n", range(2, 9))
def test_plucker_degree_is_catalan(n):
    assert special_product_integral(n, [1] * (2 * n - 2)) == catalan_degree(n)


def test_catalan_values():
    assert [catalan_degree(n) for n in range(2, 7)] == [1, 2, 5, 14, 42]


def test_giambelli():
    assert giambelli(SchubertIndex(1, 2, 4)) == [(1, (2, 1)), (-1, (3,))]
    assert giambelli(SchubertIndex.special(2, 4)) == [(1, (2,))]
    assert giambelli(SchubertIndex(2, 3, 4)) == [(1, (3, 2))]


def test_pairing_is_duality():
    assert schubert_pairing(SchubertIndex(0, 1, 3), SchubertIndex(1, 2, 3)) == 1
    x = SchubertIndex(1, 2, 5)
    y = SchubertIndex(1, 4, 5)
    assert x.codimension + y.codimension == 8
    assert schubert_pairing(x, y) == 0
    assert schubert_pairing(x, x.dual()) == 1


def test_pairing_wrong_degree():
    with pytest.raises(NotTopDegreeError):
        schubert_pairing(SchubertIndex(0, 1, 3), SchubertIndex(0, 1, 3))


def test_multiply_specials_stops_at_zero():
    product = multiply_specials(SchubertElement.fundamental(3), [2, 2, 1])
    assert product.is_zero
    assert str(product) == "0"


def test_element_rejects_foreign_index():
    with pytest.raises(ValueError):
        SchubertElement(3, {SchubertIndex(0, 1, 4): 1})
