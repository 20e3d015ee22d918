import pytest

from fano21.orient import oriented_automorphism_group
from fano21.perms import Perm, group_from_elements
from fano21.octonion import (
    ONE,
    ZERO,
    algebra_automorphism_perms,
    basis_product,
    cartan_table,
    conjugate,
    is_algebra_automorphism,
    multiply,
    norm,
    octonion,
    point_to_unit,
    random_octonions,
    table_to_json,
    table_to_text,
    unit,
    unit_to_point,
)


def test_unit_point_mapping():
    assert unit_to_point(7) == 0
    assert point_to_unit(0) == 7
    for i in range(1, 8):
        assert point_to_unit(unit_to_point(i)) == i
    with pytest.raises(ValueError):
        unit_to_point(8)
    with pytest.raises(ValueError):
        point_to_unit(7)


def test_basis_products():
    assert basis_product(1, 2) == (1, 4)
    assert basis_product(2, 1) == (-1, 4)
    assert basis_product(1, 4) == (-1, 2)
    assert basis_product(2, 3) == (1, 5)
    for i in range(1, 8):
        assert basis_product(i, i) == (-1, 0)


def test_cartan_table_antisymmetry():
    table = cartan_table()
    for i in range(1, 8):
        for j in range(1, 8):
            sign, k = table[i - 1][j - 1]
            sign2, k2 = table[j - 1][i - 1]
            assert k2 == k
            assert sign2 == (sign if i == j else -sign)


def test_identity_and_linearity():
    a = octonion([3, -1, 4, 1, -5, 9, 2, -6])
    assert multiply(ONE, a) == a
    assert multiply(a, ONE) == a
    assert multiply(a, ZERO) == ZERO
    assert a + ZERO == a and a - a == ZERO and -(-a) == a


def test_sample_product():
    # (1 + e1)(e2 + e4) = 2 e4
    a = ONE + unit(1)
    b = unit(2) + unit(4)
    assert multiply(a, b) == octonion([0, 0, 0, 0, 2, 0, 0, 0])


def test_not_associative():
    e1, e2, e3 = unit(1), unit(2), unit(3)
    left = multiply(multiply(e1, e2), e3)
    right = multiply(e1, multiply(e2, e3))
    assert left == -unit(6) and right == unit(6)


def test_alternative_on_samples():
    samples = random_octonions(60, seed=17)
    for a, b in zip(samples[::2], samples[1::2]):
        aa = multiply(a, a)
        assert multiply(aa, b) == multiply(a, multiply(a, b))
        assert multiply(a, multiply(b, b)) == multiply(multiply(a, b), b)


def test_norm_multiplicative_on_samples():
    samples = random_octonions(60, seed=23)
    for a, b in zip(samples[::2], samples[1::2]):
        assert norm(multiply(a, b)) == norm(a) * norm(b)


def test_conjugate_norm():
    for a in random_octonions(10, seed=5):
        n = norm(a)
        assert multiply(a, conjugate(a)) == octonion([n, 0, 0, 0, 0, 0, 0, 0])
        assert multiply(conjugate(a), a) == octonion([n, 0, 0, 0, 0, 0, 0, 0])


def test_automorphism_perms(qr):
    perms = algebra_automorphism_perms()
    assert len(perms) == 21
    group = group_from_elements(7, perms)
    assert group.elements == oriented_automorphism_group(qr).elements


def test_non_automorphism_detected():
    # swapping two points of a block breaks at least one signed product
    assert not is_algebra_automorphism(Perm((1, 0, 2, 3, 4, 5, 6)))


def test_is_algebra_automorphism_checks_degree():
    with pytest.raises(ValueError):
        is_algebra_automorphism(Perm((0, 1, 2)))


def test_random_octonions_deterministic():
    assert random_octonions(5) == random_octonions(5)
    assert random_octonions(5, seed=1) != random_octonions(5, seed=2)


def test_table_serializations():
    data = table_to_json()
    assert len(data["matrix"]) == 7
    assert data["matrix"][0][0] == -1  # e1 e1 = -1
    assert data["matrix"][0][1] == 4  # e1 e2 = e4
    assert data["matrix"][1][0] == -4
    text = table_to_text()
    assert "e7" in text and "+e4" in text and "-1" in text
    assert len(text.splitlines()) == 8
