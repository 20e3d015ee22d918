import math

import pytest

from fano21.perms import (
    DegreeMismatch,
    NotAPermutation,
    Perm,
    affine_group,
    affine_perm,
    classify_order21,
    compose,
    generate_group,
    group_from_elements,
    identity,
    perm_from_cycles,
)

LAMBDA2 = affine_perm(7, 2, 0)
TAU1 = affine_perm(7, 1, 1)


def test_images_must_be_bijection():
    with pytest.raises(NotAPermutation):
        Perm((0, 0, 1))


def test_compose_applies_right_first():
    # lambda2 tau1 maps 0 to 2; tau1 lambda2 maps 0 to 1
    assert compose(LAMBDA2, TAU1)(0) == 2
    assert compose(TAU1, LAMBDA2)(0) == 1


def test_compose_identity():
    p = perm_from_cycles("(1 5 4 6 2 3)", 7)
    assert compose(p, identity(7)) == p
    assert compose(identity(7), p) == p


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(7), identity(6))


def test_inverse_and_order():
    p = perm_from_cycles("(0 1 2)(3 4)", 7)
    assert compose(p, p.inverse()) == identity(7)
    assert p.order() == 6


def test_cycle_string_round_trip():
    for s in ["(1 5 4 6 2 3)", "(2 4)(3 5)", "()"]:
        p = perm_from_cycles(s, 7)
        assert perm_from_cycles(p.cycle_string(), 7) == p


def test_cycle_parse_rejects_garbage():
    with pytest.raises(ValueError):
        perm_from_cycles("(1 1)", 7)
    with pytest.raises(ValueError):
        perm_from_cycles("1 2 3", 7)


def test_generate_group_lambda_tau_is_f21():
    g = generate_group(7, [LAMBDA2, TAU1])
    assert g.order == 21


def test_generate_group_cyclic_and_trivial():
    assert generate_group(7, [TAU1]).order == 7
    assert generate_group(7, []).order == 1


def test_generate_group_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        generate_group(7, [identity(6)])


def test_generate_group_idempotent():
    g = generate_group(7, [LAMBDA2, TAU1])
    again = generate_group(7, list(g))
    assert again.elements == g.elements


def test_affine_group_orders():
    assert affine_group(7, {1, 2, 4}).order == 21
    assert affine_group(13, {1, 3, 9}).order == 39
    assert affine_group(7, {1}).order == 7


def test_affine_group_equals_generated():
    assert affine_group(7, {1, 2, 4}).elements == generate_group(7, [LAMBDA2, TAU1]).elements


def test_affine_group_rejects_bad_multipliers():
    with pytest.raises(ValueError):
        affine_group(7, {1, 2})  # 2*2=4 not in the set
    with pytest.raises(ValueError):
        affine_group(7, {2, 4})  # missing 1


def test_affine_translations_are_cyclic():
    g = affine_group(7, {1})
    assert g.order == 7 and g.is_abelian()


def test_affine_fixed_points():
    # a != 1: exactly one fixed point; a = 1, b != 0: none
    for a in (1, 2, 4):
        for b in range(7):
            p = affine_perm(7, a, b)
            fixed = [x for x in range(7) if p(x) == x]
            if a == 1:
                assert len(fixed) == (7 if b == 0 else 0)
            else:
                assert len(fixed) == 1


def test_classify_order21():
    assert classify_order21(affine_group(7, {1, 2, 4})) == "Frobenius21"
    c21 = generate_group(21, [Perm(tuple((i + 1) % 21 for i in range(21)))])
    assert classify_order21(c21) == "Cyclic21"
    with pytest.raises(ValueError):
        classify_order21(affine_group(7, {1}))


def test_lagrange_sanity():
    for g in (affine_group(7, {1, 2, 4}), generate_group(7, [TAU1])):
        assert math.factorial(g.degree) % g.order == 0


def test_group_from_elements_rejects_non_groups():
    with pytest.raises(ValueError):
        group_from_elements(7, [identity(7), TAU1])  # not closed


def test_json_serialization():
    assert TAU1.to_json() == [1, 2, 3, 4, 5, 6, 0]
