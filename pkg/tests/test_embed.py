from random import Random

import pytest

from fano21.perms import Perm, affine_perm, identity
from fano21.steiner import common_automorphism_group
from fano21.embed import (
    PRESERVING,
    REVERSING,
    MissingNeighbor,
    NotSingleCycle,
    NotTriangular,
    RotationError,
    _is_preserving,
    _is_reversing,
    classical_rotation,
    classify_triangular,
    color_automorphism_group,
    embedding_automorphism_group,
    embedding_isomorphisms,
    euler_characteristic,
    is_triangular,
    rotation_from_cycles,
    rotation_from_json,
    to_dot,
    trace_faces,
    triangular_completions,
    two_coloring,
    validate_rotation,
)

CLASSICAL_CYCLES = {
    0: (1, 5, 4, 6, 2, 3),
    1: (2, 6, 5, 0, 3, 4),
    2: (3, 0, 6, 1, 4, 5),
    3: (4, 1, 0, 2, 5, 6),
    4: (5, 2, 1, 3, 6, 0),
    5: (6, 3, 2, 4, 0, 1),
    6: (0, 4, 3, 5, 1, 2),
}


def _relabel(rotation, sigma):
    return validate_rotation(
        7, {sigma(x): [sigma(y) for y in rotation.cycle_at(x)] for x in range(7)}
    )


def test_validate_rotation_classical_cycles(classical):
    r = validate_rotation(7, CLASSICAL_CYCLES)
    assert r.succ == classical.succ


def test_validate_rotation_rejects_split_cycle():
    cycles = dict(CLASSICAL_CYCLES)
    cycles[0] = (1, 5, 4, 6, 3, 2)  # still all neighbors, reordered is fine
    validate_rotation(7, cycles)
    cycles[0] = ((1, 5, 4), (6, 2, 3))  # two 3-cycles at one vertex
    with pytest.raises(NotSingleCycle):
        validate_rotation(7, cycles)


def test_validate_rotation_missing_neighbor():
    cycles = dict(CLASSICAL_CYCLES)
    cycles[0] = (1, 5, 4, 2, 3)
    with pytest.raises(MissingNeighbor) as exc:
        validate_rotation(7, cycles)
    assert (exc.value.vertex, exc.value.neighbor) == (0, 6)


def test_classical_rotation_formula(classical):
    # rho_x(y) = 5y - 4x (mod 7)
    assert classical.cycle_at(0) == (1, 5, 4, 6, 2, 3)
    assert tuple(classical.rho(3, y) for y in (0, 2, 5, 6, 4, 1)) == (2, 5, 6, 4, 1, 0)
    for x in range(7):
        for y in range(7):
            if x != y:
                assert classical.rho(x, y) == (5 * y - 4 * x) % 7


def test_classical_translation_property(classical):
    # property (*): rho(x+z, y+z) = rho_x(y) + z
    for x in range(7):
        for y in range(7):
            if x == y:
                continue
            for z in range(7):
                assert classical.rho((x + z) % 7, (y + z) % 7) == (
                    classical.rho(x, y) + z
                ) % 7


def test_trace_faces_classical(classical, b1, b2):
    faces = trace_faces(classical)
    assert len(faces) == 14
    assert all(len(f) == 3 for f in faces)
    assert sorted(f.vertex_set() for f in faces) == sorted(b1.blocks + b2.blocks)
    # each of the 42 oriented edges appears exactly once
    edges = [e for f in faces for e in f.edges()]
    assert len(edges) == 42 and len(set(edges)) == 42


def test_face_through_edge_01(classical):
    faces = [f for f in trace_faces(classical) if (0, 1) in f.edges()]
    assert len(faces) == 1
    assert faces[0].walk == (0, 1, 3)


def test_euler_characteristic(classical):
    assert euler_characteristic(classical) == 0
    # a non-triangular rotation still satisfies chi = F + 7 - 21
    other = rotation_from_cycles(7, [sorted(set(range(7)) - {x}) for x in range(7)])
    assert euler_characteristic(other) == len(trace_faces(other)) + 7 - 21


def test_is_triangular(classical):
    assert is_triangular(classical)
    cycles = {x: list(classical.cycle_at(x)) for x in range(7)}
    cycles[0][0], cycles[0][1] = cycles[0][1], cycles[0][0]
    assert not is_triangular(validate_rotation(7, cycles))


def test_is_triangular_checks_agree_on_random_rotations():
    rng = Random(11)
    for _ in range(100):
        cycles = {}
        for x in range(7):
            cyc = [y for y in range(7) if y != x]
            rng.shuffle(cyc)
            cycles[x] = cyc
        # raises internally if the face-length and local checks disagree
        is_triangular(validate_rotation(7, cycles))


def test_two_coloring_classical(classical, b1, b2):
    coloring = two_coloring(classical)
    assert coloring.class_a_sets() == list(b1.blocks)
    assert coloring.class_b_sets() == list(b2.blocks)
    assert len(coloring.class_a) == len(coloring.class_b) == 7


def test_embedding_automorphisms_include_affine(classical):
    for z in range(7):
        tau = affine_perm(7, 1, z)
        assert _is_preserving(tau, classical, classical)
    for c in range(1, 7):
        lam = affine_perm(7, c, 0)
        assert _is_preserving(lam, classical, classical)
    swap = Perm((0, 1, 4, 5, 2, 3, 6))  # (2 4)(3 5)
    assert not _is_preserving(swap, classical, classical)
    assert not _is_reversing(swap, classical, classical)


def test_embedding_isomorphism_group_structure(classical):
    # every self-map of the classical rotation preserves the rotation
    # sense; the group is the full affine group mod 7
    autos = embedding_isomorphisms(classical, classical)
    assert len(autos) == 42
    assert {flag for _p, flag in autos} == {PRESERVING}
    group = embedding_automorphism_group(classical)
    assert group.order == 42
    affine42 = {affine_perm(7, a, b) for a in range(1, 7) for b in range(7)}
    assert set(group.elements) == affine42


def test_color_automorphism_group(classical, b1, b2):
    group = color_automorphism_group(classical)
    assert group.order == 21
    assert group.elements == common_automorphism_group(b1, b2).elements
    swap = Perm((0, 1, 4, 5, 2, 3, 6))
    assert swap not in group  # it exchanges the color classes


def test_coloring_orientation_bridge(classical, qr):
    # the quadratic-residue arcs run one way around every class-A face
    # and the other way around every class-B face
    coloring = two_coloring(classical)

    def face_sense(face):
        senses = {edge in qr.arcs for edge in face.edges()}
        assert len(senses) == 1
        return senses.pop()

    a_senses = {face_sense(f) for f in coloring.class_a}
    b_senses = {face_sense(f) for f in coloring.class_b}
    assert a_senses == {True} and b_senses == {False}


def test_triangular_completions(classical):
    completions = triangular_completions((1, 5, 4, 6, 2, 3))
    assert len(completions) == 2
    assert classical.succ in [r.succ for r in completions]
    (other,) = [r for r in completions if r.succ != classical.succ]
    swap = Perm((0, 1, 4, 5, 2, 3, 6))
    assert _is_reversing(swap, other, classical)
    # the second rho_5 branch from the case analysis
    assert other.cycle_at(5) == (0, 1, 2, 6, 3, 4)


def test_triangular_completions_rejects_bad_input():
    with pytest.raises(RotationError):
        triangular_completions((1, 2, 3, 4, 5, 5))


def test_classify_triangular(classical):
    witness, flag = classify_triangular(classical)
    assert witness == identity(7) and flag == PRESERVING
    rng = Random(3)
    for _ in range(10):
        images = list(range(7))
        rng.shuffle(images)
        relabeled = _relabel(classical, Perm(tuple(images)))
        witness, flag = classify_triangular(relabeled)
        check = _is_preserving if flag == PRESERVING else _is_reversing
        assert check(witness, relabeled, classical)


def test_classify_triangular_rejects_non_triangular():
    other = rotation_from_cycles(7, [sorted(set(range(7)) - {x}) for x in range(7)])
    with pytest.raises(NotTriangular):
        classify_triangular(other)


def test_all_completions_classify(classical):
    # every triangular extension of a sample of rho_0 cycles is
    # isomorphic to the classical rotation
    rng = Random(5)
    for _ in range(10):
        cyc = [1, 2, 3, 4, 5, 6]
        rng.shuffle(cyc)
        for r in triangular_completions(tuple(cyc)):
            witness, flag = classify_triangular(r)
            check = _is_preserving if flag == PRESERVING else _is_reversing
            assert check(witness, r, classical)


def _face_keys(walks):
    # closed walks up to rotation and reversal
    keys = set()
    for w in walks:
        rots = [w[i:] + w[:i] for i in range(len(w))]
        rw = tuple(reversed(w))
        rots += [rw[i:] + rw[:i] for i in range(len(rw))]
        keys.add(min(rots))
    return keys


def test_face_preserving_equals_rotation_commuting(classical):
    # a vertex permutation carries the face set onto the face set exactly
    # when it commutes with the rotation or with its inverse
    from itertools import permutations

    completions = triangular_completions((1, 5, 4, 6, 2, 3))
    walks1 = [f.walk for f in trace_faces(classical)]
    for r2 in completions:
        keys2 = _face_keys(f.walk for f in trace_faces(r2))
        for images in permutations(range(7)):
            sigma = Perm(images)
            mapped = _face_keys(tuple(sigma(v) for v in w) for w in walks1)
            combinatorial = _is_preserving(sigma, classical, r2) or _is_reversing(
                sigma, classical, r2
            )
            assert (mapped == keys2) == combinatorial


def test_rotation_json_round_trip(classical):
    data = classical.to_json()
    assert data["rotation"]["0"] == [1, 5, 4, 6, 2, 3]
    assert rotation_from_json(data).succ == classical.succ


def test_dot_export(classical):
    dot = to_dot(classical)
    assert dot.startswith("graph K7 {")
    assert dot.count("--") == 21
    assert dot.count("// face") == 14
