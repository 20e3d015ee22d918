"""Orientations of the Fano plane, derived orthogonal planes, Fano circuits.

An orientation is a tournament on the 7 points that restricts to a
3-cycle on every block and whose out-neighbor triples are again blocks.
The derived plane of an orientation collects the in-neighbor triples; it
is a Fano plane orthogonal to the carrier plane, and the assignment is a
bijection onto the 8 orthogonal mates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

from .perms import Perm, PermGroup, group_from_elements
from .steiner import (
    StsError,
    Triple,
    TripleSystem,
    are_orthogonal,
    automorphism_group,
    canonical_block,
    map_sts,
    orthogonal_partition,
    validate_sts,
)

Arc = tuple[int, int]


class OrientationError(ValueError):
    """Base class for orientation validation failures."""


class NotTournament(OrientationError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"pair {pair} is not oriented exactly once")


class BlockNotCyclic(OrientationError):
    def __init__(self, block: Triple):
        self.block = block
        super().__init__(f"arcs do not form a 3-cycle on block {block}")


class OutNeighborsNotBlock(OrientationError):
    def __init__(self, point: int, outs: tuple[int, ...]):
        self.point, self.outs = point, outs
        super().__init__(f"out-neighbors {set(outs)} of {point} are not a block")


class CircuitError(ValueError):
    """Base class for Fano-circuit validation failures."""


class RepeatedPoint(CircuitError):
    def __init__(self, seq: Sequence[int]):
        super().__init__(f"sequence {tuple(seq)} does not visit 7 distinct points")


class BlockNotCovered(CircuitError):
    def __init__(self, block: Triple):
        self.block = block
        super().__init__(f"no consecutive pair of the circuit lies in block {block}")


@dataclass(frozen=True)
class OrientedFano:
    """A Fano plane with a valid orientation.  Build via
    :func:`validate_orientation`."""

    plane: TripleSystem
    arcs: frozenset[Arc]

    def out_neighbors(self, x: int) -> tuple[int, ...]:
        return tuple(sorted(y for (a, y) in self.arcs if a == x))

    def in_neighbors(self, x: int) -> tuple[int, ...]:
        return tuple(sorted(a for (a, y) in self.arcs if y == x))

    def sorted_arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.arcs))

    def to_json(self) -> dict:
        return {"points": 7, "arcs": [list(a) for a in self.sorted_arcs()]}


def validate_orientation(plane: TripleSystem, arcs: Iterable[Arc]) -> OrientedFano:
    """Check the tournament, block-cyclicity and out-closure axioms."""
    if plane.v != 7:
        raise StsError(f"orientations are defined for v=7, got v={plane.v}")
    arc_set = frozenset((int(x), int(y)) for (x, y) in arcs)
    for x in range(7):
        for y in range(x + 1, 7):
            if ((x, y) in arc_set) == ((y, x) in arc_set):
                raise NotTournament((x, y))
    for (a, b, c) in plane.blocks:
        fwd = {(a, b), (b, c), (c, a)}
        bwd = {(b, a), (c, b), (a, c)}
        if not (fwd <= arc_set or bwd <= arc_set):
            raise BlockNotCyclic((a, b, c))
    blocks = plane.block_set()
    for x in range(7):
        outs = tuple(sorted(y for y in range(7) if (x, y) in arc_set))
        if outs not in blocks:
            raise OutNeighborsNotBlock(x, outs)
    return OrientedFano(plane, arc_set)


def orientation_from_json(plane: TripleSystem, data: dict) -> OrientedFano:
    return validate_orientation(plane, [tuple(a) for a in data["arcs"]])


def qr_orientation() -> OrientedFano:
    """The quadratic-residue orientation of the translates of {0,1,3}:
    x -> y iff y - x in {1,2,4} (mod 7)."""
    from .steiner import fano_b1

    arcs = [(x, (x + d) % 7) for x in range(7) for d in (1, 2, 4)]
    return validate_orientation(fano_b1(), arcs)


def derived_plane(oriented: OrientedFano) -> TripleSystem:
    """The plane of in-neighbor triples; orthogonal to the carrier plane."""
    blocks = {canonical_block(oriented.in_neighbors(v)) for v in range(7)}
    result = validate_sts(7, sorted(blocks))
    if not are_orthogonal(oriented.plane, result)["orthogonal"]:
        raise AssertionError("derived plane is not orthogonal to its carrier")
    return result


def orientation_from_mate(f: TripleSystem, s: TripleSystem) -> OrientedFano:
    """The unique orientation of f whose derived plane is s.

    For each point v, the partition {v} | T_f | T_s forces v -> each
    point of T_f.
    """
    arcs = []
    for v in range(7):
        t_f, _t_s = orthogonal_partition(f, s, v)
        arcs.extend((v, a) for a in t_f)
    oriented = validate_orientation(f, arcs)
    if derived_plane(oriented) != s:
        raise AssertionError("mate round trip failed")
    return oriented


def all_orientations(plane: TripleSystem) -> list[OrientedFano]:
    """All 8 orientations, by filtering the 128 block-cyclic sign vectors."""
    if plane.v != 7:
        raise StsError(f"orientations are defined for v=7, got v={plane.v}")
    found = []
    for signs in product((False, True), repeat=7):
        arcs = []
        for (a, b, c), flip in zip(plane.blocks, signs):
            arcs.extend([(a, c), (c, b), (b, a)] if flip else [(a, b), (b, c), (c, a)])
        try:
            found.append(validate_orientation(plane, arcs))
        except OrientationError:
            continue
    return sorted(found, key=lambda o: o.sorted_arcs())


def map_orientation(sigma: Perm, oriented: OrientedFano) -> OrientedFano:
    """Transport the orientation along a plane automorphism."""
    if map_sts(sigma, oriented.plane) != oriented.plane:
        raise StsError(f"{sigma.cycle_string()} is not an automorphism of the plane")
    arcs = frozenset((sigma(x), sigma(y)) for (x, y) in oriented.arcs)
    return validate_orientation(oriented.plane, arcs)


def oriented_automorphism_group(oriented: OrientedFano) -> PermGroup:
    """Plane automorphisms that preserve the arc set."""
    keep = [
        p
        for p in automorphism_group(oriented.plane)
        if frozenset((p(x), p(y)) for (x, y) in oriented.arcs) == oriented.arcs
    ]
    return group_from_elements(7, keep)


def reverse(oriented: OrientedFano) -> OrientedFano:
    """The inverse orientation, which lives on the derived plane."""
    arcs = frozenset((y, x) for (x, y) in oriented.arcs)
    return validate_orientation(derived_plane(oriented), arcs)


@dataclass(frozen=True)
class FanoCircuit:
    """A Hamiltonian point sequence whose consecutive pairs cover all
    7 blocks, canonicalized up to rotation (start 0) and reversal."""

    seq: tuple[int, ...]


def canonical_circuit(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at 0; of the sequence and its reversal keep the
    lexicographically smaller."""
    seq = tuple(seq)
    i = seq.index(0)
    fwd = seq[i:] + seq[:i]
    rev = tuple(reversed(seq))
    j = rev.index(0)
    bwd = rev[j:] + rev[:j]
    return min(fwd, bwd)


def validate_circuit(plane: TripleSystem, seq: Sequence[int]) -> FanoCircuit:
    """Check the covering property: one consecutive pair per block."""
    if plane.v != 7:
        raise StsError(f"Fano circuits are defined for v=7, got v={plane.v}")
    seq = tuple(int(x) for x in seq)
    if len(seq) != 7 or set(seq) != set(range(7)):
        raise RepeatedPoint(seq)
    pairs = [frozenset((seq[i], seq[(i + 1) % 7])) for i in range(7)]
    for block in plane.blocks:
        hits = [p for p in pairs if p <= set(block)]
        if len(hits) != 1:
            raise BlockNotCovered(block)
    return FanoCircuit(canonical_circuit(seq))


def _arcs_from_sequence(plane: TripleSystem, seq: tuple[int, ...]) -> set[Arc]:
    """Extend the consecutive arcs of a circuit cyclically on each block."""
    arcs: set[Arc] = set()
    for i in range(7):
        x, y = seq[i], seq[(i + 1) % 7]
        z = plane.third_point(x, y)
        arcs.update([(x, y), (y, z), (z, x)])
    return arcs


def circuit_to_orientation(plane: TripleSystem, circuit: FanoCircuit) -> OrientedFano:
    """The orientation induced by a circuit; the forward direction is
    tried first and the backward circuit is used if out-closure fails."""
    validate_circuit(plane, circuit.seq)
    try:
        return validate_orientation(plane, _arcs_from_sequence(plane, circuit.seq))
    except OrientationError:
        backward = tuple(reversed(circuit.seq))
        return validate_orientation(plane, _arcs_from_sequence(plane, backward))


def circuits_of_orientation(oriented: OrientedFano) -> list[FanoCircuit]:
    """The three circuits starting at 0, one per choice of the second
    point among the out-neighbors of 0."""
    plane = oriented.plane
    other = derived_plane(oriented).block_set()
    blocks = plane.block_set()
    out = []
    for x2 in oriented.out_neighbors(0):
        seq = [0, x2]
        while len(seq) < 7:
            prev, cur = seq[-2], seq[-1]
            cands = [
                y
                for y in oriented.out_neighbors(cur)
                if tuple(sorted((prev, cur, y))) not in blocks
                and tuple(sorted((prev, cur, y))) not in other
            ]
            if len(cands) != 1:
                raise AssertionError(
                    f"successor not unique after {seq}: {cands}"
                )
            seq.append(cands[0])
        circuit = validate_circuit(plane, seq)
        if circuit_to_orientation(plane, circuit).arcs != oriented.arcs:
            raise AssertionError(f"circuit {seq} does not induce its orientation")
        out.append(circuit)
    return sorted(out, key=lambda c: c.seq)


def all_circuits(plane: TripleSystem) -> list[FanoCircuit]:
    """All Fano circuits up to rotation and reversal (there are 24)."""
    if plane.v != 7:
        raise StsError(f"Fano circuits are defined for v=7, got v={plane.v}")
    seen: set[tuple[int, ...]] = set()
    out = []
    for rest in permutations(range(1, 7)):
        seq = (0,) + rest
        try:
            circuit = validate_circuit(plane, seq)
        except CircuitError:
            continue
        if circuit.seq not in seen:
            seen.add(circuit.seq)
            out.append(circuit)
    return sorted(out, key=lambda c: c.seq)
