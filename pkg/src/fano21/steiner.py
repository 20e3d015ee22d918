"""Steiner triple systems: validation, orthogonality, isomorphism search.

Canonical form everywhere: each block is a strictly increasing triple,
and the block list is sorted lexicographically.  Equality of systems is
equality of canonical block lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .perms import Perm, PermGroup, group_from_elements

Triple = tuple[int, int, int]


class StsError(ValueError):
    """Base class for triple-system validation failures."""


class BadBlockCount(StsError):
    def __init__(self, v: int, got: int):
        self.v, self.got = v, got
        super().__init__(f"STS({v}) needs {v * (v - 1) // 6} blocks, got {got}")


class PairCoveredTwice(StsError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"pair {pair} covered by more than one block")


class PairUncovered(StsError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"pair {pair} covered by no block")


class PointSetMismatch(StsError):
    def __init__(self, v1: int, v2: int):
        super().__init__(f"point counts differ: {v1} vs {v2}")


def canonical_block(block: Iterable[int]) -> Triple:
    b = tuple(sorted(block))
    if len(b) != 3 or len(set(b)) != 3:
        raise StsError(f"not a triple: {block}")
    return b  # type: ignore[return-value]


@dataclass(frozen=True)
class TripleSystem:
    """An STS(v) in canonical form.  Build via :func:`validate_sts`."""

    v: int
    blocks: tuple[Triple, ...]

    def block_set(self) -> frozenset[Triple]:
        return frozenset(self.blocks)

    def block_through(self, x: int, y: int) -> Triple:
        """The unique block containing the pair {x, y}."""
        for b in self.blocks:
            if x in b and y in b:
                return b
        raise PairUncovered(tuple(sorted((x, y))))  # pragma: no cover

    def third_point(self, x: int, y: int) -> int:
        (z,) = set(self.block_through(x, y)) - {x, y}
        return z

    def blocks_through(self, x: int) -> list[Triple]:
        return [b for b in self.blocks if x in b]

    def to_json(self) -> dict:
        return {"v": self.v, "blocks": [list(b) for b in self.blocks]}


def validate_sts(v: int, blocks: Sequence[Iterable[int]]) -> TripleSystem:
    """Canonicalize and validate: every pair in exactly one block."""
    canon = sorted(canonical_block(b) for b in blocks)
    if len(canon) != v * (v - 1) // 6:
        raise BadBlockCount(v, len(canon))
    covered: set[tuple[int, int]] = set()
    for b in canon:
        for p in combinations(b, 2):
            if max(b) >= v or min(b) < 0:
                raise StsError(f"block {b} out of range for v={v}")
            if p in covered:
                raise PairCoveredTwice(p)
            covered.add(p)
    for p in combinations(range(v), 2):
        if p not in covered:
            raise PairUncovered(p)
    return TripleSystem(v, tuple(canon))


def sts_from_json(data: dict) -> TripleSystem:
    return validate_sts(int(data["v"]), [tuple(b) for b in data["blocks"]])


def cyclic_sts(v: int, base_blocks: Sequence[Iterable[int]]) -> TripleSystem:
    """All translates base+z (mod v) of the base blocks, validated."""
    if v < 7:
        raise StsError(f"v={v} too small for an STS")
    blocks = {
        canonical_block((x + z) % v for x in b) for b in base_blocks for z in range(v)
    }
    return validate_sts(v, sorted(blocks))


def fano_b1() -> TripleSystem:
    """The Fano plane of the translates (mod 7) of {0,1,3}."""
    return cyclic_sts(7, [(0, 1, 3)])


def fano_b2() -> TripleSystem:
    """The Fano plane of the translates (mod 7) of {0,1,5}."""
    return cyclic_sts(7, [(0, 1, 5)])


def cyclic_sts13() -> TripleSystem:
    """The cyclic STS(13), generated (mod 13) by {1,3,9} and {2,5,6}."""
    return cyclic_sts(13, [(1, 3, 9), (2, 5, 6)])


def negate_sts(system: TripleSystem) -> TripleSystem:
    """Replace every block {u,v,w} by {-u,-v,-w} (mod v)."""
    v = system.v
    return validate_sts(
        v, [canonical_block((-x) % v for x in b) for b in system.blocks]
    )


def map_sts(sigma: Perm, system: TripleSystem) -> TripleSystem:
    """Image system under a point permutation."""
    return validate_sts(
        system.v, [canonical_block(sigma(x) for x in b) for b in system.blocks]
    )


def are_orthogonal(s1: TripleSystem, s2: TripleSystem) -> dict[str, bool]:
    """Disjointness plus the quadruple condition for orthogonality.

    Returns {"disjoint": ..., "orthogonal": ...}.  Orthogonal means
    disjoint and: whenever {x,y,z},{u,v,z} are blocks of s1 and {x,y,a},
    {u,v,b} are blocks of s2, then a != b.
    """
    if s1.v != s2.v:
        raise PointSetMismatch(s1.v, s2.v)
    disjoint = not (s1.block_set() & s2.block_set())
    orthogonal = disjoint
    if disjoint:
        for b1, b2 in combinations(s1.blocks, 2):
            common = set(b1) & set(b2)
            if len(common) != 1:
                continue
            (z,) = common
            (x, y) = sorted(set(b1) - {z})
            (u, v) = sorted(set(b2) - {z})
            if s2.third_point(x, y) == s2.third_point(u, v):
                orthogonal = False
                break
    return {"disjoint": disjoint, "orthogonal": orthogonal}


def _extend(
    s1: TripleSystem,
    s2: TripleSystem,
    images: list[int],
    used: list[bool],
    out: list[Perm],
) -> None:
    v = s1.v
    k = len(images)
    if k == v:
        out.append(Perm(tuple(images)))
        return
    for cand in range(v):
        if used[cand]:
            continue
        ok = True
        for j in range(k):
            t = s1.third_point(j, k)
            t2 = s2.third_point(images[j], cand)
            if t < k:
                if images[t] != t2:
                    ok = False
                    break
            elif t2 in images[:k] or t2 == cand:
                # t is still unassigned, so its image t2 must be free
                ok = False
                break
        if ok:
            images.append(cand)
            used[cand] = True
            _extend(s1, s2, images, used, out)
            images.pop()
            used[cand] = False


def isomorphisms(s1: TripleSystem, s2: TripleSystem) -> list[Perm]:
    """All block-preserving bijections s1 -> s2, sorted by image tuple.

    Backtracking on point images with third-point pruning; tuned for
    v in {7, 13, 15}.
    """
    if s1.v != s2.v:
        raise PointSetMismatch(s1.v, s2.v)
    if s1.v not in (7, 13, 15):
        raise StsError(f"isomorphism search not supported for v={s1.v}")
    out: list[Perm] = []
    _extend(s1, s2, [], [False] * s1.v, out)
    return sorted(out)


def isomorphisms_bruteforce(s1: TripleSystem, s2: TripleSystem) -> list[Perm]:
    """Oracle: sweep all v! permutations (v=7 only) and filter."""
    if s1.v != 7 or s2.v != 7:
        raise StsError("brute-force sweep is only tuned for v=7")
    target = s2.block_set()
    out = []
    for images in permutations(range(7)):
        if all(
            tuple(sorted((images[a], images[b], images[c]))) in target
            for (a, b, c) in s1.blocks
        ):
            out.append(Perm(images))
    return sorted(out)


def automorphism_group(system: TripleSystem) -> PermGroup:
    return group_from_elements(system.v, isomorphisms(system, system))


def common_automorphism_group(s1: TripleSystem, s2: TripleSystem) -> PermGroup:
    """Permutations fixing both block sets."""
    if s1.v != s2.v:
        raise PointSetMismatch(s1.v, s2.v)
    b2 = s2.block_set()
    common = [
        p
        for p in isomorphisms(s1, s1)
        if all(tuple(sorted((p(a), p(b), p(c)))) in b2 for (a, b, c) in s2.blocks)
    ]
    return group_from_elements(s1.v, common)


def _fano_complete(
    blocks: list[Triple], covered: set[tuple[int, int]], out: list[TripleSystem]
) -> None:
    if len(blocks) == 7:
        out.append(TripleSystem(7, tuple(sorted(blocks))))
        return
    pair = next(
        p for p in combinations(range(7), 2) if p not in covered
    )
    x, y = pair
    for z in range(7):
        if z in pair:
            continue
        pxz = tuple(sorted((x, z)))
        pyz = tuple(sorted((y, z)))
        if pxz in covered or pyz in covered:
            continue
        blocks.append(canonical_block((x, y, z)))
        covered.update([pair, pxz, pyz])
        _fano_complete(blocks, covered, out)
        blocks.pop()
        covered.difference_update([pair, pxz, pyz])


def all_fano_planes() -> list[TripleSystem]:
    """Every labeled STS(7) on points {0..6} (there are 30), sorted."""
    out: list[TripleSystem] = []
    _fano_complete([], set(), out)
    return sorted(out, key=lambda s: s.blocks)


def orthogonal_mates(plane: TripleSystem) -> list[TripleSystem]:
    """The Fano planes disjoint from (equivalently, orthogonal to) a plane."""
    if plane.v != 7:
        raise StsError(f"orthogonal mates are defined for v=7, got v={plane.v}")
    mine = plane.block_set()
    return [s for s in all_fano_planes() if not (s.block_set() & mine)]


def disjoint_mate_block(
    f: TripleSystem, s: TripleSystem, block: Triple
) -> Triple:
    """For a block of f, the unique block of s disjoint from it."""
    mates = [b for b in s.blocks if not (set(b) & set(block))]
    if len(mates) != 1:
        raise StsError(
            f"expected a unique disjoint block for {block}, found {len(mates)}"
        )
    return mates[0]


def orthogonal_partition(
    f: TripleSystem, s: TripleSystem, point: int
) -> tuple[Triple, Triple]:
    """The unique (T_f, T_s) with {point} | T_f | T_s partitioning the 7 points."""
    flags = are_orthogonal(f, s)
    if not flags["orthogonal"]:
        raise StsError("inputs are not orthogonal Fano planes")
    found = []
    for bf in f.blocks:
        if point in bf:
            continue
        for bs in s.blocks:
            if point in bs or set(bf) & set(bs):
                continue
            found.append((bf, bs))
    if len(found) != 1:
        raise StsError(
            f"expected a unique partition at point {point}, found {len(found)}"
        )
    return found[0]
