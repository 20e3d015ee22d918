"""Permutations of {0..n-1} and exhaustively stored finite permutation groups.

Composition convention: ``compose(p, q)`` applies ``q`` first, so
``compose(p, q)(x) == p(q(x))``.  Groups are stored as full element lists
(orders here never exceed 7! = 5040), sorted lexicographically by image
tuple so that every enumeration is deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class DegreeMismatch(ValueError):
    """Raised when combining permutations of different degrees."""


class NotAPermutation(ValueError):
    """Raised when an image list is not a bijection of {0..n-1}."""


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of {0..n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n < 1 or sorted(self.images) != list(range(n)):
            raise NotAPermutation(f"not a bijection of 0..{n - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm(tuple(inv))

    def order(self) -> int:
        k, p = 1, self
        ident = identity(self.degree)
        while p != ident:
            p = compose(p, self)
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points omitted, each cycle starting
        at its minimal element, cycles sorted by that element."""
        seen: set[int] = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                seen.add(start)
                continue
            cyc = [start]
            x = self.images[start]
            while x != start:
                cyc.append(x)
                x = self.images[x]
            seen.update(cyc)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

    def to_json(self) -> list[int]:
        return list(self.images)


def identity(n: int) -> Perm:
    return Perm(tuple(range(n)))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: the result maps x to p(q(x))."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")
    return Perm(tuple(p.images[y] for y in q.images))


def perm_from_cycles(cycle_str: str, degree: int) -> Perm:
    """Parse cycle notation like "(1 5 4 6 2 3)" or "(2 4)(3 5)".

    Points absent from every cycle are fixed.  Commas between points are
    tolerated.
    """
    images = list(range(degree))
    body = cycle_str.strip()
    if body in ("", "()"):
        return Perm(tuple(images))
    if not re.fullmatch(r"(\([^()]*\))+", body):
        raise ValueError(f"bad cycle notation: {cycle_str!r}")
    for part in re.findall(r"\(([^()]*)\)", body):
        pts = [int(tok) for tok in re.split(r"[,\s]+", part.strip()) if tok]
        if len(pts) < 2:
            continue
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle {part!r}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if not (0 <= a < degree):
                raise ValueError(f"point {a} out of range for degree {degree}")
            images[a] = b
    return Perm(tuple(images))


def affine_perm(modulus: int, a: int, b: int) -> Perm:
    """The map x -> a*x + b (mod modulus)."""
    return Perm(tuple((a * x + b) % modulus for x in range(modulus)))


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group, stored exhaustively and sorted."""

    degree: int
    elements: tuple[Perm, ...]

    def __post_init__(self) -> None:
        elems = set(self.elements)
        if any(p.degree != self.degree for p in elems):
            raise DegreeMismatch("mixed degrees in group")
        if identity(self.degree) not in elems:
            raise ValueError("group does not contain the identity")
        object.__setattr__(self, "elements", tuple(sorted(elems)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def is_abelian(self) -> bool:
        elems = self.elements
        for p, q in combinations(elems, 2):
            if compose(p, q) != compose(q, p):
                return False
        return True

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        bigger = set(other.elements)
        return all(p in bigger for p in self.elements)


def generate_group(degree: int, generators: Sequence[Perm]) -> PermGroup:
    """Closure of the generators under composition (breadth-first)."""
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatch(f"generator degree {g.degree}, expected {degree}")
    elems = {identity(degree)}
    frontier = [identity(degree)]
    gens = list(generators)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return PermGroup(degree, tuple(elems))


def group_from_elements(degree: int, elements: Iterable[Perm]) -> PermGroup:
    """Wrap an element set known to be closed; closure is re-verified."""
    g = PermGroup(degree, tuple(elements))
    elems = set(g.elements)
    for p in g.elements:
        if p.inverse() not in elems:
            raise ValueError(f"not closed under inverse: {p.cycle_string()}")
    for p in g.elements:
        for q in g.elements:
            if compose(p, q) not in elems:
                raise ValueError("not closed under composition")
    return g


def affine_group(modulus: int, multipliers: set[int]) -> PermGroup:
    """All maps x -> a*x + b (mod modulus) with a in multipliers.

    The multiplier set must be a multiplicative subgroup mod the (prime)
    modulus, otherwise the element set would not be a group.
    """
    mults = {m % modulus for m in multipliers}
    if 1 not in mults or 0 in mults:
        raise ValueError(f"multipliers {multipliers} must contain 1 and not 0")
    for a in mults:
        for b in mults:
            if (a * b) % modulus not in mults:
                raise ValueError(
                    f"multipliers {multipliers} not closed under multiplication mod {modulus}"
                )
    elems = [affine_perm(modulus, a, b) for a in mults for b in range(modulus)]
    return PermGroup(modulus, tuple(elems))


def classify_order21(group: PermGroup) -> str:
    """Distinguish the two groups of order 21: "Cyclic21" or "Frobenius21"."""
    if group.order != 21:
        raise ValueError(f"group has order {group.order}, expected 21")
    return "Cyclic21" if group.is_abelian() else "Frobenius21"
