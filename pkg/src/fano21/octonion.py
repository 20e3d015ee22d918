"""Octonions over exact integers, multiplication generated by an
oriented Fano plane.

Basis index 0 is the real unit 1, indices 1..7 are the imaginary units.
The unit e_p corresponds to plane point p for p in 1..6 and e_7 to
point 0.  If {e_i, e_j, e_k} is a block oriented e_i -> e_j -> e_k, then
e_i e_j = e_k and e_j e_i = -e_k; each e_i squares to -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Sequence

from .orient import OrientedFano, qr_orientation
from .perms import Perm

SignedBasis = tuple[int, int]  # (sign, basis index); (-1, 0) encodes -1


def unit_to_point(i: int) -> int:
    if not 1 <= i <= 7:
        raise ValueError(f"imaginary unit index out of range: {i}")
    return i % 7


def point_to_unit(p: int) -> int:
    if not 0 <= p <= 6:
        raise ValueError(f"plane point out of range: {p}")
    return 7 if p == 0 else p


def basis_product(i: int, j: int, oriented: OrientedFano | None = None) -> SignedBasis:
    """Product e_i e_j of imaginary units, as (sign, index)."""
    if oriented is None:
        oriented = qr_orientation()
    if i == j:
        unit_to_point(i)  # range check
        return (-1, 0)
    pi, pj = unit_to_point(i), unit_to_point(j)
    block = oriented.plane.block_through(pi, pj)
    (pk,) = set(block) - {pi, pj}
    sign = 1 if (pi, pj) in oriented.arcs else -1
    return (sign, point_to_unit(pk))


def cartan_table(oriented: OrientedFano | None = None) -> tuple[tuple[SignedBasis, ...], ...]:
    """The 7x7 table of products e_i e_j, i, j in 1..7."""
    if oriented is None:
        oriented = qr_orientation()
    return tuple(
        tuple(basis_product(i, j, oriented) for j in range(1, 8)) for i in range(1, 8)
    )

Table = tuple[tuple[SignedBasis, ...], ...]


@dataclass(frozen=True)
class Octonion:
    """8 exact integer coordinates over the basis (1, e1..e7)."""

    coeffs: tuple[int, int, int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 8 or not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError(f"need 8 integer coefficients, got {self.coeffs}")

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coeffs))


def octonion(coeffs: Sequence[int]) -> Octonion:
    return Octonion(tuple(int(c) for c in coeffs))


ZERO = Octonion((0,) * 8)
ONE = Octonion((1, 0, 0, 0, 0, 0, 0, 0))


def unit(i: int) -> Octonion:
    """The basis octonion e_i (index 0 gives the real unit)."""
    c = [0] * 8
    c[i] = 1
    return Octonion(tuple(c))


def multiply(a: Octonion, b: Octonion, table: Table | None = None) -> Octonion:
    """Bilinear extension of the basis table; 1 is a two-sided identity."""
    if table is None:
        table = cartan_table()
    out = [0] * 8
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            if bj == 0:
                continue
            if i == 0:
                out[j] += ai * bj
            elif j == 0:
                out[i] += ai * bj
            else:
                sign, k = table[i - 1][j - 1]
                out[k] += sign * ai * bj
    return Octonion(tuple(out))


def conjugate(a: Octonion) -> Octonion:
    return Octonion((a.coeffs[0],) + tuple(-c for c in a.coeffs[1:]))


def norm(a: Octonion) -> int:
    """Sum of squared coefficients (the exact squared Euclidean norm)."""
    return sum(c * c for c in a.coeffs)


def is_algebra_automorphism(sigma: Perm, table: Table | None = None) -> bool:
    """Does e_i -> e_{sigma(i)} (fixing 1) preserve all 49 basis
    products with signs?

    The permutation is given on {0..6} and read as acting on unit
    indices 1..7 with 7 = 0 + 7, i.e. through the point-unit mapping.
    """
    if sigma.degree != 7:
        raise ValueError(f"expected a permutation of 7 symbols, got degree {sigma.degree}")
    if table is None:
        table = cartan_table()

    def image(i: int) -> int:
        return point_to_unit(sigma(unit_to_point(i)))

    for i in range(1, 8):
        for j in range(1, 8):
            sign, k = table[i - 1][j - 1]
            si, sj = image(i), image(j)
            sign2, k2 = table[si - 1][sj - 1]
            if k == 0:
                if (sign2, k2) != (sign, 0):
                    return False
            elif (sign2, k2) != (sign, image(k)):
                return False
    return True


def algebra_automorphism_perms(table: Table | None = None) -> list[Perm]:
    """All basis permutations (as degree-7 point permutations) that are
    algebra automorphisms, by exhaustive sweep."""
    from itertools import permutations

    if table is None:
        table = cartan_table()
    return [
        p
        for images in permutations(range(7))
        if is_algebra_automorphism(p := Perm(images), table)
    ]


def random_octonions(count: int, lo: int = -9, hi: int = 9, seed: int = 21) -> list[Octonion]:
    """Seeded integer samples for exact property checks."""
    rng = Random(seed)
    return [
        Octonion(tuple(rng.randint(lo, hi) for _ in range(8))) for _ in range(count)
    ]


def table_to_json(table: Table | None = None) -> dict:
    """7x7 signed-index matrix: entry for e_i e_j is sign * index, with
    index 0 meaning the real unit (so -1 encodes the product -1)."""
    if table is None:
        table = cartan_table()
    return {"matrix": [[sign * k if k else -1 for (sign, k) in row] for row in table]}


def table_to_text(table: Table | None = None) -> str:
    """Aligned text rendering of the multiplication table."""
    if table is None:
        table = cartan_table()

    def cell(sign: int, k: int) -> str:
        if k == 0:
            return "-1" if sign < 0 else "+1"
        return f"{'-' if sign < 0 else '+'}e{k}"

    header = "     " + " ".join(f"  e{j}" for j in range(1, 8))
    lines = [header]
    for i, row in enumerate(table, start=1):
        lines.append(f"  e{i} " + " ".join(f" {cell(s, k)}" for (s, k) in row))
    return "\n".join(lines) + "\n"
