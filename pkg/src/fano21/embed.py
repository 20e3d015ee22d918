"""Combinatorial embeddings of K7 as rotation systems.

A rotation system assigns to each vertex a cyclic successor map on its
six neighbors.  Faces are the orbits of (a, b) -> (b, rho_b(a)) on the
42 oriented edges.  The classical toroidal rotation is rho_x(y) = 5y - 4x
(mod 7); every triangular rotation of K7 is isomorphic to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .perms import Perm, PermGroup, group_from_elements

PRESERVING = "Preserving"
REVERSING = "Reversing"


class RotationError(ValueError):
    """Base class for rotation-system validation failures."""


class NotSingleCycle(RotationError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"rotation at vertex {vertex} is not a single cycle")


class MissingNeighbor(RotationError):
    def __init__(self, vertex: int, neighbor: int):
        self.vertex, self.neighbor = vertex, neighbor
        super().__init__(f"rotation at vertex {vertex} misses neighbor {neighbor}")


class NotTwoColorable(ValueError):
    def __init__(self) -> None:
        super().__init__("face-adjacency graph contains an odd cycle")


class NotTriangular(ValueError):
    def __init__(self) -> None:
        super().__init__("rotation system has a non-triangular face")


@dataclass(frozen=True)
class RotationSystem:
    """A rotation of K_n.  succ[x][y] is the neighbor after y at x."""

    n: int
    succ: tuple[tuple[int, ...], ...]

    def rho(self, x: int, y: int) -> int:
        return self.succ[x][y]

    def rho_inv(self, x: int, y: int) -> int:
        return self.succ[x].index(y)

    def cycle_at(self, x: int) -> tuple[int, ...]:
        """The rotation at x as a cycle, starting at its minimal neighbor."""
        start = 0 if x != 0 else 1
        cyc = [start]
        y = self.succ[x][start]
        while y != start:
            cyc.append(y)
            y = self.succ[x][y]
        return tuple(cyc)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rotation": {str(x): list(self.cycle_at(x)) for x in range(self.n)},
        }


def validate_rotation(n: int, rotation: Mapping[int, Sequence]) -> RotationSystem:
    """Build a RotationSystem from per-vertex cycles (read left-to-right).

    The value at a vertex is either one cycle, e.g. ``[1, 5, 4, 6, 2, 3]``,
    or a list of cycles; more than one cycle is rejected, since the
    rotation at a vertex must be a single cycle on all its neighbors.
    """
    succ: list[tuple[int, ...]] = []
    for x in range(n):
        if x not in rotation:
            raise RotationError(f"no rotation given for vertex {x}")
        value = rotation[x]
        if value and isinstance(value[0], (list, tuple)):
            cycles = [[int(y) for y in c] for c in value]
        else:
            cycles = [[int(y) for y in value]]
        flat = [y for c in cycles for y in c]
        neighbors = set(range(n)) - {x}
        for y in neighbors:
            if y not in flat:
                raise MissingNeighbor(x, y)
        if len(cycles) != 1 or len(flat) != n - 1 or set(flat) != neighbors:
            raise NotSingleCycle(x)
        cyc = cycles[0]
        nxt = [-1] * n
        for i, y in enumerate(cyc):
            nxt[y] = cyc[(i + 1) % (n - 1)]
        succ.append(tuple(nxt))
    return RotationSystem(n, tuple(succ))


def rotation_from_json(data: dict) -> RotationSystem:
    n = int(data["n"])
    return validate_rotation(n, {int(k): v for k, v in data["rotation"].items()})


def rotation_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> RotationSystem:
    return validate_rotation(n, dict(enumerate(cycles)))


def classical_rotation() -> RotationSystem:
    """The toroidal rotation of K7: rho_x(y) = 5y - 4x (mod 7)."""
    return RotationSystem(
        7,
        tuple(
            tuple((5 * y - 4 * x) % 7 if y != x else -1 for y in range(7))
            for x in range(7)
        ),
    )


@dataclass(frozen=True)
class Face:
    """A directed closed walk, canonicalized to start at its
    lexicographically minimal oriented edge."""

    walk: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.walk)

    def vertex_set(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.walk)))

    def edges(self) -> list[tuple[int, int]]:
        w = self.walk
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]


def _canonical_face(walk: list[int]) -> Face:
    k = len(walk)
    rotations = [tuple(walk[i:] + walk[:i]) for i in range(k)]
    return Face(min(rotations))


def trace_faces(rotation: RotationSystem) -> list[Face]:
    """Orbits of the successor map (a, b) -> (b, rho_b(a)); every oriented
    edge lies in exactly one face."""
    n = rotation.n
    remaining = {(x, y) for x in range(n) for y in range(n) if x != y}
    faces = []
    while remaining:
        start = min(remaining)
        walk = []
        edge = start
        while True:
            walk.append(edge[0])
            remaining.discard(edge)
            edge = (edge[1], rotation.rho(edge[1], edge[0]))
            if edge == start:
                break
        faces.append(_canonical_face(walk))
    return sorted(faces, key=lambda f: f.walk)


def euler_characteristic(rotation: RotationSystem) -> int:
    """F + V - E for the traced faces (0 for the torus)."""
    n = rotation.n
    return len(trace_faces(rotation)) + n - n * (n - 1) // 2


def is_triangular(rotation: RotationSystem) -> bool:
    """All faces have length 3; cross-checked against the local condition
    rho_x(y)=z => rho_z(x)=y."""
    by_faces = all(len(f) == 3 for f in trace_faces(rotation))
    n = rotation.n
    by_local = all(
        rotation.rho(rotation.rho(x, y), x) == y
        for x in range(n)
        for y in range(n)
        if x != y
    )
    if by_faces != by_local:
        raise AssertionError("face-length and local triangularity checks disagree")
    return by_faces


@dataclass(frozen=True)
class ColoredFaceSet:
    class_a: tuple[Face, ...]
    class_b: tuple[Face, ...]

    def class_a_sets(self) -> list[tuple[int, ...]]:
        return sorted(f.vertex_set() for f in self.class_a)

    def class_b_sets(self) -> list[tuple[int, ...]]:
        return sorted(f.vertex_set() for f in self.class_b)


def two_coloring(rotation: RotationSystem) -> ColoredFaceSet:
    """Bipartition faces so that each edge bounds one face of each color.

    The class containing the face with the lexicographically smallest
    vertex set is class A.
    """
    faces = trace_faces(rotation)
    by_edge: dict[frozenset[int], list[int]] = {}
    for i, f in enumerate(faces):
        for (a, b) in f.edges():
            by_edge.setdefault(frozenset((a, b)), []).append(i)
    color = {0: 0}
    queue = [0]
    seen_edges = set()
    while queue:
        i = queue.pop()
        for (a, b) in faces[i].edges():
            key = frozenset((a, b))
            for j in by_edge[key]:
                if j == i and by_edge[key].count(i) == 1:
                    continue
                if j == i:
                    raise NotTwoColorable()  # face meets itself along an edge
                if j in color:
                    if color[j] == color[i]:
                        raise NotTwoColorable()
                else:
                    color[j] = 1 - color[i]
                    queue.append(j)
    if len(color) != len(faces):
        raise AssertionError("face-adjacency graph of K_n must be connected")
    class0 = tuple(f for i, f in enumerate(faces) if color[i] == 0)
    class1 = tuple(f for i, f in enumerate(faces) if color[i] == 1)
    for cls in (class0, class1):
        bounded = [frozenset(e) for f in cls for e in f.edges()]
        if len(set(bounded)) != len(bounded):
            raise NotTwoColorable()
    if min(f.vertex_set() for f in class0) <= min(f.vertex_set() for f in class1):
        return ColoredFaceSet(class0, class1)
    return ColoredFaceSet(class1, class0)


def _is_preserving(sigma: Perm, r1: RotationSystem, r2: RotationSystem) -> bool:
    n = r1.n
    for x in range(n):
        for y in range(n):
            if x != y and sigma(r1.rho(x, y)) != r2.rho(sigma(x), sigma(y)):
                return False
    return True


def _is_reversing(sigma: Perm, r1: RotationSystem, r2: RotationSystem) -> bool:
    n = r1.n
    for x in range(n):
        for y in range(n):
            if x != y and sigma(r1.rho(x, y)) != r2.rho_inv(sigma(x), sigma(y)):
                return False
    return True


def embedding_isomorphisms(
    r1: RotationSystem, r2: RotationSystem
) -> list[tuple[Perm, str]]:
    """All vertex permutations commuting with the rotations (Preserving)
    or with the inverse rotation (Reversing), by exhaustive sweep."""
    if r1.n != r2.n:
        raise RotationError(f"vertex counts differ: {r1.n} vs {r2.n}")
    out = []
    for images in permutations(range(r1.n)):
        sigma = Perm(images)
        pres = _is_preserving(sigma, r1, r2)
        rev = _is_reversing(sigma, r1, r2)
        if pres and rev:
            raise AssertionError(
                "a permutation cannot be both preserving and reversing on K_n, n >= 4"
            )
        if pres:
            out.append((sigma, PRESERVING))
        elif rev:
            out.append((sigma, REVERSING))
    return out


def embedding_automorphism_group(rotation: RotationSystem) -> PermGroup:
    return group_from_elements(
        rotation.n, [p for p, _flag in embedding_isomorphisms(rotation, rotation)]
    )


def color_automorphism_group(rotation: RotationSystem) -> PermGroup:
    """Embedding automorphisms fixing both color classes (as families of
    face vertex sets)."""
    coloring = two_coloring(rotation)
    class_a = set(map(tuple, coloring.class_a_sets()))
    class_b = set(map(tuple, coloring.class_b_sets()))
    keep = []
    for sigma, _flag in embedding_isomorphisms(rotation, rotation):
        image_a = {tuple(sorted(sigma(v) for v in f)) for f in class_a}
        image_b = {tuple(sorted(sigma(v) for v in f)) for f in class_b}
        if image_a == class_a and image_b == class_b:
            keep.append(sigma)
    return group_from_elements(rotation.n, keep)


def _closes_short_cycle(succ: dict[int, int], y: int, z: int) -> bool:
    """Would y -> z close a cycle of length < 6 in a partial successor map?"""
    length = 1
    cur = z
    while True:
        if cur == y:
            return length < 6
        if cur not in succ:
            return False
        cur = succ[cur]
        length += 1


def _propagate(
    succ: list[dict[int, int]], x: int, y: int, z: int
) -> list[tuple[int, int, int]] | None:
    """Set rho_x(y) = z plus the consequences rho_z(x) = y, rho_y(z) = x.

    Returns the assignments actually made (for undo), or None on conflict.
    """
    made = []
    for (a, b, c) in ((x, y, z), (z, x, y), (y, z, x)):
        cur = succ[a].get(b)
        if cur is not None:
            if cur != c:
                return _undo(succ, made)
            continue
        if c in succ[a].values() or c == a or c == b:
            return _undo(succ, made)
        if _closes_short_cycle(succ[a], b, c):
            return _undo(succ, made)
        succ[a][b] = c
        made.append((a, b, c))
    return made


def _undo(succ: list[dict[int, int]], made: list[tuple[int, int, int]]) -> None:
    for (a, b, _c) in made:
        del succ[a][b]
    return None


def _complete(succ: list[dict[int, int]], out: list[RotationSystem]) -> None:
    target = None
    for x in range(7):
        if len(succ[x]) < 6:
            ys = [y for y in range(7) if y != x and y not in succ[x]]
            target = (x, min(ys))
            break
    if target is None:
        cycles = {}
        for x in range(7):
            cyc = [min(succ[x])]
            while len(cyc) < 6:
                cyc.append(succ[x][cyc[-1]])
            cycles[x] = cyc
        out.append(validate_rotation(7, cycles))
        return
    x, y = target
    for z in range(7):
        if z == x or z == y or z in succ[x].values():
            continue
        made = _propagate(succ, x, y, z)
        if made is not None:
            _complete(succ, out)
            _undo(succ, made)


def triangular_completions(rho0: Sequence[int]) -> list[RotationSystem]:
    """All triangular rotations of K7 extending the given 6-cycle at
    vertex 0, by constraint propagation of the local triangle condition."""
    cyc = [int(y) for y in rho0]
    if sorted(cyc) != [1, 2, 3, 4, 5, 6]:
        raise RotationError(f"rho_0 must be a 6-cycle on 1..6, got {rho0}")
    succ: list[dict[int, int]] = [dict() for _ in range(7)]
    for i, y in enumerate(cyc):
        made = _propagate(succ, 0, y, cyc[(i + 1) % 6])
        if made is None:
            return []
    out: list[RotationSystem] = []
    _complete(succ, out)
    out = [r for r in out if is_triangular(r)]
    return sorted(out, key=lambda r: r.succ)


def classify_triangular(rotation: RotationSystem) -> tuple[Perm, str]:
    """A witness isomorphism onto the classical toroidal rotation."""
    if not is_triangular(rotation):
        raise NotTriangular()
    classical = classical_rotation()
    for images in permutations(range(7)):
        sigma = Perm(images)
        if _is_preserving(sigma, rotation, classical):
            return sigma, PRESERVING
        if _is_reversing(sigma, rotation, classical):
            return sigma, REVERSING
    raise AssertionError("triangular rotation of K7 with no classical witness")


def to_dot(rotation: RotationSystem) -> str:
    """DOT export of K_n with the traced faces as comments."""
    lines = ["graph K%d {" % rotation.n]
    for f in trace_faces(rotation):
        lines.append("  // face " + "-".join(str(v) for v in f.walk))
    for x in range(rotation.n):
        for y in range(x + 1, rotation.n):
            lines.append(f"  {x} -- {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
