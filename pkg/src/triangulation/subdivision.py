from __future__ import annotations

from collections.abc import Collection
from dataclasses import dataclass
from itertools import combinations, permutations

from .model import Perm, Triangulation, TriangulationError

"""Derived subdivision near a set of marked vertex classes.

Inside an old tetrahedron, a new tetrahedron is a face ``tau`` spanned by unmarked vertices
joined to the barycentres of a chain ``tau < s1 < ... < s_k = whole tetrahedron`` that adds
one vertex at a time, the first added vertex being marked. Faces spanned only by unmarked
vertices are left alone, so the subdivision is local to the marked vertices. A point is
recorded as the set of old-tetrahedron vertices it is the barycentre of.
"""

__all__ = ["Point", "Subdivided", "derived_near", "restrict"]

Point = frozenset[int]


@dataclass(frozen=True)
class Subdivided:
    triangulation: Triangulation
    origin: tuple[int, ...]
    points: tuple[tuple[Point, Point, Point, Point], ...]


def _local_tets(marked: set[int]) -> list[tuple[Point, Point, Point, Point]]:
    unmarked = [v for v in range(4) if v not in marked]
    out = []
    for size in range(len(unmarked), -1, -1):
        for tau in combinations(unmarked, size):
            rest = [v for v in range(4) if v not in tau]
            if not rest:
                out.append(tuple(frozenset((v,)) for v in tau))
                continue
            for order in permutations(rest):
                if order[0] not in marked:
                    continue
                pts = [frozenset((v,)) for v in tau]
                pts += [frozenset(tau + order[: m + 1]) for m in range(len(order))]
                out.append(tuple(pts))
    return out  # type: ignore[return-value]


def derived_near(tri: Triangulation, marked: Collection[int]) -> Subdivided:
    classes = tri.vertex_classes()
    origin: list[int] = []
    points: list[tuple[Point, Point, Point, Point]] = []
    for t in range(tri.size):
        local_marked = {v for v in range(4) if classes[(t, v)] in marked}
        for pts in _local_tets(local_marked):
            origin.append(t)
            points.append(pts)
    out = Triangulation(name=f"{tri.name}'")
    out.add_tets(len(points))

    faces: dict[tuple[int, frozenset[Point]], list[tuple[int, int, dict[Point, int]]]] = {}
    for n, (t, pts) in enumerate(zip(origin, points, strict=True)):
        for g in range(4):
            face = {pts[v]: v for v in range(4) if v != g}
            home, canon = _canonical(tri, t, face)
            faces.setdefault((home, frozenset(canon)), []).append((n, g, canon))
    for key, members in faces.items():
        if len(members) == 1:
            continue
        if len(members) != 2:
            raise TriangulationError(f"{len(members)} subdivided faces share position {key}")
        (n1, g1, c1), (n2, g2, c2) = members
        perm = [0, 0, 0, 0]
        perm[g1] = g2
        for point, v in c1.items():
            perm[v] = c2[point]
        p: Perm = (perm[0], perm[1], perm[2], perm[3])
        out.glue(n1, g1, n2, p)
    return Subdivided(out, tuple(origin), tuple(points))


def _canonical(
    tri: Triangulation, t: int, face: dict[Point, int]
) -> tuple[int, dict[Point, int]]:
    """Express a glued face in the lower of the two old tetrahedra sharing it."""
    union: set[int] = set().union(*face)
    if len(union) != 3:
        return t, face
    (f,) = set(range(4)) - union
    adj = tri.adjacent(t, f)
    if adj is None:
        return t, face
    t2, f2, perm = adj
    if (t2, f2) < (t, f):
        return t2, {frozenset(perm[x] for x in point): v for point, v in face.items()}
    return t, face


def restrict(tri: Triangulation, keep: Collection[int]) -> tuple[Triangulation, dict[int, int]]:
    """Sub-triangulation on ``keep``; gluings to dropped tetrahedra become boundary."""
    index = {old: new for new, old in enumerate(sorted(keep))}
    out = Triangulation(name=tri.name)
    out.add_tets(len(index))
    for old, new in index.items():
        for f, adj in enumerate(tri.adjacency[old]):
            if adj is not None and adj[0] in index:
                out.adjacency[new][f] = (index[adj[0]], adj[1], adj[2])
    return out, index
