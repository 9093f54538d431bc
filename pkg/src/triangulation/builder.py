from __future__ import annotations

from collections.abc import Hashable, Mapping, Sequence

from .model import Perm, Triangulation, TriangulationError

"""Triangulations from tetrahedra named by their four vertex keys.

Faces are matched by key sets: explicit gluings first (a key map sends one face onto
another), then every remaining pair of free faces with the same key set is glued along the
identity map. Three or more free faces sharing a key set is an error.
"""

__all__ = ["Key", "KeyedTriangulation", "build_from_keys"]

Key = Hashable


class KeyedTriangulation:
    """A triangulation plus a key per tetrahedron vertex (``None`` for unkeyed vertices)."""

    def __init__(self, triangulation: Triangulation, keys: Sequence[Sequence[Key]]) -> None:
        if len(keys) != triangulation.size:
            raise TriangulationError(f"{len(keys)} key rows for {triangulation.size} tetrahedra")
        self.triangulation = triangulation
        self.keys: list[tuple[Key, ...]] = [tuple(k) for k in keys]

    @classmethod
    def from_tets(cls, tets: Sequence[Sequence[Key]], name: str = "") -> KeyedTriangulation:
        for keys in tets:
            if len(keys) != 4 or len(set(keys)) != 4 or None in keys:
                raise TriangulationError(f"tetrahedron needs 4 distinct keys, got {list(keys)}")
        tri = Triangulation(name=name)
        tri.add_tets(len(tets))
        return cls(tri, tets)

    def face_keys(self, t: int, f: int) -> frozenset[Key]:
        return frozenset(k for v, k in enumerate(self.keys[t]) if v != f)

    def find_face(self, key_set: frozenset[Key], *, free_only: bool = True) -> tuple[int, int]:
        hits = [
            (t, f)
            for t in range(len(self.keys))
            for f in range(4)
            if self.face_keys(t, f) == key_set
            and (not free_only or self.triangulation.adjacent(t, f) is None)
        ]
        if len(hits) != 1:
            raise TriangulationError(f"face {sorted(map(str, key_set))}: {len(hits)} matches")
        return hits[0]

    def vertex_of(self, t: int, key: Key) -> int:
        try:
            return self.keys[t].index(key)
        except ValueError:
            raise TriangulationError(f"tetrahedron {t} has no vertex {key!r}") from None

    def glue_keys(self, key_set: frozenset[Key], key_map: Mapping[Key, Key]) -> None:
        """Glue the face with ``key_set`` to the face with the mapped keys."""
        t, f = self.find_face(key_set)
        t2, f2 = self.find_face(frozenset(key_map.get(k, k) for k in key_set))
        perm = [0, 0, 0, 0]
        for v, k in enumerate(self.keys[t]):
            perm[v] = f2 if v == f else self.vertex_of(t2, key_map.get(k, k))
        self.triangulation.glue(t, f, t2, (perm[0], perm[1], perm[2], perm[3]))

    def auto_glue(self) -> None:
        groups: dict[frozenset[Key], list[tuple[int, int]]] = {}
        for t in range(len(self.keys)):
            for f in range(4):
                if self.triangulation.adjacent(t, f) is None:
                    groups.setdefault(self.face_keys(t, f), []).append((t, f))
        for key_set, faces in groups.items():
            if len(faces) > 2:
                raise TriangulationError(
                    f"{len(faces)} free faces share keys {sorted(map(str, key_set))}"
                )
            if len(faces) == 2:
                (t, f), (t2, f2) = faces
                perm: list[int] = [0, 0, 0, 0]
                for v, k in enumerate(self.keys[t]):
                    perm[v] = f2 if v == f else self.vertex_of(t2, k)
                p: Perm = (perm[0], perm[1], perm[2], perm[3])
                self.triangulation.glue(t, f, t2, p)


def build_from_keys(
    tets: Sequence[Sequence[Key]],
    explicit: Sequence[tuple[frozenset[Key], Mapping[Key, Key]]] = (),
    name: str = "",
) -> KeyedTriangulation:
    kt = KeyedTriangulation.from_tets(tets, name=name)
    for key_set, key_map in explicit:
        kt.glue_keys(key_set, key_map)
    kt.auto_glue()
    return kt
