from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

import networkx as nx

"""3-manifold triangulations by face gluings.

Face ``i`` of a tetrahedron is the face opposite vertex ``i``. A gluing of face ``f`` of
tetrahedron ``t`` carries a permutation ``perm`` of ``0..3``: vertex ``v`` of ``t`` goes to
vertex ``perm[v]`` of the neighbour, so the neighbour's glued face is ``perm[f]``. Gluings
are always stored in both directions (the reverse carries the inverse permutation).
"""

__all__ = [
    "TRIANGULATION_SCHEMA",
    "Perm",
    "TriangulationError",
    "perm_sign",
    "perm_inverse",
    "perm_compose",
    "LabelledFace",
    "Census",
    "BoundaryComponent",
    "ParityUnionFind",
    "Triangulation",
]

TRIANGULATION_SCHEMA = "triangulation/v1"

Perm = tuple[int, int, int, int]

IDENTITY: Perm = (0, 1, 2, 3)


class TriangulationError(ValueError):
    """Invalid gluing or a construction whose checks fail."""


def perm_sign(p: Perm) -> int:
    inversions = sum(1 for i, j in combinations(range(4), 2) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def perm_inverse(p: Perm) -> Perm:
    out = [0, 0, 0, 0]
    for i, v in enumerate(p):
        out[v] = i
    return (out[0], out[1], out[2], out[3])


def perm_compose(a: Perm, b: Perm) -> Perm:
    """``a . b``: apply ``b`` first."""
    return (a[b[0]], a[b[1]], a[b[2]], a[b[3]])


def _face_vertices(f: int) -> tuple[int, int, int]:
    a, b, c = (v for v in range(4) if v != f)
    return a, b, c


@dataclass(frozen=True)
class LabelledFace:
    """Boundary face with a label on each of its three edges (keyed by tetrahedron vertices)."""

    tet: int
    face: int
    edges: tuple[tuple[int, int, str], ...]

    def label_of(self, i: int, j: int) -> str:
        key = (min(i, j), max(i, j))
        for a, b, label in self.edges:
            if (a, b) == key:
                return label
        raise TriangulationError(f"face ({self.tet},{self.face}) has no edge {key}")

    def vertex_opposite(self, label: str) -> int:
        for a, b, lab in self.edges:
            if lab == label:
                (v,) = [x for x in _face_vertices(self.face) if x not in (a, b)]
                return v
        raise TriangulationError(f"face ({self.tet},{self.face}) has no edge labelled {label}")

    def shifted(self, offset: int) -> LabelledFace:
        return LabelledFace(self.tet + offset, self.face, self.edges)

    def relabelled(self, s: Perm) -> LabelledFace:
        edges = tuple(
            (min(s[a], s[b]), max(s[a], s[b]), lab) for a, b, lab in self.edges
        )
        return LabelledFace(self.tet, s[self.face], tuple(sorted(edges)))


@dataclass(frozen=True)
class Census:
    vertices: int
    edges: int
    faces: int
    tetrahedra: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.vertices, self.edges, self.faces, self.tetrahedra)


@dataclass(frozen=True)
class BoundaryComponent:
    faces: tuple[tuple[int, int], ...]
    vertices: int
    edges: int

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + len(self.faces)


class ParityUnionFind:
    """Union-find whose nodes carry a parity relative to their root."""

    def __init__(self) -> None:
        self._parent: dict[Any, Any] = {}
        self._parity: dict[Any, int] = {}

    def add(self, x: Any) -> None:
        if x not in self._parent:
            self._parent[x] = x
            self._parity[x] = 0

    def find(self, x: Any) -> tuple[Any, int]:
        self.add(x)
        path = []
        while self._parent[x] != x:
            path.append(x)
            x = self._parent[x]
        root = x
        acc = 0
        for node in reversed(path):
            acc ^= self._parity[node]
            self._parity[node] = acc
            self._parent[node] = root
        return root, (self._parity[path[0]] if path else 0)

    def union(self, a: Any, b: Any, parity: int) -> bool:
        """Join with ``parity(a) xor parity(b) == parity``; False on a contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == parity
        self._parent[rb] = ra
        self._parity[rb] = pa ^ pb ^ parity
        return True

    def classes(self) -> dict[Any, list[Any]]:
        out: dict[Any, list[Any]] = {}
        for x in self._parent:
            out.setdefault(self.find(x)[0], []).append(x)
        return out


@dataclass
class Triangulation:
    name: str = ""
    adjacency: list[list[tuple[int, int, Perm] | None]] = field(default_factory=list)
    boundary_tori: dict[str, tuple[LabelledFace, LabelledFace]] = field(default_factory=dict)
    drilled: bool = False
    layer_order: tuple[int, ...] = ()

    # -- construction -----------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.adjacency)

    def add_tet(self) -> int:
        self.adjacency.append([None, None, None, None])
        return self.size - 1

    def add_tets(self, n: int) -> list[int]:
        return [self.add_tet() for _ in range(n)]

    def glue(self, t: int, f: int, t2: int, perm: Perm) -> None:
        if sorted(perm) != [0, 1, 2, 3]:
            raise TriangulationError(f"not a permutation: {perm}")
        f2 = perm[f]
        if (t, f) == (t2, f2):
            raise TriangulationError(f"face ({t},{f}) cannot be glued to itself")
        if self.adjacency[t][f] is not None or self.adjacency[t2][f2] is not None:
            raise TriangulationError(f"face ({t},{f}) or ({t2},{f2}) is already glued")
        self.adjacency[t][f] = (t2, f2, perm)
        self.adjacency[t2][f2] = (t, f, perm_inverse(perm))

    def adjacent(self, t: int, f: int) -> tuple[int, int, Perm] | None:
        return self.adjacency[t][f]

    def copy(self) -> Triangulation:
        return Triangulation(
            name=self.name,
            adjacency=[list(row) for row in self.adjacency],
            boundary_tori=dict(self.boundary_tori),
            drilled=self.drilled,
            layer_order=self.layer_order,
        )

    def mirrored(self) -> Triangulation:
        """Same triangulation with vertices 0 and 1 swapped in every tetrahedron."""
        s: Perm = (1, 0, 2, 3)
        out = Triangulation(name=self.name, drilled=self.drilled, layer_order=self.layer_order)
        out.add_tets(self.size)
        for t, row in enumerate(self.adjacency):
            for f, adj in enumerate(row):
                if adj is None:
                    continue
                t2, _, perm = adj
                out.adjacency[t][s[f]] = (t2, s[perm[f]], perm_compose(s, perm_compose(perm, s)))
        out.boundary_tori = {
            k: (a.relabelled(s), b.relabelled(s)) for k, (a, b) in self.boundary_tori.items()
        }
        return out

    def absorb(self, other: Triangulation) -> int:
        """Append ``other``'s tetrahedra and gluings; returns the index offset."""
        offset = self.size
        for row in other.adjacency:
            self.adjacency.append(
                [None if adj is None else (adj[0] + offset, adj[1], adj[2]) for adj in row]
            )
        return offset

    # -- structure --------------------------------------------------------------------

    def gluings(self) -> Iterator[tuple[int, int, int, int, Perm]]:
        """Each glued face pair once, as ``(t, f, t2, f2, perm)``."""
        for t, row in enumerate(self.adjacency):
            for f, adj in enumerate(row):
                if adj is None:
                    continue
                t2, f2, perm = adj
                if (t, f) < (t2, f2):
                    yield t, f, t2, f2, perm

    def boundary_faces(self) -> list[tuple[int, int]]:
        return [
            (t, f) for t, row in enumerate(self.adjacency) for f, adj in enumerate(row)
            if adj is None
        ]

    def check_gluings(self) -> list[str]:
        problems = []
        for t, row in enumerate(self.adjacency):
            for f, adj in enumerate(row):
                if adj is None:
                    continue
                t2, f2, perm = adj
                if perm[f] != f2:
                    problems.append(f"({t},{f}): permutation sends face to {perm[f]} not {f2}")
                back = self.adjacency[t2][f2]
                if back is None or back[0] != t or back[1] != f:
                    problems.append(f"({t},{f}) -> ({t2},{f2}) has no reverse gluing")
                elif perm_compose(back[2], perm) != IDENTITY:
                    problems.append(f"({t},{f}) -> ({t2},{f2}) is not involutive")
        return problems

    def edge_union_find(self) -> ParityUnionFind:
        """Edges ``(t, i, j)`` with ``i < j``; parity 1 means reversed against the root."""
        uf = ParityUnionFind()
        for t in range(self.size):
            for i, j in combinations(range(4), 2):
                uf.add((t, i, j))
        for t, f, t2, _, perm in self.gluings():
            for i, j in combinations(_face_vertices(f), 2):
                a, b = perm[i], perm[j]
                ok = uf.union((t, i, j), (t2, min(a, b), max(a, b)), 0 if a < b else 1)
                if not ok:
                    raise TriangulationError(f"edge ({t},{i}{j}) is identified with its reverse")
        return uf

    def edge_classes(self) -> dict[tuple[int, int, int], int]:
        uf = self.edge_union_find()
        roots = sorted(uf.classes())
        index = {r: k for k, r in enumerate(roots)}
        return {
            (t, i, j): index[uf.find((t, i, j))[0]]
            for t in range(self.size)
            for i, j in combinations(range(4), 2)
        }

    def vertex_classes(self) -> dict[tuple[int, int], int]:
        uf = ParityUnionFind()
        for t in range(self.size):
            for v in range(4):
                uf.add((t, v))
        for t, f, t2, _, perm in self.gluings():
            for v in _face_vertices(f):
                uf.union((t, v), (t2, perm[v]), 0)
        roots = sorted(uf.classes())
        index = {r: k for k, r in enumerate(roots)}
        return {(t, v): index[uf.find((t, v))[0]] for t in range(self.size) for v in range(4)}

    def census(self) -> Census:
        glued = sum(1 for _ in self.gluings())
        faces = glued + len(self.boundary_faces())
        return Census(
            vertices=len(set(self.vertex_classes().values())),
            edges=len(set(self.edge_classes().values())),
            faces=faces,
            tetrahedra=self.size,
        )

    def orientation(self) -> list[int] | None:
        """Signs making every gluing orientation-reversing on faces; None if impossible."""
        signs = [0] * self.size
        for start in range(self.size):
            if signs[start]:
                continue
            signs[start] = 1
            queue = deque([start])
            while queue:
                t = queue.popleft()
                for adj in self.adjacency[t]:
                    if adj is None:
                        continue
                    t2, _, perm = adj
                    want = signs[t] * -perm_sign(perm)
                    if signs[t2] == 0:
                        signs[t2] = want
                        queue.append(t2)
                    elif signs[t2] != want:
                        return None
        return signs

    def is_orientable(self) -> bool:
        return self.orientation() is not None

    def boundary_components(self) -> list[BoundaryComponent]:
        faces = self.boundary_faces()
        if not faces:
            return []
        edges = self.edge_classes()
        verts = self.vertex_classes()
        link = nx.Graph()
        link.add_nodes_from(faces)
        by_edge: dict[int, list[tuple[int, int]]] = {}
        for t, f in faces:
            for i, j in combinations(_face_vertices(f), 2):
                by_edge.setdefault(edges[(t, i, j)], []).append((t, f))
        for members in by_edge.values():
            for a, b in zip(members, members[1:]):
                link.add_edge(a, b)
        out = []
        for comp in sorted(nx.connected_components(link), key=min):
            comp_faces = tuple(sorted(comp))
            comp_edges = {
                edges[(t, i, j)]
                for t, f in comp_faces
                for i, j in combinations(_face_vertices(f), 2)
            }
            comp_verts = {verts[(t, v)] for t, f in comp_faces for v in _face_vertices(f)}
            out.append(BoundaryComponent(comp_faces, len(comp_verts), len(comp_edges)))
        return out

    def face_pairing_graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.size))
        for t, f, t2, f2, _ in self.gluings():
            g.add_edge(t, t2, faces=f"{f}-{f2}")
        return g

    # -- export -----------------------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        census = self.census()
        return {
            "schema": TRIANGULATION_SCHEMA,
            "name": self.name,
            "tetrahedra": [
                [None if adj is None else [adj[0], list(adj[2])] for adj in row]
                for row in self.adjacency
            ],
            "census": {
                "vertices": census.vertices,
                "edges": census.edges,
                "faces": census.faces,
                "tetrahedra": census.tetrahedra,
            },
            "boundary_tori": {
                k: [
                    {"tet": lf.tet, "face": lf.face, "edges": [list(e) for e in lf.edges]}
                    for lf in pair
                ]
                for k, pair in self.boundary_tori.items()
            },
        }

    def to_interchange(self) -> str:
        """One line per tetrahedron: ``neighbour:perm`` for faces 0..3, ``-`` if free."""
        lines = [f"# {self.name or 'triangulation'} {self.size}"]
        for t, row in enumerate(self.adjacency):
            cells = [
                "-" if adj is None else f"{adj[0]}:{''.join(str(x) for x in adj[2])}"
                for adj in row
            ]
            lines.append(f"{t} " + " ".join(cells))
        return "\n".join(lines) + "\n"
