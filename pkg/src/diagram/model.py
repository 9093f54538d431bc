from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx

"""Rotation-system graphs and knot diagrams.

A diagram lives on the equatorial sphere: every vertex lists its incident edges in
counterclockwise order. Crossings follow the PD convention, so slots 0 and 2 hold the
under strand and slots 1 and 3 the over strand. Degree-2 vertices are subdivision points
(or plat caps) sitting on a strand.

Darts are numbered vertex by vertex, slot by slot; a dart points away from its vertex
along the edge in that slot. Faces are the orbits of ``sigma . tau`` where ``tau`` swaps
the two darts of an edge and ``sigma`` advances one slot counterclockwise.
"""

__all__ = [
    "DiagramError",
    "VertexKind",
    "EmbeddedGraph",
    "Vertex",
    "Diagram",
]


class DiagramError(ValueError):
    """Diagram parsing or validation failure."""


class VertexKind(str, Enum):
    CROSSING = "crossing"
    SUBDIVISION = "subdivision"


@dataclass(frozen=True)
class EmbeddedGraph:
    """Connected multigraph with a rotation system.

    ``rotation[v]`` is the counterclockwise tuple of edge ids at ``v``. Edge ids run over
    ``0..E-1`` and each id occurs exactly twice across all rotations (twice at one vertex
    for a self-loop).
    """

    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: dict[int, int] = {}
        for slots in self.rotation:
            for e in slots:
                seen[e] = seen.get(e, 0) + 1
        if sorted(seen) != list(range(len(seen))):
            raise DiagramError("edge ids must be contiguous from 0")
        bad = [e for e, c in seen.items() if c != 2]
        if bad:
            raise DiagramError(f"edge ids not used exactly twice: {sorted(bad)}")

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.rotation) // 2

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for slots in self.rotation:
            out.append(out[-1] + len(slots))
        return tuple(out)

    @cached_property
    def dart_vertex(self) -> tuple[int, ...]:
        return tuple(v for v, slots in enumerate(self.rotation) for _ in slots)

    @cached_property
    def dart_edge(self) -> tuple[int, ...]:
        return tuple(e for slots in self.rotation for e in slots)

    @cached_property
    def edge_darts(self) -> tuple[tuple[int, int], ...]:
        pairs: dict[int, list[int]] = {}
        for d, e in enumerate(self.dart_edge):
            pairs.setdefault(e, []).append(d)
        return tuple((pairs[e][0], pairs[e][1]) for e in range(self.edge_count))

    @cached_property
    def twin(self) -> tuple[int, ...]:
        out = [0] * len(self.dart_edge)
        for a, b in self.edge_darts:
            out[a], out[b] = b, a
        return tuple(out)

    @cached_property
    def ends(self) -> tuple[tuple[int, int], ...]:
        """Endpoints of each edge; ``ends[e][0] -> ends[e][1]`` is its canonical direction."""
        dv = self.dart_vertex
        return tuple((dv[a], dv[b]) for a, b in self.edge_darts)

    def dart(self, vertex: int, slot: int) -> int:
        return self.offsets[vertex] + slot

    def slot(self, dart: int) -> int:
        return dart - self.offsets[self.dart_vertex[dart]]

    def degree(self, vertex: int) -> int:
        return len(self.rotation[vertex])

    def rotate(self, dart: int, step: int = 1) -> int:
        v = self.dart_vertex[dart]
        deg = len(self.rotation[v])
        return self.offsets[v] + (dart - self.offsets[v] + step) % deg

    def face_step(self, dart: int) -> int:
        return self.rotate(self.twin[dart])

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Face boundary walks as dart cycles, each starting at its smallest dart."""
        seen = [False] * len(self.dart_edge)
        out: list[tuple[int, ...]] = []
        for start in range(len(seen)):
            if seen[start]:
                continue
            walk = []
            d = start
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = self.face_step(d)
            out.append(tuple(walk))
        return tuple(out)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        out = [0] * len(self.dart_edge)
        for f, walk in enumerate(self.faces):
            for d in walk:
                out[d] = f
        return tuple(out)

    @cached_property
    def face_position(self) -> tuple[int, ...]:
        out = [0] * len(self.dart_edge)
        for walk in self.faces:
            for i, d in enumerate(walk):
                out[d] = i
        return tuple(out)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.vertex_count))
        for e, (u, v) in enumerate(self.ends):
            g.add_edge(u, v, key=e)
        return g


@dataclass(frozen=True)
class Vertex:
    """One diagram vertex: its edge labels in counterclockwise order."""

    slots: tuple[int, ...]

    @property
    def kind(self) -> VertexKind:
        return VertexKind.CROSSING if len(self.slots) == 4 else VertexKind.SUBDIVISION


@dataclass(frozen=True)
class Diagram:
    """Knot diagram keyed by PD edge labels.

    ``ranks`` optionally orders vertices along a sweep of the drawing (generators fill it
    in); ``caps`` marks degree-2 vertices that are plat caps.
    """

    vertices: tuple[Vertex, ...]
    ranks: tuple[float, ...] | None = None
    caps: frozenset[int] = field(default_factory=frozenset)
    name: str = ""

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted({e for v in self.vertices for e in v.slots}))

    @cached_property
    def label_index(self) -> dict[int, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def graph(self) -> EmbeddedGraph:
        idx = self.label_index
        return EmbeddedGraph(tuple(tuple(idx[e] for e in v.slots) for v in self.vertices))

    @property
    def kinds(self) -> tuple[VertexKind, ...]:
        return tuple(v.kind for v in self.vertices)

    @property
    def crossing_count(self) -> int:
        return sum(1 for v in self.vertices if v.kind is VertexKind.CROSSING)

    @property
    def edge_count(self) -> int:
        return len(self.labels)

    def to_multigraph(self) -> nx.MultiGraph:
        return self.graph.to_networkx()
