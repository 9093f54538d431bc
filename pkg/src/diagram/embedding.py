from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .model import Diagram, DiagramError, EmbeddedGraph, VertexKind

"""Face tracing, strand tracing, validation, subdivision and duality."""

__all__ = [
    "SimpleDiagramGraph",
    "strand_components",
    "knot_traversal",
    "validate_diagram",
    "faces",
    "dual_graph",
    "subdivide_to_simple",
    "contract_added",
]


def _through(g: EmbeddedGraph, dart: int) -> int:
    """Outgoing dart that continues the strand which arrives along ``dart``."""
    arrive = g.twin[dart]
    deg = g.degree(g.dart_vertex[arrive])
    return g.rotate(arrive, deg // 2)


def strand_components(g: EmbeddedGraph) -> list[tuple[int, ...]]:
    """Closed strands of the diagram, each as its cyclic list of outgoing darts."""
    used = [False] * g.edge_count
    out: list[tuple[int, ...]] = []
    for e in range(g.edge_count):
        if used[e]:
            continue
        start = g.edge_darts[e][0]
        walk = []
        d = start
        while True:
            walk.append(d)
            used[g.dart_edge[d]] = True
            d = _through(g, d)
            if d == start:
                break
        out.append(tuple(walk))
    return out


def knot_traversal(g: EmbeddedGraph) -> tuple[int, ...]:
    """Darts of the single strand, starting out of vertex 0 opposite its slot 0."""
    start = g.dart(0, g.degree(0) // 2)
    walk = [start]
    d = _through(g, start)
    while d != start:
        walk.append(d)
        d = _through(g, d)
    return tuple(walk)


def validate_diagram(d: Diagram) -> Diagram:
    """Check arity, label multiplicity, connectivity, Euler's formula and knottedness."""
    if not d.vertices:
        raise DiagramError("diagram has no vertices")
    for i, v in enumerate(d.vertices):
        if len(v.slots) not in (2, 4):
            raise DiagramError(f"vertex {i}: tuple arity {len(v.slots)} (expected 4 or 2)")
    counts = Counter(e for v in d.vertices for e in v.slots)
    bad = sorted(label for label, c in counts.items() if c != 2)
    if bad:
        raise DiagramError(f"edge labels not appearing exactly twice: {bad}")
    g = d.graph
    if not nx.is_connected(g.to_networkx()):
        raise DiagramError("underlying graph is not connected")
    chi = g.euler_characteristic()
    if chi != 2:
        raise DiagramError(
            f"rotation system fails Euler check: V - E + F = {g.vertex_count} - "
            f"{g.edge_count} + {g.face_count} = {chi} (non-planar or virtual code)"
        )
    comps = len(strand_components(g))
    if comps != 1:
        raise DiagramError(f"diagram encodes a {comps}-component link, not a knot")
    return d


def faces(d: Diagram) -> list[tuple[int, ...]]:
    """Face boundary walks as sequences of PD edge labels."""
    g = d.graph
    return [tuple(d.labels[g.dart_edge[x]] for x in walk) for walk in g.faces]


@dataclass(frozen=True)
class SimpleDiagramGraph:
    """Simple embedded graph obtained from a diagram by subdividing edges.

    Vertices ``0..n-1`` are the diagram's own vertices; added subdivision vertices follow
    and have ``vertex_origin`` ``None``. ``edge_origin`` maps each edge to the PD label it
    subdivides.
    """

    graph: EmbeddedGraph
    source: Diagram
    vertex_origin: tuple[int | None, ...]
    edge_origin: tuple[int, ...]
    ranks: tuple[float, ...] | None = None
    caps: frozenset[int] = field(default_factory=frozenset)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def added_count(self) -> int:
        return sum(1 for o in self.vertex_origin if o is None)

    @cached_property
    def kinds(self) -> tuple[VertexKind, ...]:
        return tuple(
            VertexKind.CROSSING if len(s) == 4 else VertexKind.SUBDIVISION
            for s in self.graph.rotation
        )

    def to_networkx(self) -> nx.MultiGraph:
        return self.graph.to_networkx()

    def is_simple(self) -> bool:
        pairs = [frozenset(p) for p in self.graph.ends]
        return all(len(p) == 2 for p in pairs) and len(set(pairs)) == len(pairs)


def dual_graph(g: EmbeddedGraph | SimpleDiagramGraph) -> EmbeddedGraph:
    """Planar dual: one vertex per face, dual edge ``e`` crossing primal edge ``e``."""
    if isinstance(g, SimpleDiagramGraph):
        g = g.graph
    return EmbeddedGraph(tuple(tuple(g.dart_edge[x] for x in walk) for walk in g.faces))


def subdivide_to_simple(d: Diagram) -> SimpleDiagramGraph:
    """Minimal subdivision: 2 points per self-loop, 1 on all but one edge of a parallel class."""
    g = d.graph
    n = g.vertex_count
    extra = [0] * g.edge_count
    classes: dict[frozenset[int], list[int]] = {}
    for e, (u, v) in enumerate(g.ends):
        if u == v:
            extra[e] = 2
        else:
            classes.setdefault(frozenset((u, v)), []).append(e)
    for members in classes.values():
        for e in sorted(members)[1:]:
            extra[e] = 1

    rotation = [list(slots) for slots in g.rotation]
    vertex_origin: list[int | None] = list(range(n))
    edge_origin: list[int] = []
    ranks = list(d.ranks) if d.ranks is not None else None
    for e in range(g.edge_count):
        a, b = g.edge_darts[e]
        k = extra[e]
        chain = list(range(len(edge_origin), len(edge_origin) + k + 1))
        edge_origin.extend([d.labels[e]] * (k + 1))
        rotation[g.dart_vertex[a]][g.slot(a)] = chain[0]
        rotation[g.dart_vertex[b]][g.slot(b)] = chain[-1]
        u, v = g.ends[e]
        for j in range(1, k + 1):
            rotation.append([chain[j - 1], chain[j]])
            vertex_origin.append(None)
            if ranks is not None:
                ranks.append(min(ranks[u], ranks[v]) + 0.5 * j / k)
    return SimpleDiagramGraph(
        graph=EmbeddedGraph(tuple(tuple(r) for r in rotation)),
        source=d,
        vertex_origin=tuple(vertex_origin),
        edge_origin=tuple(edge_origin),
        ranks=tuple(ranks) if ranks is not None else None,
        caps=d.caps,
    )


def contract_added(sg: SimpleDiagramGraph) -> nx.MultiGraph:
    """Undo ``subdivide_to_simple``: the diagram multigraph keyed by PD label."""
    ends: dict[int, list[int]] = {}
    for e, (u, v) in enumerate(sg.graph.ends):
        for x in (u, v):
            origin = sg.vertex_origin[x]
            if origin is not None:
                ends.setdefault(sg.edge_origin[e], []).append(origin)
    out = nx.MultiGraph()
    out.add_nodes_from(range(len(sg.source.vertices)))
    for label in sorted(ends):
        u, v = ends[label]
        out.add_edge(u, v, key=label)
    return out
