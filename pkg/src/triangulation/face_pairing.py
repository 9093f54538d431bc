from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from .model import Triangulation, TriangulationError

__all__ = ["FacePairingWidth", "face_pairing_width", "is_daisy_chain", "face_pairing_dot"]


@dataclass(frozen=True)
class FacePairingWidth:
    """Face-pairing graph with the width of the caterpillar carving along ``order``."""

    graph: nx.MultiGraph
    order: tuple[int, ...]
    prefix_cuts: tuple[int, ...]
    max_degree: int

    @property
    def width(self) -> int:
        return max((*self.prefix_cuts, self.max_degree), default=0)


def face_pairing_width(t: Triangulation, order: Sequence[int] | None = None) -> FacePairingWidth:
    """Path-carving upper bound: the largest prefix cut or single-tetrahedron cut along ``order``.

    ``order`` defaults to the triangulation's layering order, else index order.
    """
    g = t.face_pairing_graph()
    seq = tuple(order if order is not None else (t.layer_order or range(t.size)))
    if sorted(seq) != list(range(t.size)):
        raise TriangulationError("order must list every tetrahedron exactly once")
    degree = {v: sum(1 for a, b in g.edges(v) if a != b) for v in g.nodes}
    seen: set[int] = set()
    cut = 0
    cuts = []
    for v in seq[:-1]:
        inside = sum(1 for _, w in g.edges(v) if w in seen)
        cut += degree[v] - 2 * inside
        seen.add(v)
        cuts.append(cut)
    return FacePairingWidth(g, seq, tuple(cuts), max(degree.values(), default=0))


def is_daisy_chain(g: nx.MultiGraph) -> bool:
    """A path of double edges with one loop at an end (a single looped vertex counts)."""
    loops = list(nx.selfloop_edges(g))
    if len(loops) != 1:
        return False
    n = g.number_of_nodes()
    if g.number_of_edges() != 1 + 2 * (n - 1):
        return False
    start = loops[0][0]
    simple = nx.Graph(g)
    simple.remove_edges_from(nx.selfloop_edges(simple))
    if n > 1 and (not nx.is_connected(simple) or simple.degree(start) != 1):
        return False
    if any(d > 2 for _, d in simple.degree()):
        return False
    return all(g.number_of_edges(a, b) == 2 for a, b in simple.edges)


def face_pairing_dot(g: nx.MultiGraph) -> str:
    return str(nx.nx_pydot.to_pydot(g).to_string())
