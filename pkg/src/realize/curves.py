from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any

from ..carving.decomposition import CarvingDecomposition
from ..diagram.embedding import SimpleDiagramGraph
from ..diagram.model import EmbeddedGraph

"""Jordan curves realizing a bond carving on an embedded graph.

A curve is a closed walk in the dual graph. Each step is a ``Crossing``: the primal edge
crossed, the dart (with tail on the curve's own side) whose face the curve enters, and the
position of the curve among all curves crossing that edge, counted from ``ends[edge][0]``.
"""

__all__ = [
    "RealizationError",
    "Crossing",
    "Curve",
    "CurveFamily",
    "realize",
    "CURVE_FAMILY_SCHEMA",
]

CURVE_FAMILY_SCHEMA = "curve-family/v1"


class RealizationError(ValueError):
    """Cut cannot be drawn as a simple dual cycle."""


@dataclass(frozen=True)
class Crossing:
    edge: int
    position: int
    dart: int


@dataclass(frozen=True)
class Curve:
    tree_edge: int
    crossings: tuple[Crossing, ...]
    side: frozenset[int]

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(c.edge for c in self.crossings)

    @property
    def weight(self) -> int:
        return len(self.crossings)


@dataclass(frozen=True)
class CurveFamily:
    graph: EmbeddedGraph
    decomposition: CarvingDecomposition
    curves: tuple[Curve, ...]

    @cached_property
    def by_tree_edge(self) -> dict[int, Curve]:
        return {c.tree_edge: c for c in self.curves}

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": CURVE_FAMILY_SCHEMA,
            "curves": [
                {
                    "tree_edge": c.tree_edge,
                    "side": sorted(c.side),
                    "crossings": [[x.edge, x.position, x.dart] for x in c.crossings],
                }
                for c in self.curves
            ],
        }


def _positions(g: EmbeddedGraph, dec: CarvingDecomposition) -> dict[tuple[int, int], int]:
    """Position of tree edge ``t`` along graph edge ``e``, keyed ``(e, t)``."""
    out: dict[tuple[int, int], int] = {}
    for e, (x, y) in enumerate(g.ends):
        path = dec.path(dec.leaf_of_vertex(x), dec.leaf_of_vertex(y))
        for i, t in enumerate(path):
            out[(e, t)] = i
    return out


def _trace(
    g: EmbeddedGraph, tree_edge: int, side_mask: int, mid: frozenset[int],
    positions: dict[tuple[int, int], int],
) -> tuple[Crossing, ...]:
    cut_darts: dict[int, list[int]] = {}
    for e in mid:
        for d in g.edge_darts[e]:
            cut_darts.setdefault(g.face_of[d], []).append(d)
    for f, darts in cut_darts.items():
        if len(darts) != 2:
            raise RealizationError(
                f"tree edge {tree_edge}: face {f} meets the cut {len(darts)} times "
                "(cut is not a simple dual cycle)"
            )
    e0 = min(mid)
    a, b = g.edge_darts[e0]
    start = a if side_mask >> g.dart_vertex[a] & 1 else b
    walk: list[Crossing] = []
    d = start
    while True:
        e = g.dart_edge[d]
        walk.append(Crossing(edge=e, position=positions[(e, tree_edge)], dart=d))
        pair = cut_darts[g.face_of[d]]
        leave = pair[1] if pair[0] == d else pair[0]
        d = g.twin[leave]
        if d == start:
            break
        if len(walk) > len(mid):
            raise RealizationError(f"tree edge {tree_edge}: dual walk does not close")
    if len(walk) != len(mid):
        raise RealizationError(
            f"tree edge {tree_edge}: dual cycle covers {len(walk)} of {len(mid)} cut edges "
            "(cut is not a bond)"
        )
    return tuple(walk)


def realize(g: SimpleDiagramGraph | EmbeddedGraph, dec: CarvingDecomposition) -> CurveFamily:
    """One dual cycle per tree edge, ordered along shared edges by tree position."""
    graph = g.graph if isinstance(g, SimpleDiagramGraph) else g
    if dec.vertex_count != graph.vertex_count:
        raise RealizationError(
            f"decomposition has {dec.vertex_count} vertices, graph has {graph.vertex_count}"
        )
    if tuple(dec.graph_edges) != tuple(graph.ends):
        raise RealizationError("decomposition edge list does not match the embedded graph")
    positions = _positions(graph, dec)
    curves = []
    for t in dec.tree_edges:
        mid = dec.middle(t)
        if not mid:
            raise RealizationError(f"tree edge {t}: empty middle set")
        crossings = _trace(graph, t, dec.below_masks[t], mid, positions)
        curves.append(Curve(tree_edge=t, crossings=crossings, side=dec.side(t)))
    return CurveFamily(graph=graph, decomposition=dec, curves=tuple(curves))
