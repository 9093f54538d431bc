from __future__ import annotations

from collections.abc import Sequence

import networkx as nx

from ..diagram.embedding import SimpleDiagramGraph
from .decomposition import CarvingDecomposition, CarvingError, GraphInput, Nested, graph_edges

"""Upper-bound carvings for graphs beyond the exact cap."""

__all__ = ["heuristic_carving", "caterpillar", "sweep_order", "MAX_STARTS"]

# unranked graphs try this many start vertices (lowest degree first)
MAX_STARTS = 12


def caterpillar(
    order: Sequence[int], edges: Sequence[tuple[int, int]], vertex_count: int
) -> CarvingDecomposition:
    """Carving whose tree-edge cuts are the prefixes of ``order`` plus the singletons."""
    if not order:
        raise CarvingError("empty vertex order")
    nested: Nested = order[0]
    for v in order[1:]:
        nested = (nested, v)
    if sorted(order) != list(range(vertex_count)):
        raise CarvingError("order must list every vertex once")
    return CarvingDecomposition.from_nested(nested, edges, vertex_count)


def _tree_nested(g: nx.Graph, root: int) -> Nested:
    children: dict[int, list[int]] = {v: [] for v in g.nodes}
    for parent, child in nx.bfs_edges(g, root):
        children[parent].append(child)

    def fold(v: int) -> Nested:
        acc: Nested = v
        for c in sorted(children[v]):
            acc = (acc, fold(c))
        return acc

    return fold(root)


def _prefix_width(order: Sequence[int], nbrs: list[list[int]]) -> int:
    inside = [False] * len(nbrs)
    cut = 0
    best = max(len(nb) for nb in nbrs)
    for v in order[:-1]:
        inside[v] = True
        cut += sum(-1 if inside[w] else 1 for w in nbrs[v])
        best = max(best, cut)
    return best


def sweep_order(
    nbrs: list[list[int]], start: int, ranks: Sequence[float] | None = None
) -> list[int]:
    """Greedy vertex order that keeps the unvisited part connected while it can."""
    n = len(nbrs)
    placed = [False] * n
    placed[start] = True
    order = [start]
    cut_gain = [len(nb) for nb in nbrs]
    for w in nbrs[start]:
        cut_gain[w] -= 2
    frontier = set(nbrs[start])

    def suffix_connected(drop: int) -> bool:
        rest = [v for v in range(n) if not placed[v] and v != drop]
        if not rest:
            return True
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            v = stack.pop()
            for w in nbrs[v]:
                if not placed[w] and w != drop and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(rest)

    while len(order) < n:
        pool = frontier or {v for v in range(n) if not placed[v]}

        def key(v: int) -> tuple[float, ...]:
            if ranks is not None:
                return (ranks[v], cut_gain[v], v)
            return (cut_gain[v], v)

        ranked = sorted(pool, key=key)
        pick = next((v for v in ranked if suffix_connected(v)), ranked[0])
        placed[pick] = True
        order.append(pick)
        frontier.discard(pick)
        for w in nbrs[pick]:
            cut_gain[w] -= 2
            if not placed[w]:
                frontier.add(w)
    return order


def heuristic_carving(g: GraphInput) -> CarvingDecomposition:
    """Tree-shaped carving on trees; otherwise the best greedy caterpillar."""
    n, edges = graph_edges(g)
    if n == 0:
        raise CarvingError("graph has no vertices")
    simple = nx.Graph()
    simple.add_nodes_from(range(n))
    simple.add_edges_from((u, v) for u, v in edges if u != v)
    if not nx.is_connected(simple):
        raise CarvingError("graph is not connected")
    if n == 1:
        return CarvingDecomposition((-1,), ((0,),), tuple(edges), 1)
    if nx.is_tree(simple) and len(edges) == n - 1:
        return CarvingDecomposition.from_nested(_tree_nested(simple, 0), edges, n)

    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u != v:
            nbrs[u].append(v)
            nbrs[v].append(u)
    ranks = g.ranks if isinstance(g, SimpleDiagramGraph) else None
    if ranks is not None:
        starts = [min(range(n), key=lambda v: (ranks[v], v))]
    else:
        starts = sorted(range(n), key=lambda v: (len(nbrs[v]), v))[:MAX_STARTS]
    best: list[int] | None = None
    best_width = -1
    for s in starts:
        order = sweep_order(nbrs, s, ranks)
        w = _prefix_width(order, nbrs)
        if best is None or w < best_width:
            best, best_width = order, w
    assert best is not None
    return caterpillar(best, edges, n)
