from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

import networkx as nx

from .decomposition import CarvingError, GraphInput, graph_edges

"""Exhaustive references: every leaf-labelled unrooted binary tree, and a small-graph census."""

__all__ = ["ORACLE_CAP", "binary_tree_splits", "brute_force_carving_width", "graph_census"]

ORACLE_CAP = 9


@lru_cache(maxsize=None)
def binary_tree_splits(n: int) -> tuple[tuple[int, ...], ...]:
    """All unrooted binary trees on leaves ``0..n-1``.

    Each tree is the tuple of its edge splits, written as the side that avoids leaf 0.
    Trees are grown by inserting leaf ``k`` into every edge of every tree on ``k`` leaves.
    """
    if n < 1:
        raise CarvingError("need at least one leaf")
    if n == 1:
        return ((),)
    trees: list[tuple[int, ...]] = [(0b10,)]
    for k in range(2, n):
        bit = 1 << k
        grown: list[tuple[int, ...]] = []
        for tree in trees:
            for target in tree:
                new = [m | bit if (m & target) == target and m != target else m for m in tree]
                new.append(target | bit)
                new.append(bit)
                grown.append(tuple(new))
        trees = grown
    return tuple(trees)


def brute_force_carving_width(g: GraphInput, *, bond_only: bool = False) -> int:
    n, edges = graph_edges(g)
    if n > ORACLE_CAP:
        raise CarvingError(f"brute force limited to {ORACLE_CAP} vertices, got {n}")
    if n == 1:
        return 0
    cut = [0] * (1 << n)
    for mask in range(1 << n):
        cut[mask] = sum(1 for u, v in edges if (mask >> u & 1) != (mask >> v & 1))
    sub = nx.Graph()
    sub.add_nodes_from(range(n))
    sub.add_edges_from(edges)

    def bond(mask: int) -> bool:
        a = [v for v in range(n) if mask >> v & 1]
        b = [v for v in range(n) if not mask >> v & 1]
        return nx.is_connected(sub.subgraph(a)) and nx.is_connected(sub.subgraph(b))

    best: int | None = None
    for tree in binary_tree_splits(n):
        w = max(cut[m] for m in tree)
        if best is not None and w >= best:
            continue
        if bond_only and not all(bond(m) for m in tree):
            continue
        best = w
    if best is None:
        raise CarvingError("no bond carving exists")
    return best


def graph_census(max_vertices: int = 7) -> Iterator[nx.Graph]:
    """Connected simple graphs with 2..max_vertices vertices, one per isomorphism class."""
    if max_vertices > 7:
        raise CarvingError("the graph atlas stops at 7 vertices")
    for g in nx.graph_atlas_g():
        if 2 <= g.number_of_nodes() <= max_vertices and nx.is_connected(g):
            yield g
