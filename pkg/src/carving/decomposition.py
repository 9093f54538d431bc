from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Union

import networkx as nx

from ..diagram.embedding import SimpleDiagramGraph

"""Carving decompositions.

The unrooted binary tree is stored rooted at a fixed internal node so that every tree edge is
named by its child node. Leaves are nodes ``0..L-1``; leaf ``i`` carries the graph vertices in
``leaf_blocks[i]`` (a single vertex for an ordinary carving).
"""

__all__ = [
    "CarvingError",
    "SolverCapExceeded",
    "CarvingDecomposition",
    "GraphInput",
    "graph_edges",
    "is_bond",
    "width",
    "CARVING_SCHEMA",
]

CARVING_SCHEMA = "carving/v1"

GraphInput = Union[SimpleDiagramGraph, nx.Graph, nx.MultiGraph]

Nested = Union[int, tuple["Nested", "Nested"]]


class CarvingError(ValueError):
    """Carving construction or solver failure."""


class SolverCapExceeded(CarvingError):
    """Graph is larger than the exact solver accepts."""


def graph_edges(g: GraphInput) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Vertex count and edge list with vertices renumbered ``0..n-1``."""
    if isinstance(g, SimpleDiagramGraph):
        return g.vertex_count, g.graph.ends
    nodes = sorted(g.nodes)
    idx = {v: i for i, v in enumerate(nodes)}
    return len(nodes), tuple((idx[u], idx[v]) for u, v, *_ in g.edges)


@dataclass(frozen=True)
class CarvingDecomposition:
    parent: tuple[int, ...]
    leaf_blocks: tuple[tuple[int, ...], ...]
    graph_edges: tuple[tuple[int, int], ...]
    vertex_count: int
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n_leaves = len(self.leaf_blocks)
        if n_leaves == 0:
            raise CarvingError("decomposition has no leaves")
        covered = sorted(v for block in self.leaf_blocks for v in block)
        if covered != list(range(self.vertex_count)):
            raise CarvingError("leaf blocks must partition the graph vertices")
        if any(not block for block in self.leaf_blocks):
            raise CarvingError("empty leaf block")
        roots = [c for c, p in enumerate(self.parent) if p == -1]
        if len(roots) != 1:
            raise CarvingError(f"tree must have exactly one root, found {len(roots)}")
        expected = 1 if n_leaves == 1 else 2 * n_leaves - 2
        if len(self.parent) != expected:
            raise CarvingError(f"{n_leaves} leaves need {expected} tree nodes")
        for node in range(len(self.parent)):
            deg = len(self.children[node]) + (0 if self.parent[node] == -1 else 1)
            if node < n_leaves and deg > 1:
                raise CarvingError(f"leaf {node} has tree degree {deg}")
            if node >= n_leaves and deg != 3:
                raise CarvingError(f"internal node {node} has tree degree {deg}")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        seen = 0
        queue = deque([self.root])
        while queue:
            node = queue.popleft()
            seen += 1
            queue.extend(self.children[node])
        if seen != len(self.parent):
            raise CarvingError("parent array does not describe a tree")

    # -- construction -----------------------------------------------------------------

    @classmethod
    def from_adjacency(
        cls,
        adj: dict[int, list[int]],
        leaf_blocks: Sequence[Sequence[int]],
        graph_edges: Sequence[tuple[int, int]],
        vertex_count: int,
    ) -> CarvingDecomposition:
        n_leaves = len(leaf_blocks)
        nodes = 1 if n_leaves == 1 else 2 * n_leaves - 2
        root = n_leaves if n_leaves >= 3 else 0
        parent = [-2] * nodes
        parent[root] = -1
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for nb in sorted(adj.get(node, ())):
                if parent[nb] == -2:
                    parent[nb] = node
                    queue.append(nb)
        if -2 in parent:
            raise CarvingError("tree adjacency is disconnected")
        return cls(
            tuple(parent),
            tuple(tuple(b) for b in leaf_blocks),
            tuple((int(u), int(v)) for u, v in graph_edges),
            vertex_count,
        )

    @classmethod
    def from_nested(
        cls,
        nested: Nested,
        graph_edges: Sequence[tuple[int, int]],
        vertex_count: int,
        leaf_blocks: Sequence[Sequence[int]] | None = None,
    ) -> CarvingDecomposition:
        """Unroot a rooted binary tree given as nested pairs of leaf indices."""
        leaves: list[int] = []

        def collect(t: Nested) -> None:
            if isinstance(t, int):
                leaves.append(t)
            else:
                collect(t[0])
                collect(t[1])

        collect(nested)
        n_leaves = len(leaves)
        if sorted(leaves) != list(range(n_leaves)):
            raise CarvingError("nested tree must use each leaf index 0..L-1 exactly once")
        if leaf_blocks is None:
            leaf_blocks = [(i,) for i in range(n_leaves)]
        adj: dict[int, list[int]] = defaultdict(list)
        counter = [n_leaves]

        def build(t: Nested) -> int:
            if isinstance(t, int):
                return t
            node = counter[0]
            counter[0] += 1
            a, b = build(t[0]), build(t[1])
            for child in (a, b):
                adj[node].append(child)
                adj[child].append(node)
            return node

        if not isinstance(nested, int):
            # the top pair becomes a single tree edge
            a, b = build(nested[0]), build(nested[1])
            adj[a].append(b)
            adj[b].append(a)
        return cls.from_adjacency(adj, leaf_blocks, graph_edges, vertex_count)

    # -- structure --------------------------------------------------------------------

    @property
    def leaf_count(self) -> int:
        return len(self.leaf_blocks)

    @property
    def node_count(self) -> int:
        return len(self.parent)

    @cached_property
    def root(self) -> int:
        return self.parent.index(-1)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.parent]
        for node, p in enumerate(self.parent):
            if p >= 0:
                out[p].append(node)
        return tuple(tuple(c) for c in out)

    @cached_property
    def tree_edges(self) -> tuple[int, ...]:
        """Tree edges, each named by its child node, in ascending order."""
        return tuple(c for c, p in enumerate(self.parent) if p >= 0)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        out = [0] * self.node_count
        queue = deque([self.root])
        while queue:
            node = queue.popleft()
            for c in self.children[node]:
                out[c] = out[node] + 1
                queue.append(c)
        return tuple(out)

    def leaf_of_vertex(self, v: int) -> int:
        return self._leaf_of[v]

    @cached_property
    def _leaf_of(self) -> tuple[int, ...]:
        out = [0] * self.vertex_count
        for leaf, block in enumerate(self.leaf_blocks):
            for v in block:
                out[v] = leaf
        return tuple(out)

    def path(self, x: int, y: int) -> list[int]:
        """Tree edges (child ids) on the path from node ``x`` to node ``y``, in order."""
        up_x: list[int] = []
        up_y: list[int] = []
        a, b = x, y
        while a != b:
            if self.depth[a] >= self.depth[b]:
                up_x.append(a)
                a = self.parent[a]
            else:
                up_y.append(b)
                b = self.parent[b]
        return up_x + up_y[::-1]

    # -- middle sets ------------------------------------------------------------------

    @cached_property
    def below_masks(self) -> tuple[int, ...]:
        """Bitmask of graph vertices in the subtree under each node."""
        masks = [0] * self.node_count
        for leaf, block in enumerate(self.leaf_blocks):
            for v in block:
                masks[leaf] |= 1 << v
        order = sorted(range(self.node_count), key=lambda n: -self.depth[n])
        for node in order:
            p = self.parent[node]
            if p >= 0:
                masks[p] |= masks[node]
        return tuple(masks)

    def side(self, edge: int) -> frozenset[int]:
        mask = self.below_masks[edge]
        return frozenset(v for v in range(self.vertex_count) if mask >> v & 1)

    @cached_property
    def middle_sets(self) -> dict[int, frozenset[int]]:
        out: dict[int, frozenset[int]] = {}
        for c in self.tree_edges:
            mask = self.below_masks[c]
            out[c] = frozenset(
                i
                for i, (u, v) in enumerate(self.graph_edges)
                if (mask >> u & 1) != (mask >> v & 1)
            )
        return out

    def middle(self, edge: int) -> frozenset[int]:
        return self.middle_sets[edge]

    @cached_property
    def width(self) -> int:
        return max((len(m) for m in self.middle_sets.values()), default=0)

    def width_profile(self) -> tuple[int, ...]:
        """Middle-set sizes in tree-edge order; used to compare tied optima."""
        return tuple(len(self.middle_sets[c]) for c in self.tree_edges)

    def to_networkx(self) -> nx.Graph:
        t = nx.Graph()
        for node in range(self.node_count):
            if node < self.leaf_count:
                label = ",".join(str(v) for v in self.leaf_blocks[node])
                t.add_node(node, label=label, shape="box")
            else:
                t.add_node(node, label=str(node), shape="circle")
        for c in self.tree_edges:
            t.add_edge(c, self.parent[c], label=str(len(self.middle_sets[c])))
        return t

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": CARVING_SCHEMA,
            "label": self.label,
            "parent": list(self.parent),
            "leaf_blocks": [list(b) for b in self.leaf_blocks],
            "vertex_count": self.vertex_count,
            "graph_edges": [list(e) for e in self.graph_edges],
            "middle_sizes": {str(c): len(self.middle_sets[c]) for c in self.tree_edges},
            "width": self.width,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CarvingDecomposition:
        if data.get("schema") != CARVING_SCHEMA:
            raise CarvingError(f"unsupported carving schema: {data.get('schema')!r}")
        return cls(
            tuple(int(p) for p in data["parent"]),
            tuple(tuple(int(v) for v in b) for b in data["leaf_blocks"]),
            tuple((int(u), int(v)) for u, v in data["graph_edges"]),
            int(data["vertex_count"]),
            label=str(data.get("label", "")),
        )


def width(dec: CarvingDecomposition) -> int:
    return dec.width


def _connected(mask: int, adj: list[list[int]]) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            bit = 1 << w
            if mask & bit and not seen & bit:
                seen |= bit
                stack.append(w)
    return seen == mask


def is_bond(dec: CarvingDecomposition) -> bool:
    """True iff both sides of every tree edge induce connected subgraphs."""
    adj: list[list[int]] = [[] for _ in range(dec.vertex_count)]
    for u, v in dec.graph_edges:
        adj[u].append(v)
        adj[v].append(u)
    full = (1 << dec.vertex_count) - 1
    for c in dec.tree_edges:
        mask = dec.below_masks[c]
        if not (_connected(mask, adj) and _connected(full ^ mask, adj)):
            return False
    return True
