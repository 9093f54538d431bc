from __future__ import annotations

import networkx as nx

from ..logging.init import get_logger
from .decomposition import (
    CarvingDecomposition,
    CarvingError,
    GraphInput,
    Nested,
    SolverCapExceeded,
    graph_edges,
    is_bond,
)
from .heuristic import heuristic_carving

"""Exact carving width by decision search over vertex-subset splits.

For a bound ``k`` a subset ``S`` is feasible when its cut has at most ``k`` edges and it is a
singleton or splits into two feasible parts. The whole vertex set is feasible when it splits
into two feasible parts, which then form the two ends of one tree edge. ``k`` is raised from
the maximum degree until the search succeeds; the heuristic supplies the ceiling.

Ties between optimal carvings: the heuristic witness wins when its width is already optimal.
Otherwise every subset keeps its first feasible split in (larger cut, smaller cut, mask) order.
"""

__all__ = ["DEFAULT_EXACT_CAP", "exact_carving_width"]

DEFAULT_EXACT_CAP = 16

logger = get_logger(__name__)


class _Search:
    def __init__(self, n: int, edges: tuple[tuple[int, int], ...], bond_only: bool) -> None:
        self.n = n
        self.full = (1 << n) - 1
        self.bond_only = bond_only
        self.nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u != v:
                self.nbrs[u].append(v)
                self.nbrs[v].append(u)
        cut = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            inside = sum(1 for w in self.nbrs[v] if rest >> w & 1)
            cut[mask] = cut[rest] + len(self.nbrs[v]) - 2 * inside
        self.cut = cut
        self._conn: dict[int, bool] = {}

    def connected(self, mask: int) -> bool:
        hit = self._conn.get(mask)
        if hit is not None:
            return hit
        start = (mask & -mask).bit_length() - 1
        seen = 1 << start
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.nbrs[v]:
                bit = 1 << w
                if mask & bit and not seen & bit:
                    seen |= bit
                    stack.append(w)
        ok = seen == mask
        self._conn[mask] = ok
        return ok

    def admissible(self, mask: int, k: int) -> bool:
        if self.cut[mask] > k:
            return False
        if self.bond_only:
            return self.connected(mask) and self.connected(self.full ^ mask)
        return True

    def splits(self, mask: int, k: int) -> list[tuple[int, int]]:
        low = mask & -mask
        rest = mask ^ low
        out: list[tuple[int, int, int, int]] = []
        sub = rest
        while True:
            a = sub | low
            b = mask ^ a
            if b and self.admissible(a, k) and self.admissible(b, k):
                ca, cb = self.cut[a], self.cut[b]
                out.append((max(ca, cb), min(ca, cb), a, b))
            if sub == 0:
                break
            sub = (sub - 1) & rest
        out.sort()
        return [(a, b) for _, _, a, b in out]

    def solve(self, k: int) -> Nested | None:
        memo: dict[int, tuple[int, int] | None] = {}

        def feasible(mask: int) -> bool:
            if mask & (mask - 1) == 0:
                return True
            if mask in memo:
                return memo[mask] is not None
            memo[mask] = None
            for a, b in self.splits(mask, k):
                if feasible(a) and feasible(b):
                    memo[mask] = (a, b)
                    return True
            return False

        if not feasible(self.full):
            return None

        def nest(mask: int) -> Nested:
            if mask & (mask - 1) == 0:
                return mask.bit_length() - 1
            split = memo[mask]
            assert split is not None
            return (nest(split[0]), nest(split[1]))

        return nest(self.full)


def exact_carving_width(
    g: GraphInput, *, bond_only: bool = False, cap: int = DEFAULT_EXACT_CAP
) -> tuple[int, CarvingDecomposition]:
    """Optimal carving width with a witness decomposition."""
    n, edges = graph_edges(g)
    if n > cap:
        raise SolverCapExceeded(f"graph has {n} vertices; exact solver cap is {cap}")
    if n == 0:
        raise CarvingError("graph has no vertices")
    simple = nx.Graph()
    simple.add_nodes_from(range(n))
    simple.add_edges_from((u, v) for u, v in edges if u != v)
    if not nx.is_connected(simple):
        raise CarvingError("graph is not connected")
    if bond_only:
        if n < 2:
            raise CarvingError("bond carving needs at least 2 vertices")
        if nx.has_bridges(simple):
            raise CarvingError("graph has a bridge; no bond carving of bridgeless type exists")
        if n >= 3 and not nx.is_biconnected(simple):
            raise CarvingError("graph has a cut vertex; no bond carving exists")
    if n == 1:
        return 0, CarvingDecomposition((-1,), ((0,),), edges, 1)

    search = _Search(n, edges, bond_only)
    lower = max(len(nb) for nb in search.nbrs)
    upper_dec = heuristic_carving(g)
    witness_ok = not bond_only or is_bond(upper_dec)
    upper = upper_dec.width if witness_ok else len(edges)
    for k in range(lower, upper + 1):
        if k == upper and witness_ok:
            logger.debug(f"exact: heuristic witness optimal at k={k}")
            return k, upper_dec
        nested = search.solve(k)
        if nested is not None:
            return k, CarvingDecomposition.from_nested(nested, edges, n)
    raise CarvingError(f"no carving of width <= {upper} found")
