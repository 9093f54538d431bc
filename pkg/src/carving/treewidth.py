from __future__ import annotations

from functools import lru_cache

from .decomposition import CarvingError, GraphInput, graph_edges

"""Exact tree-width by dynamic programming over vertex subsets (oracle scale only)."""

__all__ = ["exact_treewidth", "TREEWIDTH_CAP"]

TREEWIDTH_CAP = 16


def exact_treewidth(g: GraphInput) -> int:
    n, edges = graph_edges(g)
    if n == 0:
        raise CarvingError("graph has no vertices")
    if n > TREEWIDTH_CAP:
        raise CarvingError(f"exact tree-width limited to {TREEWIDTH_CAP} vertices, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            nbrs[u].add(v)
            nbrs[v].add(u)

    def q_size(eliminated: int, v: int) -> int:
        # vertices outside eliminated+v reachable from v through eliminated vertices
        seen = {v}
        stack = [v]
        out: set[int] = set()
        while stack:
            x = stack.pop()
            for w in nbrs[x]:
                if w in seen:
                    continue
                seen.add(w)
                if eliminated >> w & 1:
                    stack.append(w)
                else:
                    out.add(w)
        return len(out)

    @lru_cache(maxsize=None)
    def tw(mask: int) -> int:
        if mask == 0:
            return -1
        best = n
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            rest = mask ^ low
            best = min(best, max(tw(rest), q_size(rest, v)))
            m ^= low
        return best

    return tw((1 << n) - 1)
