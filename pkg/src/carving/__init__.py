from .bounds import WidthBounds, tw_bounds_from_cw
from .decomposition import (
    CARVING_SCHEMA,
    CarvingDecomposition,
    CarvingError,
    SolverCapExceeded,
    graph_edges,
    is_bond,
    width,
)
from .exact import DEFAULT_EXACT_CAP, exact_carving_width
from .heuristic import caterpillar, heuristic_carving
from .oracle import binary_tree_splits, brute_force_carving_width, graph_census
from .treewidth import exact_treewidth

__all__ = [
    "CARVING_SCHEMA",
    "DEFAULT_EXACT_CAP",
    "CarvingDecomposition",
    "CarvingError",
    "SolverCapExceeded",
    "WidthBounds",
    "binary_tree_splits",
    "brute_force_carving_width",
    "caterpillar",
    "exact_carving_width",
    "exact_treewidth",
    "graph_census",
    "graph_edges",
    "heuristic_carving",
    "is_bond",
    "tw_bounds_from_cw",
    "width",
]
