from __future__ import annotations

from collections.abc import Sequence

from ..carving.decomposition import CarvingDecomposition, Nested
from ..diagram.embedding import SimpleDiagramGraph, subdivide_to_simple
from ..diagram.model import Diagram
from ..realize.curves import realize
from ..realize.validate import validate
from .decompose import spheres_from_blocks, spheres_from_carving
from .model import SphereDecomposition, SphereDecompositionError

"""Sphere-decompositions read off a block structure instead of an optimal carving."""

__all__ = ["simple_vertex_blocks", "block_sphere_decomposition", "plat_sphere_decomposition"]


def simple_vertex_blocks(sg: SimpleDiagramGraph, vertex_blocks: Sequence[int]) -> list[int]:
    """Extend a block id per diagram vertex to the added subdivision vertices.

    A subdivision vertex joins its edge's block when both diagram endpoints share one, and the
    block of the lower-index endpoint otherwise.
    """
    src = sg.source.graph
    label_edge = sg.source.label_index
    out: list[int] = []
    for v, origin in enumerate(sg.vertex_origin):
        if origin is not None:
            out.append(vertex_blocks[origin])
            continue
        label = sg.edge_origin[sg.graph.rotation[v][0]]
        a, b = src.ends[label_edge[label]]
        same = vertex_blocks[a] == vertex_blocks[b]
        out.append(vertex_blocks[a] if same else vertex_blocks[min(a, b)])
    return out


def block_sphere_decomposition(
    d: Diagram,
    vertex_blocks: Sequence[int],
    nested: Nested,
    *,
    realize_curves: bool = True,
    label: str = "",
) -> SphereDecomposition:
    """Spheres around unions of blocks given by the rooted binary tree ``nested``."""
    if len(vertex_blocks) != len(d.vertices):
        raise SphereDecompositionError("one block id per diagram vertex is required")
    sg = subdivide_to_simple(d)
    blocks = simple_vertex_blocks(sg, vertex_blocks)
    n_blocks = max(blocks) + 1
    leaf_blocks = [[v for v, b in enumerate(blocks) if b == i] for i in range(n_blocks)]
    if any(not lb for lb in leaf_blocks):
        raise SphereDecompositionError("block ids must be contiguous from 0")
    dec = CarvingDecomposition.from_nested(nested, sg.graph.ends, sg.vertex_count, leaf_blocks)
    if not realize_curves:
        return spheres_from_blocks(sg, dec, label=label)
    fam = realize(sg, dec)
    report = validate(fam)
    if not report.ok:
        first = report.failures()[0]
        raise SphereDecompositionError(f"block curves invalid: {first.name} {first.witness}")
    return spheres_from_carving(sg, fam, label=label)


def plat_sphere_decomposition(d: Diagram, *, label: str = "") -> SphereDecomposition:
    """Single bridge sphere just above the bottom caps of a plat diagram."""
    if not d.caps or d.ranks is None:
        raise SphereDecompositionError("plat template needs cap markers and sweep ranks")
    ranks = d.ranks
    floor = min(ranks[c] for c in d.caps)
    bottom = {c for c in d.caps if ranks[c] == floor}
    vertex_blocks = [0 if v in bottom else 1 for v in range(len(d.vertices))]
    # the bridge sphere is not a simple dual cycle (it runs through the outer face
    # between every pair of caps), so no curve family is realized for it
    return block_sphere_decomposition(d, vertex_blocks, (0, 1), realize_curves=False, label=label)
