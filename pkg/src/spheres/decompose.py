from __future__ import annotations

from ..carving.decomposition import CarvingDecomposition
from ..diagram.embedding import SimpleDiagramGraph, knot_traversal
from ..logging.init import get_logger
from ..realize.curves import CurveFamily
from .classify import classify_component
from .model import Component, Sphere, SphereDecomposition, SphereDecompositionError, Strand

"""Sphere-decompositions from carvings: cap each curve off above and below the diagram."""

__all__ = ["trace_strands", "spheres_from_blocks", "spheres_from_carving", "check_census"]

logger = get_logger(__name__)


def _across(dec: CarvingDecomposition, tree_edge: int, node: int) -> int:
    return dec.parent[tree_edge] if node == tree_edge else tree_edge


def trace_strands(
    sg: SimpleDiagramGraph, dec: CarvingDecomposition
) -> dict[int, list[Strand]]:
    """Cut the knot at every sphere crossing; group the arcs by component (tree node)."""
    g = sg.graph
    sphere_of = {t: i for i, t in enumerate(dec.tree_edges)}
    if not sphere_of:
        raise SphereDecompositionError("a single-leaf carving has no spheres")
    walk = knot_traversal(g)
    # pieces[i] lies between sphere crossings cuts[i-1] and cuts[i]
    pieces: list[tuple[int, list[int]]] = [(dec.leaf_of_vertex(g.dart_vertex[walk[0]]), [])]
    cuts: list[int] = []
    for d in walk:
        u = g.dart_vertex[d]
        w = g.dart_vertex[g.twin[d]]
        node = dec.leaf_of_vertex(u)
        pieces[-1][1].append(u)
        for t in dec.path(node, dec.leaf_of_vertex(w)):
            cuts.append(sphere_of[t])
            node = _across(dec, t, node)
            pieces.append((node, []))
    if not cuts:
        raise SphereDecompositionError("knot never meets a sphere")
    # the knot is closed: the last piece continues into the first one
    last_node, last_vertices = pieces.pop()
    first_node, first_vertices = pieces[0]
    if last_node != first_node:
        raise SphereDecompositionError("strand tracing did not close up")
    pieces[0] = (first_node, last_vertices + first_vertices)
    out: dict[int, list[Strand]] = {n: [] for n in range(dec.node_count)}
    for i, (node, vertices) in enumerate(pieces):
        entry = cuts[i - 1]
        exit_ = cuts[i]
        out[node].append(Strand(component=node, ends=(entry, exit_), vertices=tuple(vertices)))
    return out


def spheres_from_blocks(
    sg: SimpleDiagramGraph,
    dec: CarvingDecomposition,
    *,
    curves: CurveFamily | None = None,
    label: str = "",
) -> SphereDecomposition:
    """Sphere-decomposition whose spheres are the tree edges of ``dec``."""
    if dec.vertex_count != sg.vertex_count:
        raise SphereDecompositionError("carving does not cover the diagram graph")
    strands = trace_strands(sg, dec)
    sphere_of = {t: i for i, t in enumerate(dec.tree_edges)}
    spheres = tuple(
        Sphere(id=i, tree_edge=t, weight=len(dec.middle(t)), sides=(t, dec.parent[t]))
        for t, i in sphere_of.items()
    )
    components = []
    for node in range(dec.node_count):
        boundary = [sphere_of[c] for c in dec.children[node]]
        if dec.parent[node] >= 0:
            boundary.append(sphere_of[node])
        vertices = dec.leaf_blocks[node] if node < dec.leaf_count else ()
        cls = classify_component(sg, boundary, vertices, strands[node])
        components.append(
            Component(
                node=node,
                boundary=tuple(sorted(boundary)),
                vertices=tuple(vertices),
                strands=tuple(strands[node]),
                classification=cls,
            )
        )
    sd = SphereDecomposition(
        graph=sg,
        decomposition=dec,
        spheres=spheres,
        components=tuple(components),
        curves=curves,
        label=label,
    )
    odd = [s.id for s in spheres if s.weight % 2]
    if odd:
        raise SphereDecompositionError(f"spheres with odd weight: {odd}")
    logger.debug(f"spheres: {label or 'diagram'} width={list(sd.width_list())}")
    return sd


def spheres_from_carving(
    sg: SimpleDiagramGraph, fam: CurveFamily, *, label: str = ""
) -> SphereDecomposition:
    """One sphere per realized curve, capped off above and below the diagram sphere."""
    if fam.graph != sg.graph:
        raise SphereDecompositionError("curve family was realized on a different graph")
    dec = fam.decomposition
    for curve in fam.curves:
        if len(curve.crossings) != len(dec.middle(curve.tree_edge)):
            raise SphereDecompositionError(
                f"curve for tree edge {curve.tree_edge} does not realize its middle set"
            )
    return spheres_from_blocks(sg, dec, curves=fam, label=label)


def check_census(sd: SphereDecomposition) -> list[str]:
    """Component counts a binary carving tree forces; returns the mismatches."""
    census = sd.census()
    n_leaves = census["leaves"]
    expected = {"balls": n_leaves, "pants": n_leaves - 2, "spheres": 2 * n_leaves - 3}
    return [
        f"{key}: expected {want}, found {census[key]}"
        for key, want in expected.items()
        if census[key] != want
    ]
