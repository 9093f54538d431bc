from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..logging.init import get_logger
from .builder import Key, KeyedTriangulation, build_from_keys
from .model import LabelledFace, Triangulation, TriangulationError
from .subdivision import Point, derived_near, restrict

"""The product block T x I and the block with the middle edge ``a`` drilled out.

The torus is the square XYZW cut along the diagonal XZ: triangles XYZ and XZW, edge ``a``
is XY ~ WZ, ``b`` is YZ ~ XW and ``c`` is XZ. Each triangle times an interval is a prism
split into three tetrahedra by the staircase rule. Vertex keys are ``(letter, level)``.
"""

__all__ = [
    "EDGE_LABELS",
    "prism_tets",
    "stacked_prisms",
    "prism_block",
    "drill",
    "drilled_block",
]

logger = get_logger(__name__)

EDGE_LABELS: dict[frozenset[str], str] = {
    frozenset("XY"): "a",
    frozenset("WZ"): "a",
    frozenset("YZ"): "b",
    frozenset("XW"): "b",
    frozenset("XZ"): "c",
}

_TRIANGLES = (("X", "Y", "Z"), ("X", "W", "Z"))


def prism_tets(level: int) -> list[tuple[Key, Key, Key, Key]]:
    lo, hi = level, level + 1
    out: list[tuple[Key, Key, Key, Key]] = []
    for p, q, r in _TRIANGLES:
        out.append(((p, lo), (q, lo), (r, lo), (r, hi)))
        out.append(((p, lo), (q, lo), (q, hi), (r, hi)))
        out.append(((p, lo), (p, hi), (q, hi), (r, hi)))
    return out


def _side_gluings(level: int) -> list[tuple[frozenset[Key], dict[Key, Key]]]:
    lo, hi = level, level + 1
    to_wz = {(x, h): (y, h) for x, y in (("X", "W"), ("Y", "Z")) for h in (lo, hi)}
    to_xw = {(x, h): (y, h) for x, y in (("Y", "X"), ("Z", "W")) for h in (lo, hi)}
    return [
        (frozenset({("X", lo), ("Y", lo), ("Y", hi)}), to_wz),
        (frozenset({("X", lo), ("X", hi), ("Y", hi)}), to_wz),
        (frozenset({("Y", lo), ("Z", lo), ("Z", hi)}), to_xw),
        (frozenset({("Y", lo), ("Y", hi), ("Z", hi)}), to_xw),
    ]


def _labelled(kt: KeyedTriangulation, key_set: frozenset[Key]) -> LabelledFace:
    t, f = kt.find_face(key_set, free_only=False)
    if kt.triangulation.adjacent(t, f) is not None:
        raise TriangulationError(f"face {sorted(map(str, key_set))} is not on the boundary")
    edges = []
    for i, j in combinations((v for v in range(4) if v != f), 2):
        letters = frozenset((kt.keys[t][i][0], kt.keys[t][j][0]))  # type: ignore[index]
        edges.append((i, j, EDGE_LABELS[letters]))
    return LabelledFace(t, f, tuple(edges))


def _label_level(kt: KeyedTriangulation, level: int) -> tuple[LabelledFace, LabelledFace]:
    first, second = (frozenset((x, level) for x in tri) for tri in _TRIANGLES)
    return _labelled(kt, first), _labelled(kt, second)


def stacked_prisms(layers: int = 1, name: str = "") -> KeyedTriangulation:
    """``layers`` copies of T x I stacked on top of each other (levels ``0..layers``)."""
    if layers < 1:
        raise TriangulationError(f"need at least one layer, got {layers}")
    tets = [tet for level in range(layers) for tet in prism_tets(level)]
    explicit = [g for level in range(layers) for g in _side_gluings(level)]
    kt = build_from_keys(tets, explicit, name=name or f"P^{layers}")
    kt.triangulation.boundary_tori["lower"] = _label_level(kt, 0)
    kt.triangulation.boundary_tori["upper"] = _label_level(kt, layers)
    return kt


def prism_block() -> Triangulation:
    """T x [-1, 1] with standard one-vertex tori labelled (a, b, c) on both ends."""
    return stacked_prisms(1, name="P").triangulation


def _original_key(kt: KeyedTriangulation, t: int, point: Point) -> Key | None:
    if len(point) != 1:
        return None
    (v,) = point
    return kt.keys[t][v]


def drill(block: KeyedTriangulation) -> KeyedTriangulation:
    """Remove an open regular neighbourhood of the middle-level edge ``a`` of a two-layer stack.

    Two derived subdivisions near the edge, then every tetrahedron meeting the twice
    subdivided edge is dropped.
    """
    base = block.triangulation
    if base.drilled:
        raise TriangulationError("block is already drilled")
    middle = ("X", 1), ("Y", 1)
    hosts = [t for t, keys in enumerate(block.keys) if middle[0] in keys and middle[1] in keys]
    if not hosts:
        raise TriangulationError("block has no middle edge XY at level 1")
    t0 = hosts[0]
    i0, j0 = sorted(block.keys[t0].index(k) for k in middle)
    edges = base.edge_classes()
    verts = base.vertex_classes()
    drilled_edge = edges[(t0, i0, j0)]
    middle_vertex = verts[(t0, i0)]

    def on_edge(t: int, point: Point) -> bool:
        if len(point) == 1:
            (v,) = point
            return verts[(t, v)] == middle_vertex
        if len(point) == 2:
            i, j = sorted(point)
            return edges[(t, i, j)] == drilled_edge
        return False

    first = derived_near(base, {middle_vertex})
    first_verts = first.triangulation.vertex_classes()
    marked = {
        first_verts[(n, x)]
        for n, pts in enumerate(first.points)
        for x in range(4)
        if on_edge(first.origin[n], pts[x])
    }
    second = derived_near(first.triangulation, marked)

    def on_subdivided_edge(n: int, point: Point) -> bool:
        parent = second.origin[n]
        old = first.origin[parent]
        outer = [first.points[parent][x] for x in sorted(point)]
        if len(outer) == 1:
            return on_edge(old, outer[0])
        if len(outer) == 2:
            small, big = sorted(outer, key=len)
            return (
                len(small) == 1 and len(big) == 2 and small < big
                and on_edge(old, small) and on_edge(old, big)
            )
        return False

    keep = [
        n for n, pts in enumerate(second.points)
        if not any(on_subdivided_edge(n, p) for p in pts)
    ]
    tri, index = restrict(second.triangulation, keep)
    keys: list[tuple[Key, ...]] = [()] * tri.size
    for n, new in index.items():
        parent = second.origin[n]
        old = first.origin[parent]
        row = []
        for point in second.points[n]:
            key = None
            if len(point) == 1:
                (x,) = point
                key = _original_key(block, old, first.points[parent][x])
            row.append(key)
        keys[new] = tuple(row)
    tri.name = f"{base.name}-drilled"
    tri.drilled = True
    out = KeyedTriangulation(tri, keys)
    levels = sorted({k[1] for row in block.keys for k in row})  # type: ignore[index]
    tri.boundary_tori["lower"] = _label_level(out, levels[0])
    tri.boundary_tori["upper"] = _label_level(out, levels[-1])
    logger.debug(f"drilled block: {base.size} -> {tri.size} tetrahedra")
    return out


@lru_cache(maxsize=1)
def _drilled_block() -> Triangulation:
    return drill(stacked_prisms(2, name="Q")).triangulation


def drilled_block() -> Triangulation:
    """Q = P minus a neighbourhood of ``a x {0}``: lower, upper and drilled torus boundaries."""
    return _drilled_block().copy()
