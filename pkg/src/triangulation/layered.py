from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from ..logging.init import get_logger
from .homology import meridian_weights
from .model import (
    LabelledFace,
    ParityUnionFind,
    Perm,
    Triangulation,
    TriangulationError,
    perm_sign,
)

"""Layered solid tori.

The base is one tetrahedron with face 3 folded onto face 0; its meridian meets the three
boundary edges (1, 2, 3) times. Each further tetrahedron is layered on one boundary edge,
which replaces that edge by one whose weight is the sum of the other two (a Farey step).
The sequence of layerings is the subtractive Euclidean algorithm for ``p/u`` run backwards.
"""

__all__ = [
    "SlopeTriple",
    "normalize_slope",
    "weight_path",
    "layered_solid_torus",
    "slope_problems",
]

logger = get_logger(__name__)

_BASE_FOLD: Perm = (1, 2, 3, 0)


@dataclass(frozen=True)
class SlopeTriple:
    """Crossings of a boundary curve with the edges labelled (a, b, c)."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z) < 0:
            raise TriangulationError(f"negative slope weight in {self.as_tuple()}")
        if self.z != self.x + self.y:
            raise TriangulationError(f"slope triple {self.as_tuple()} has z != x + y")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    @property
    def primitive(self) -> bool:
        return math.gcd(self.x, self.y) == 1

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})"


def normalize_slope(p: int, u: int) -> tuple[int, int]:
    if p < 2:
        raise TriangulationError(f"layered solid torus needs p >= 2, got {p}")
    if math.gcd(p, u) != 1:
        raise TriangulationError(f"slope {p}/{u} is not primitive: gcd {math.gcd(p, u)}")
    return p, u % p


def weight_path(p: int, u: int) -> list[frozenset[int]]:
    """Boundary weight sets after each layering, ending at ``{p, u, p + u}``."""
    a, b = normalize_slope(p, u)
    path = []
    while {a, b} != {1, 2}:
        path.append(frozenset((a, b, a + b)))
        a, b = abs(a - b), min(a, b)
    path.reverse()
    return path


def _oriented_pair(
    uf: ParityUnionFind, t: int, pair: tuple[int, int]
) -> tuple[tuple[int, int], object]:
    i, j = pair
    root, parity = uf.find((t, i, j))
    return ((i, j) if parity == 0 else (j, i)), root


def _layer(
    tri: Triangulation,
    faces: tuple[tuple[int, int], tuple[int, int]],
    weights: tuple[dict[tuple[int, int], int], dict[tuple[int, int], int]],
    flip: int,
) -> tuple[tuple[tuple[int, int], tuple[int, int]], tuple[dict, dict]]:
    (t1, f1), (t2, f2) = faces
    w_f, w_g = weights
    uf = tri.edge_union_find()
    (pair_f,) = [p for p, w in w_f.items() if w == flip]
    (pair_g,) = [p for p, w in w_g.items() if w == flip]
    (i, j), root_f = _oriented_pair(uf, t1, pair_f)
    (i2, j2), root_g = _oriented_pair(uf, t2, pair_g)
    if root_f != root_g:
        raise TriangulationError("boundary faces do not share the edge being layered on")
    (k,) = [v for v in range(4) if v not in (i, j, f1)]
    (k2,) = [v for v in range(4) if v not in (i2, j2, f2)]
    sigma_f: Perm = (i, j, k, f1)
    sigma_g: Perm = (i2, j2, f2, k2)
    if perm_sign(sigma_f) == 1:
        sigma_f = (j, i, k, f1)
        sigma_g = (j2, i2, f2, k2)
    if perm_sign(sigma_g) == 1:
        raise TriangulationError("layering would reverse orientation")
    tau = tri.add_tet()
    tri.glue(tau, 3, t1, sigma_f)
    tri.glue(tau, 2, t2, sigma_g)

    def old_f(a: int, b: int) -> int:
        x, y = sigma_f[a], sigma_f[b]
        return w_f[(min(x, y), max(x, y))]

    def old_g(a: int, b: int) -> int:
        x, y = sigma_g[a], sigma_g[b]
        return w_g[(min(x, y), max(x, y))]

    others = sorted(w for w in w_f.values() if w != flip)
    new = sum(others)
    face0 = {(1, 2): old_f(1, 2), (1, 3): old_g(1, 3), (2, 3): new}
    face1 = {(0, 2): old_f(0, 2), (0, 3): old_g(0, 3), (2, 3): new}
    for face in (face0, face1):
        if len(set(face.values())) != 3:
            raise TriangulationError(f"layered face repeats a boundary edge: {face}")
    return ((tau, 0), (tau, 1)), (face0, face1)


def layered_solid_torus(p: int, u: int) -> tuple[Triangulation, SlopeTriple]:
    """One-vertex solid torus whose meridian meets edges (a, b, c) exactly (p, u, p+u) times."""
    p, u = normalize_slope(p, u)
    tri = Triangulation(name=f"LST({p},{u})")
    base = tri.add_tet()
    tri.glue(base, 3, base, _BASE_FOLD)
    faces = ((base, 1), (base, 2))
    weights: tuple[dict, dict] = (
        {(0, 2): 2, (0, 3): 3, (2, 3): 1},
        {(0, 1): 1, (0, 3): 3, (1, 3): 2},
    )
    for target in weight_path(p, u):
        current = set(weights[0].values())
        (flip,) = current - target
        faces, weights = _layer(tri, faces, weights, flip)
    names = {p: "a", u: "b", p + u: "c"}
    labelled = tuple(
        LabelledFace(t, f, tuple(sorted((a, b, names[w]) for (a, b), w in ws.items())))
        for (t, f), ws in zip(faces, weights, strict=True)
    )
    tri.boundary_tori["boundary"] = (labelled[0], labelled[1])
    logger.debug(f"layered solid torus ({p},{u}): {tri.size} tetrahedra")
    return tri, SlopeTriple(p, u, p + u)


def slope_problems(tri: Triangulation, triple: SlopeTriple) -> list[str]:
    """Compare the labelled boundary against the meridian functional computed from homology."""
    problems = []
    if not triple.primitive:
        problems.append(f"slope triple {triple} is not primitive")
    try:
        functional = meridian_weights(tri)
    except TriangulationError as e:
        return [*problems, str(e)]
    classes = tri.edge_classes()
    expected = {"a": triple.x, "b": triple.y, "c": triple.z}
    for face in tri.boundary_tori.get("boundary", ()):
        for i, j in combinations((v for v in range(4) if v != face.face), 2):
            label = face.label_of(i, j)
            got = functional[classes[(face.tet, i, j)]]
            if got != expected[label]:
                problems.append(
                    f"edge {label} of face ({face.tet},{face.face}): meridian meets it "
                    f"{got} times, expected {expected[label]}"
                )
    return problems
