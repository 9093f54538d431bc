from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import numpy as np

from .model import Triangulation, TriangulationError

"""Meridian functional of a one-vertex solid torus.

With one vertex every edge is a loop, and the integer cocycles on oriented edge classes
(one relation ``e_ij + e_jk - e_ik = 0`` per face) form a rank-one lattice. Its generator,
up to sign, counts how often the meridian disc meets each edge.
"""

__all__ = ["relation_matrix", "meridian_weights"]

_TOL = 1e-9


def relation_matrix(
    t: Triangulation,
) -> tuple[np.ndarray, dict[tuple[int, int, int], tuple[int, int]]]:
    """Face relations over edge classes, plus ``(t, i, j) -> (class, sign)``."""
    uf = t.edge_union_find()
    roots = sorted(uf.classes())
    index = {r: k for k, r in enumerate(roots)}
    oriented: dict[tuple[int, int, int], tuple[int, int]] = {}
    for tet in range(t.size):
        for i, j in combinations(range(4), 2):
            root, parity = uf.find((tet, i, j))
            oriented[(tet, i, j)] = (index[root], -1 if parity else 1)
    rows = []
    for tet in range(t.size):
        for f in range(4):
            i, j, k = (v for v in range(4) if v != f)
            row = np.zeros(len(roots), dtype=np.int64)
            for (a, b), coeff in (((i, j), 1), ((j, k), 1), ((i, k), -1)):
                cls, sign = oriented[(tet, a, b)]
                row[cls] += coeff * sign
            rows.append(row)
    return np.array(rows, dtype=np.int64), oriented


def meridian_weights(t: Triangulation) -> dict[int, int]:
    """Absolute value of the meridian functional on every edge class."""
    if t.census().vertices != 1:
        raise TriangulationError("meridian functional needs a one-vertex triangulation")
    matrix, _ = relation_matrix(t)
    _, s, vt = np.linalg.svd(matrix.astype(float))
    rank = int(np.sum(s > _TOL))
    nullity = matrix.shape[1] - rank
    if nullity != 1:
        raise TriangulationError(f"cocycle space has dimension {nullity}, expected 1")
    vec = vt[-1]
    nonzero = np.abs(vec[np.abs(vec) > _TOL])
    scaled = [Fraction(float(x / nonzero.min())).limit_denominator(1000) for x in vec]
    denom = math.lcm(*(x.denominator for x in scaled))
    ints = [int(x * denom) for x in scaled]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if np.any(matrix @ np.array(ints, dtype=np.int64)):
        raise TriangulationError("rounded cocycle does not satisfy the face relations")
    return {cls: abs(x) for cls, x in enumerate(ints)}
