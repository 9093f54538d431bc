from __future__ import annotations

import time

import numpy as np
import pytest

from src.carving.exact import exact_carving_width
from src.carving.heuristic import heuristic_carving
from src.diagram.embedding import subdivide_to_simple
from src.families.braids import torus_diagram

"""Exact carving solver timings on torus knots of growing size.

p95 of repeated solves must stay within budget; the heuristic must never beat the exact width.
"""

REPEATS = 5


@pytest.mark.smoke
@pytest.mark.parametrize(("p", "q", "budget"), [(3, 2, 0.5), (5, 2, 5.0)])
def test_exact_solver_p95(p: int, q: int, budget: float):
    sg = subdivide_to_simple(torus_diagram(p, q))
    timings = []
    width = None
    for _ in range(REPEATS):
        start = time.perf_counter()
        width, _ = exact_carving_width(sg, bond_only=True)
        timings.append(time.perf_counter() - start)
    p95 = float(np.percentile(timings, 95))
    assert p95 <= budget, f"T({p},{q}) p95 {p95:.3f}s > {budget}s"
    assert heuristic_carving(sg).width >= width
