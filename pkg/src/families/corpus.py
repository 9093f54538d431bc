from __future__ import annotations

import math
from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..diagram.embedding import subdivide_to_simple
from ..diagram.model import Diagram, DiagramError
from ..diagram.pd_code import parse_pd
from ..logging.init import get_logger
from ..spheres.model import SphereDecomposition
from .braids import bridge_sphere_decomposition, closed_braid, plat_diagram, torus_diagram
from .connect_sum import trefoil_connect_sum
from .pretzel import pretzel_diagram
from .spec import FamilyError, FamilyKind, FamilySpec
from .two_bridge import two_bridge_diagram

"""Named diagrams and the seeded test corpus."""

__all__ = [
    "TREFOIL_PD",
    "FIGURE_EIGHT_PD",
    "CorpusEntry",
    "build_family",
    "is_reduced",
    "random_knot_corpus",
    "standard_corpus",
]

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT_PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"

CORPUS_PRETZELS = ((-2, 3, 7), (1, 1, 1), (1, 1, 3), (-2, 3, 5))

logger = get_logger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    """A diagram plus, for template families, the sphere-decomposition to use instead of a carving."""

    name: str
    diagram: Diagram
    template: SphereDecomposition | None = None


def build_family(spec: FamilySpec) -> CorpusEntry:
    p = spec.params
    if spec.kind is FamilyKind.TORUS:
        return CorpusEntry(spec.label, torus_diagram(p[0], p[1]))
    if spec.kind is FamilyKind.PRETZEL:
        d, sd = pretzel_diagram(p[0], p[1], p[2])
        return CorpusEntry(spec.label, d, sd)
    if spec.kind is FamilyKind.SUM:
        return CorpusEntry(spec.label, trefoil_connect_sum(p[0]))
    if spec.kind is FamilyKind.TWO_BRIDGE:
        return CorpusEntry(spec.label, two_bridge_diagram(p))
    sd = bridge_sphere_decomposition(*p)
    return CorpusEntry(spec.label, plat_diagram(*p), sd)


def is_reduced(d: Diagram) -> bool:
    """No nugatory crossing: the subdivided graph is 2-connected."""
    g = nx.Graph(subdivide_to_simple(d).to_networkx())
    return nx.is_biconnected(g)


def random_knot_corpus(count: int, seed: int = 0, *, max_attempts: int = 200) -> list[CorpusEntry]:
    """Seeded closures of random 3- and 4-strand braids that are reduced knot diagrams."""
    rng = np.random.default_rng(seed)
    out: list[CorpusEntry] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > max_attempts * max(count, 1):
            raise FamilyError(f"random corpus: only {len(out)} of {count} knots found")
        strands = int(rng.integers(3, 5))
        length = int(rng.integers(4, 8))
        gens = rng.integers(1, strands, size=length)
        signs = rng.choice(np.array([-1, 1]), size=length)
        word = [int(g * s) for g, s in zip(gens, signs, strict=True)]
        try:
            d = closed_braid(word, strands, name=f"random{len(out)}{word}")
        except (FamilyError, DiagramError):
            continue
        if is_reduced(d):
            out.append(CorpusEntry(d.name, d))
    return out


def standard_corpus(seed: int = 0, random_count: int = 20) -> list[CorpusEntry]:
    entries = [
        CorpusEntry("trefoil", parse_pd(TREFOIL_PD, name="trefoil")),
        CorpusEntry("figure-eight", parse_pd(FIGURE_EIGHT_PD, name="figure-eight")),
    ]
    for p in range(2, 6):
        for q in range(2, 6):
            if p != q and math.gcd(p, q) == 1:
                entries.append(CorpusEntry(f"torus:{p},{q}", torus_diagram(p, q)))
    for params in CORPUS_PRETZELS:
        d, sd = pretzel_diagram(*params)
        entries.append(CorpusEntry(f"pretzel:{','.join(map(str, params))}", d, sd))
    for n in range(1, 6):
        entries.append(CorpusEntry(f"sum:{n}", trefoil_connect_sum(n)))
    entries.extend(random_knot_corpus(random_count, seed))
    kept = []
    for e in entries:
        if e.template is None and not is_reduced(e.diagram):
            logger.warning(f"corpus: {e.name} has a nugatory crossing; skipped")
            continue
        kept.append(e)
    return kept
