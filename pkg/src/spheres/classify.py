from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

import networkx as nx

from ..diagram.embedding import SimpleDiagramGraph
from ..diagram.model import VertexKind
from ..logging.init import get_logger
from .model import (
    BallCertificate,
    ComponentClassification,
    ComponentKind,
    InessentialStrandError,
    SphereDecompositionError,
    Strand,
)

"""Ball and pants certificates for complementary components."""

__all__ = ["classify_component", "classify_ball", "classify_pants", "PANTS_LABELS"]

PANTS_LABELS = ("U", "V", "W")

logger = get_logger(__name__)


def _twist_chain(sg: SimpleDiagramGraph, vertices: Sequence[int], strands: Sequence[Strand]) -> bool:
    crossings = [v for v in vertices if sg.kinds[v] is VertexKind.CROSSING]
    if len(crossings) < 2 or len(strands) != 2:
        return False
    chain = nx.MultiGraph()
    chain.add_nodes_from(crossings)
    for st in strands:
        on_strand = [v for v in st.vertices if sg.kinds[v] is VertexKind.CROSSING]
        for a, b in zip(on_strand, on_strand[1:]):
            chain.add_edge(a, b)
    simple = nx.Graph(chain)
    if not nx.is_connected(simple) or simple.number_of_edges() != len(crossings) - 1:
        return False
    if any(d > 2 for _, d in simple.degree()):
        return False
    return all(chain.number_of_edges(a, b) == 2 for a, b in simple.edges)


def _plat_half(sg: SimpleDiagramGraph, vertices: Sequence[int], strands: Sequence[Strand]) -> bool:
    caps = [v for v in vertices if v in sg.caps]
    if sg.ranks is None or not caps or len(caps) != len(strands):
        return False
    ranks = sg.ranks
    for st in strands:
        on_caps = [i for i, v in enumerate(st.vertices) if v in sg.caps]
        if len(on_caps) != 1:
            return False
        i = on_caps[0]
        left = [ranks[v] for v in reversed(st.vertices[: i + 1])]
        right = [ranks[v] for v in st.vertices[i:]]
        rising = all(a < b for arm in (left, right) for a, b in zip(arm, arm[1:]))
        falling = all(a > b for arm in (left, right) for a, b in zip(arm, arm[1:]))
        if not (rising or falling):
            return False
    return True


def classify_ball(
    sg: SimpleDiagramGraph, vertices: Sequence[int], strands: Sequence[Strand]
) -> ComponentClassification:
    """Trivial-tangle certificate for a leaf component."""
    kinds = Counter(sg.kinds[v] for v in vertices)
    crossings = kinds[VertexKind.CROSSING]
    if any(v in sg.caps for v in vertices):
        if _plat_half(sg, vertices, strands):
            return ComponentClassification(
                ComponentKind.BALL, BallCertificate.PLAT_HALF.value, bridges=len(strands)
            )
    elif crossings == 0 and len(strands) == 1:
        return ComponentClassification(
            ComponentKind.BALL, BallCertificate.SUBDIVISION.value, bridges=1
        )
    elif crossings == 1 and len(strands) == 2:
        return ComponentClassification(
            ComponentKind.BALL, BallCertificate.SINGLE_CROSSING.value, bridges=2
        )
    elif _twist_chain(sg, vertices, strands):
        return ComponentClassification(
            ComponentKind.BALL, BallCertificate.TWIST_REGION.value, bridges=2
        )
    raise SphereDecompositionError(
        f"ball with {crossings} crossings and {len(strands)} strands has no trivial-tangle "
        "certificate"
    )


def classify_pants(
    boundary: Sequence[int], strands: Sequence[Strand]
) -> ComponentClassification:
    """Flat-tangle certificate for an internal component bounded by three spheres.

    Pants come from internal carving-tree nodes and hold no diagram vertices, so each strand is
    the piece of one edge arc between two consecutive curves on its tree path: it always joins
    two distinct spheres and is essential. A strand with both ends on one sphere means the
    curves were not realized laminarly and is rejected.
    """
    if len(boundary) != 3:
        raise SphereDecompositionError(
            f"internal component bounded by {len(boundary)} spheres (expected 3)"
        )
    label = {s: PANTS_LABELS[i] for i, s in enumerate(sorted(boundary))}
    types = []
    essential = []
    for st in strands:
        a, b = sorted((label[st.ends[0]], label[st.ends[1]]))
        types.append(a + b)
        if not st.joins_distinct:
            raise InessentialStrandError(
                f"pants strand {a}{b} has both ends on sphere {st.ends[0]}"
            )
        essential.append(True)
    return ComponentClassification(
        ComponentKind.PANTS,
        "flat",
        strand_types=tuple(types),
        essential=tuple(essential),
    )


def classify_component(
    sg: SimpleDiagramGraph,
    boundary: Sequence[int],
    vertices: Sequence[int],
    strands: Sequence[Strand],
) -> ComponentClassification:
    if len(boundary) == 1:
        return classify_ball(sg, vertices, strands)
    if vertices:
        raise SphereDecompositionError(
            f"internal component bounded by {len(boundary)} spheres holds diagram vertices"
        )
    return classify_pants(boundary, strands)
