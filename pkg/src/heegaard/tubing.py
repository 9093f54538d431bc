from __future__ import annotations

from ..logging.init import get_logger
from ..spheres.model import Component, ComponentKind, SphereDecomposition, Strand
from .model import (
    BodyKind,
    CompressionBody,
    HeegaardError,
    MultipleHeegaardSplitting,
    StrandType,
    ThickSphere,
)

"""Thick spheres for every component of a sphere-decomposition.

Balls get a parallel push-off of their boundary. In a pants with boundary spheres U, V, W a
strand joining U to V is chosen and U is tubed to V along it; the resulting sphere meets the
knot u + v times.
"""

__all__ = ["choose_tube_strand", "classify_compression_body", "tube"]

logger = get_logger(__name__)


def choose_tube_strand(
    component: Component, sd: SphereDecomposition
) -> tuple[Strand, tuple[int, int]]:
    """The cross strand whose sphere pair has the least total weight (then lowest ids)."""
    weight = {s.id: s.weight for s in sd.spheres}
    best: tuple[tuple[int, int, int], Strand] | None = None
    for st in component.strands:
        if not st.joins_distinct:
            continue
        a, b = sorted(st.ends)
        key = (weight[a] + weight[b], a, b)
        if best is None or key < best[0]:
            best = (key, st)
    if best is None:
        raise HeegaardError(
            f"pants component {component.node} has no strand joining two distinct spheres"
        )
    (_, a, b), strand = best
    return strand, (a, b)


def classify_compression_body(body: CompressionBody) -> tuple[BodyKind, tuple[StrandType, ...]]:
    """Check the body's strand counts against the rules of its kind."""
    ok: bool
    if body.kind is BodyKind.BALL:
        ok = not body.minus and body.verticals == 0 and body.bridges >= 1
    elif body.kind is BodyKind.SHELL:
        ok = len(body.minus) == 1 and body.verticals == body.minus_weights[0]
    else:
        ok = (
            len(body.minus) == 2
            and body.bridges == 0
            and body.verticals == sum(body.minus_weights)
        )
    if ok:
        ok = body.plus_weight == body.verticals + 2 * body.bridges
    if not ok:
        raise HeegaardError(
            f"compression body {body.id} ({body.kind.value}, {body.case}) is not trivial: "
            f"+{body.plus_weight} -{list(body.minus_weights)} "
            f"verticals={body.verticals} bridges={body.bridges}"
        )
    return body.kind, body.strand_types


def tube(sd: SphereDecomposition) -> MultipleHeegaardSplitting:
    weight = {s.id: s.weight for s in sd.spheres}
    thick: list[ThickSphere] = []
    bodies: list[CompressionBody] = []

    def add_body(kind: BodyKind, plus: ThickSphere, minus: tuple[int, ...], verticals: int,
                 bridges: int, case: str) -> None:
        body = CompressionBody(
            id=len(bodies),
            kind=kind,
            plus=plus.id,
            plus_weight=plus.weight,
            minus=minus,
            minus_weights=tuple(weight[m] for m in minus),
            verticals=verticals,
            bridges=bridges,
            case=case,
        )
        classify_compression_body(body)
        bodies.append(body)

    for comp in sd.components:
        if comp.kind is ComponentKind.BALL:
            (s,) = comp.boundary
            push = ThickSphere(id=len(thick), component=comp.node, weight=weight[s])
            thick.append(push)
            add_body(BodyKind.BALL, push, (), 0, comp.classification.bridges, "ball-bridges")
            add_body(BodyKind.SHELL, push, (s,), weight[s], 0, "shell-verticals")
            continue

        _, (u, v) = choose_tube_strand(comp, sd)
        (w,) = [s for s in comp.boundary if s not in (u, v)]
        counts = {"cross_w": 0, "other": 0}
        for st in comp.strands:
            ends = set(st.ends)
            if ends == {w}:
                raise HeegaardError(f"pants component {comp.node}: strand with both ends on W")
            counts["cross_w" if w in ends else "other"] += 1
        tubed = ThickSphere(
            id=len(thick), component=comp.node, weight=weight[u] + weight[v], tube=(u, v)
        )
        thick.append(tubed)
        add_body(BodyKind.SHELL, tubed, (w,), counts["cross_w"], counts["other"], "shell-tubed")
        add_body(BodyKind.PANTS, tubed, (u, v), weight[u] + weight[v], 0, "pants-verticals")
        logger.debug(f"tube: component {comp.node} tubes S{u} to S{v} (weight {tubed.weight})")

    mhs = MultipleHeegaardSplitting(spheres=sd, thick=tuple(thick), bodies=tuple(bodies))
    if mhs.structure_problems:
        raise HeegaardError("; ".join(mhs.structure_problems))
    return mhs
