from __future__ import annotations

import re
from collections.abc import Iterable, Sequence

from .embedding import knot_traversal, strand_components, validate_diagram
from .model import Diagram, DiagramError, Vertex

"""PD-code ingestion and emission.

``X[a,b,c,d]`` is a crossing listed counterclockwise from the incoming under strand;
``P[a,b]`` is a degree-2 point on a strand (incoming label first). An optional ``PD[...]``
wrapper and comma separators are accepted. Nested integer lists are accepted as well.
"""

__all__ = ["parse_pd", "emit_pd", "diagram_from_tuples"]

_TOKEN = re.compile(r"([XP])\s*\[([^\[\]]*)\]")
_FILLER = re.compile(r"^[\s,;]*(PD\s*\[)?[\s,;\]]*$")


def _ints(body: str, token: str) -> tuple[int, ...]:
    parts = [p.strip() for p in body.split(",") if p.strip()]
    try:
        return tuple(int(p) for p in parts)
    except ValueError as e:
        raise DiagramError(f"non-integer edge label in {token}") from e


def diagram_from_tuples(
    tuples: Iterable[Sequence[int]], *, name: str = "", validate: bool = True
) -> Diagram:
    vertices = []
    for i, t in enumerate(tuples):
        slots = tuple(int(x) for x in t)
        if len(slots) not in (2, 4):
            raise DiagramError(f"vertex {i}: tuple arity {len(slots)} (expected 4 or 2)")
        vertices.append(Vertex(slots))
    d = Diagram(tuple(vertices), name=name)
    return validate_diagram(d) if validate else d


def parse_pd(text: str | Iterable[Sequence[int]], *, name: str = "") -> Diagram:
    """Parse and validate a PD code."""
    if not isinstance(text, str):
        return diagram_from_tuples(text, name=name)
    tuples: list[tuple[int, ...]] = []
    for m in _TOKEN.finditer(text):
        kind, body = m.group(1), m.group(2)
        slots = _ints(body, m.group(0))
        want = 4 if kind == "X" else 2
        if len(slots) != want:
            raise DiagramError(
                f"{m.group(0)}: tuple arity {len(slots)} (expected {want} for {kind})"
            )
        tuples.append(slots)
    rest = _TOKEN.sub(" ", text)
    if not _FILLER.match(rest):
        raise DiagramError(f"unrecognised PD text: {rest.strip()[:40]!r}")
    if not tuples:
        raise DiagramError("PD code has no X[...] or P[...] tuples")
    return diagram_from_tuples(tuples, name=name)


def emit_pd(d: Diagram) -> str:
    """Canonical PD text: labels 1..E along the strand from vertex 0."""
    g = d.graph
    if len(strand_components(g)) != 1:
        raise DiagramError("emit_pd needs a single-component diagram")
    walk = knot_traversal(g)
    new_label = [0] * g.edge_count
    for i, dart in enumerate(walk):
        new_label[g.dart_edge[dart]] = i + 1
    # slot through which each vertex is entered on its under (or only) strand
    enter = [-1] * g.vertex_count
    for dart in walk:
        arrive = g.twin[dart]
        v, s = g.dart_vertex[arrive], g.slot(arrive)
        if g.degree(v) == 2 or s % 2 == 0:
            enter[v] = s
    tokens = []
    for v, slots in enumerate(g.rotation):
        j = enter[v]
        rotated = slots[j:] + slots[:j]
        labels = ",".join(str(new_label[e]) for e in rotated)
        tokens.append(f"{'X' if len(slots) == 4 else 'P'}[{labels}]")
    return " ".join(tokens)
