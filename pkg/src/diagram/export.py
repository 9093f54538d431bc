from __future__ import annotations

from typing import Any

import networkx as nx

from .embedding import SimpleDiagramGraph, dual_graph, validate_diagram
from .model import Diagram, DiagramError, EmbeddedGraph, Vertex

"""JSON and DOT serialization of diagrams."""

__all__ = ["DIAGRAM_SCHEMA", "diagram_to_dict", "diagram_from_dict", "graph_to_dot", "dual_to_dot"]

DIAGRAM_SCHEMA = "diagram/v1"


def diagram_to_dict(d: Diagram) -> dict[str, Any]:
    g = d.graph
    return {
        "schema": DIAGRAM_SCHEMA,
        "name": d.name,
        "vertices": [list(v.slots) for v in d.vertices],
        "kinds": [k.value for k in d.kinds],
        "ranks": list(d.ranks) if d.ranks is not None else None,
        "caps": sorted(d.caps),
        "crossings": d.crossing_count,
        "edges": d.edge_count,
        "faces": g.face_count,
    }


def diagram_from_dict(data: dict[str, Any]) -> Diagram:
    if data.get("schema") != DIAGRAM_SCHEMA:
        raise DiagramError(f"unsupported diagram schema: {data.get('schema')!r}")
    ranks = data.get("ranks")
    d = Diagram(
        tuple(Vertex(tuple(int(x) for x in slots)) for slots in data["vertices"]),
        ranks=tuple(float(r) for r in ranks) if ranks is not None else None,
        caps=frozenset(int(c) for c in data.get("caps", [])),
        name=str(data.get("name", "")),
    )
    return validate_diagram(d)


def _labelled(g: EmbeddedGraph, edge_names: tuple[int, ...] | None = None) -> nx.MultiGraph:
    out = nx.MultiGraph()
    for v, slots in enumerate(g.rotation):
        out.add_node(v, label=str(v), degree=len(slots))
    for e, (u, v) in enumerate(g.ends):
        name = edge_names[e] if edge_names is not None else e
        out.add_edge(u, v, key=e, label=str(name))
    return out


def graph_to_dot(g: Diagram | SimpleDiagramGraph) -> str:
    if isinstance(g, Diagram):
        graph = _labelled(g.graph, g.labels)
    else:
        graph = _labelled(g.graph, g.edge_origin)
        for v, origin in enumerate(g.vertex_origin):
            if origin is None:
                graph.nodes[v]["shape"] = "point"
    return str(nx.nx_pydot.to_pydot(graph).to_string())


def dual_to_dot(g: SimpleDiagramGraph) -> str:
    return str(nx.nx_pydot.to_pydot(_labelled(dual_graph(g))).to_string())
