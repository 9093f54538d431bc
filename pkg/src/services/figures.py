from __future__ import annotations

import io
from collections import Counter

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from ..diagram.embedding import SimpleDiagramGraph  # noqa: E402
from ..realize.curves import CurveFamily  # noqa: E402

"""Schematic SVG figures of a diagram graph with its realized curves.

Edges are labelled with how many curves cross them; subdivision vertices are drawn small.
"""

__all__ = ["diagram_svg"]

# svg の id とメタデータを固定して出力を決定的にする
_SVG_SALT = "knot-width"


def _layout(g: nx.Graph) -> dict[int, tuple[float, float]]:
    try:
        pos = nx.planar_layout(g)
    except nx.NetworkXException:
        pos = nx.spring_layout(g, seed=0)
    return {int(v): (float(x), float(y)) for v, (x, y) in pos.items()}


def diagram_svg(
    sg: SimpleDiagramGraph, fam: CurveFamily | None = None, *, title: str = ""
) -> str:
    simple = nx.Graph()
    simple.add_nodes_from(range(sg.vertex_count))
    simple.add_edges_from(sg.graph.ends)
    pos = _layout(simple)

    hits: Counter[int] = Counter()
    if fam is not None:
        for curve in fam.curves:
            hits.update(x.edge for x in curve.crossings)

    crossing_nodes = [v for v, o in enumerate(sg.vertex_origin) if o is not None]
    added_nodes = [v for v, o in enumerate(sg.vertex_origin) if o is None]

    with plt.rc_context({"svg.hashsalt": _SVG_SALT}):
        fig, ax = plt.subplots(figsize=(6, 6))
        nx.draw_networkx_edges(simple, pos, ax=ax, edge_color="0.4")
        nx.draw_networkx_nodes(
            simple, pos, nodelist=crossing_nodes, ax=ax, node_size=120, node_color="tab:blue"
        )
        nx.draw_networkx_nodes(
            simple, pos, nodelist=added_nodes, ax=ax, node_size=20, node_color="0.6"
        )
        labels = {
            (u, v): str(hits[e]) for e, (u, v) in enumerate(sg.graph.ends) if hits[e] > 0
        }
        if labels:
            nx.draw_networkx_edge_labels(
                simple, pos, edge_labels=labels, ax=ax, font_size=7, font_color="tab:red"
            )
        ax.set_title(title or sg.source.name or "diagram")
        ax.set_axis_off()
        fig.tight_layout()
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
        plt.close(fig)
    return buf.getvalue()
