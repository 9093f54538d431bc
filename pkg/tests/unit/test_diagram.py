from __future__ import annotations

import networkx as nx
import pytest

from src.diagram.embedding import (
    contract_added,
    dual_graph,
    faces,
    strand_components,
    subdivide_to_simple,
)
from src.diagram.export import diagram_from_dict, diagram_to_dict, graph_to_dot
from src.diagram.model import Diagram, DiagramError, VertexKind
from src.diagram.pd_code import emit_pd, parse_pd
from src.families.corpus import TREFOIL_PD

"""Unit tests for PD parsing, validation and the simple diagram graph."""


def test_trefoil_parses_to_three_crossings(trefoil: Diagram) -> None:
    assert trefoil.crossing_count == 3
    assert trefoil.edge_count == 6
    assert set(trefoil.kinds) == {VertexKind.CROSSING}


def test_euler_characteristic_is_two(trefoil: Diagram, figure_eight: Diagram) -> None:
    for d in (trefoil, figure_eight):
        g = d.graph
        assert g.vertex_count - g.edge_count + g.face_count == 2


def test_trefoil_has_five_faces(trefoil: Diagram) -> None:
    assert len(faces(trefoil)) == 5


def test_pd_wrapper_and_commas_accepted() -> None:
    d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
    assert d.crossing_count == 3


def test_nested_tuples_accepted() -> None:
    d = parse_pd([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])
    assert d.crossing_count == 3


@pytest.mark.parametrize(
    ("text", "fragment"),
    [
        ("X[1,2,3]", "arity"),
        ("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]", "exactly twice"),
        ("", "no X"),
        ("X[1,4,2,5] foo", "unrecognised"),
        ("X[1,a,2,5]", "non-integer"),
        ("X[1,2,1,2]", "Euler check"),
    ],
)
def test_malformed_pd_rejected(text: str, fragment: str) -> None:
    with pytest.raises(DiagramError, match=fragment):
        parse_pd(text)


def test_two_component_link_rejected() -> None:
    # Hopf link
    with pytest.raises(DiagramError, match="2-component link"):
        parse_pd("X[4,1,3,2] X[2,3,1,4]")


def test_single_strand_component(trefoil: Diagram) -> None:
    assert len(strand_components(trefoil.graph)) == 1


def test_subdivision_makes_graph_simple(trefoil: Diagram) -> None:
    sg = subdivide_to_simple(trefoil)
    assert sg.is_simple()
    # three parallel pairs -> one added vertex each
    assert sg.added_count == 3
    assert sg.vertex_count == 6
    assert sg.graph.edge_count == 9
    assert nx.is_biconnected(nx.Graph(sg.to_networkx()))


def test_contract_added_recovers_multigraph(trefoil: Diagram) -> None:
    sg = subdivide_to_simple(trefoil)
    back = contract_added(sg)
    assert back.number_of_nodes() == 3
    assert back.number_of_edges() == 6
    assert sorted(k for _, _, k in back.edges(keys=True)) == list(trefoil.labels)


def test_dual_graph_vertices_are_faces(trefoil: Diagram) -> None:
    sg = subdivide_to_simple(trefoil)
    dual = dual_graph(sg)
    assert dual.vertex_count == sg.graph.face_count
    assert dual.edge_count == sg.graph.edge_count


def test_emit_pd_reparses_to_same_shape(figure_eight: Diagram) -> None:
    again = parse_pd(emit_pd(figure_eight))
    assert again.crossing_count == figure_eight.crossing_count
    assert sorted(len(f) for f in faces(again)) == sorted(len(f) for f in faces(figure_eight))


def test_dict_export_round_trip(trefoil: Diagram) -> None:
    data = diagram_to_dict(trefoil)
    assert data["schema"] == "diagram/v1"
    assert diagram_from_dict(data).vertices == trefoil.vertices


def test_graph_to_dot_mentions_every_vertex() -> None:
    dot = graph_to_dot(parse_pd(TREFOIL_PD))
    assert dot.lstrip().startswith(("graph", "strict graph"))
    for v in range(3):
        assert str(v) in dot
