from .builder import DiagramBuilder
from .embedding import (
    SimpleDiagramGraph,
    contract_added,
    dual_graph,
    faces,
    knot_traversal,
    strand_components,
    subdivide_to_simple,
    validate_diagram,
)
from .export import diagram_from_dict, diagram_to_dict, dual_to_dot, graph_to_dot
from .model import Diagram, DiagramError, EmbeddedGraph, Vertex, VertexKind
from .pd_code import diagram_from_tuples, emit_pd, parse_pd

__all__ = [
    "Diagram",
    "DiagramBuilder",
    "DiagramError",
    "EmbeddedGraph",
    "SimpleDiagramGraph",
    "Vertex",
    "VertexKind",
    "contract_added",
    "diagram_from_dict",
    "diagram_from_tuples",
    "diagram_to_dict",
    "dual_graph",
    "dual_to_dot",
    "emit_pd",
    "faces",
    "graph_to_dot",
    "knot_traversal",
    "parse_pd",
    "strand_components",
    "subdivide_to_simple",
    "validate_diagram",
]
