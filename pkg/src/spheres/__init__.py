from .classify import PANTS_LABELS, classify_ball, classify_component, classify_pants
from .decompose import check_census, spheres_from_blocks, spheres_from_carving, trace_strands
from .model import (
    SPHERE_DECOMPOSITION_SCHEMA,
    BallCertificate,
    Component,
    ComponentClassification,
    ComponentKind,
    InessentialStrandError,
    Sphere,
    SphereDecomposition,
    SphereDecompositionError,
    Strand,
)
from .templates import block_sphere_decomposition, plat_sphere_decomposition, simple_vertex_blocks

__all__ = [
    "PANTS_LABELS",
    "SPHERE_DECOMPOSITION_SCHEMA",
    "BallCertificate",
    "Component",
    "ComponentClassification",
    "ComponentKind",
    "InessentialStrandError",
    "Sphere",
    "SphereDecomposition",
    "SphereDecompositionError",
    "Strand",
    "block_sphere_decomposition",
    "check_census",
    "classify_ball",
    "classify_component",
    "classify_pants",
    "plat_sphere_decomposition",
    "simple_vertex_blocks",
    "spheres_from_blocks",
    "spheres_from_carving",
    "trace_strands",
]
