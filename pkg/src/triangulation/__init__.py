from .blocks import EDGE_LABELS, drill, drilled_block, prism_block, prism_tets, stacked_prisms
from .builder import KeyedTriangulation, build_from_keys
from .complement import TorusComplement, bezout_pair, torus_complement
from .face_pairing import FacePairingWidth, face_pairing_dot, face_pairing_width, is_daisy_chain
from .homology import meridian_weights, relation_matrix
from .layered import SlopeTriple, layered_solid_torus, normalize_slope, slope_problems, weight_path
from .model import (
    TRIANGULATION_SCHEMA,
    BoundaryComponent,
    Census,
    LabelledFace,
    Triangulation,
    TriangulationError,
    perm_compose,
    perm_inverse,
    perm_sign,
)
from .subdivision import Subdivided, derived_near, restrict

__all__ = [
    "EDGE_LABELS",
    "TRIANGULATION_SCHEMA",
    "BoundaryComponent",
    "Census",
    "FacePairingWidth",
    "KeyedTriangulation",
    "LabelledFace",
    "SlopeTriple",
    "Subdivided",
    "TorusComplement",
    "Triangulation",
    "TriangulationError",
    "bezout_pair",
    "build_from_keys",
    "derived_near",
    "drill",
    "drilled_block",
    "face_pairing_dot",
    "face_pairing_width",
    "is_daisy_chain",
    "layered_solid_torus",
    "meridian_weights",
    "normalize_slope",
    "perm_compose",
    "perm_inverse",
    "perm_sign",
    "prism_block",
    "prism_tets",
    "relation_matrix",
    "restrict",
    "slope_problems",
    "stacked_prisms",
    "torus_complement",
    "weight_path",
]
