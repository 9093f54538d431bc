from .curves import CURVE_FAMILY_SCHEMA, Crossing, Curve, CurveFamily, RealizationError, realize
from .validate import CurveCheck, RealizationReport, validate

__all__ = [
    "CURVE_FAMILY_SCHEMA",
    "Crossing",
    "Curve",
    "CurveCheck",
    "CurveFamily",
    "RealizationError",
    "RealizationReport",
    "realize",
    "validate",
]
