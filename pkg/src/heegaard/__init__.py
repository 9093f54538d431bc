from .model import (
    SPLITTING_SCHEMA,
    BodyKind,
    CompressionBody,
    HeegaardError,
    MultipleHeegaardSplitting,
    SplittingWidth,
    StrandType,
    ThickSphere,
)
from .report import REPORT_SCHEMA, TheoremMainReport, theorem_main_report
from .tubing import choose_tube_strand, classify_compression_body, tube

__all__ = [
    "REPORT_SCHEMA",
    "SPLITTING_SCHEMA",
    "BodyKind",
    "CompressionBody",
    "HeegaardError",
    "MultipleHeegaardSplitting",
    "SplittingWidth",
    "StrandType",
    "TheoremMainReport",
    "ThickSphere",
    "choose_tube_strand",
    "classify_compression_body",
    "theorem_main_report",
    "tube",
]
