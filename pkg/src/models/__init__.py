"""Domain models for the knot-width pipeline: run configuration, results, violation records."""

from .config_models import GridFamily, OutputFormat, PipelineConfig, RunConfig
from .pipeline_result import InstanceResult, RunResult
from .violation_record import ViolationRecord

__all__ = [
    # Configuration models
    "GridFamily",
    "OutputFormat",
    "PipelineConfig",
    "RunConfig",
    # Result models
    "InstanceResult",
    "RunResult",
    "ViolationRecord",
]
