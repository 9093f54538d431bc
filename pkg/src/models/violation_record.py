from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

UTC = timezone.utc

"""ViolationRecord model for the violation log.

One record per failed invariant check. The line schema is
specs/001-knot-width-pipeline/contracts/violation_log_schema.json (追加キー禁止).
"""

__all__ = [
    "ViolationRecord",
]


@dataclass(frozen=True)
class ViolationRecord:
    """Structured record for JSON Lines logging.

    Attributes:
        timestamp: ISO8601 UTC timestamp with 'Z' suffix
        instance: diagram or family label the check ran on
        stage: pipeline stage in lower-kebab-case (carve, realize, spheres, tube, report, ...)
        check: name of the failed check
        detail: human-readable witness
    """

    timestamp: str
    instance: str
    stage: str
    check: str
    detail: str

    @staticmethod
    def create(instance: str, stage: str, check: str, detail: str = "") -> ViolationRecord:
        ts = datetime.now(UTC).isoformat().replace("+00:00", "Z")
        return ViolationRecord(
            timestamp=ts, instance=instance, stage=stage, check=check, detail=detail
        )

    def to_json_line(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)
