from __future__ import annotations

import json
from pathlib import Path

import pytest

from src.config.loader import CONTRACTS_DIR
from src.logging.violation_log import ViolationLogBuffer
from src.models.violation_record import ViolationRecord

"""Violation log JSON schema contract test."""

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None

SCHEMA_PATH = CONTRACTS_DIR / "violation_log_schema.json"


def _schema() -> dict:
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


@pytest.mark.skipif(jsonschema is None, reason="jsonschema library not installed")
def test_violation_schema_valid_example():
    record = {
        "timestamp": "2026-01-05T10:12:33Z",
        "instance": "torus:5,2",
        "stage": "report",
        "check": "sphere cost <= 4k+4",
        "detail": "cw=4 k=0",
    }
    jsonschema.validate(record, _schema())


@pytest.mark.skipif(jsonschema is None, reason="jsonschema library not installed")
def test_violation_schema_rejects_extra_key():
    record = {
        "timestamp": "2026-01-05T10:12:33Z",
        "instance": "trefoil",
        "stage": "carve",
        "check": "bond carving",
        "detail": "",
        "row": 2,
    }
    with pytest.raises(jsonschema.exceptions.ValidationError):
        jsonschema.validate(record, _schema())


@pytest.mark.skipif(jsonschema is None, reason="jsonschema library not installed")
def test_flushed_lines_match_schema(tmp_path: Path):
    buf = ViolationLogBuffer(tmp_path)
    buf.append(ViolationRecord.create("plat:3", "report", "sphere cost <= 4k+4", "cw=6 k=0"))
    buf.append(ViolationRecord.create("lst:5,2", "triangulate", "slope"))
    path = buf.flush()
    assert path is not None and path.name.startswith("violations-")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 2
    for line in lines:
        jsonschema.validate(json.loads(line), _schema())
