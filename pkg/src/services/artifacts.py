from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import TYPE_CHECKING, Any

import pandas as pd

from ..config.loader import CONTRACTS_DIR
from ..logging.init import get_logger

"""Artifact writers: JSON (schema-tagged), DOT/SVG text, CSV/markdown tables.

出力は決定的 (sort_keys, 固定インデント, 末尾改行) なので、同じ入力と seed なら
byte-identical になる。
"""

if TYPE_CHECKING:
    import jsonschema
    from jsonschema.exceptions import ValidationError
else:
    try:
        import jsonschema
        from jsonschema.exceptions import ValidationError
    except ImportError:  # pragma: no cover
        jsonschema = None  # type: ignore[assignment]
        ValidationError = Exception  # type: ignore[misc,assignment]

__all__ = [
    "ARTIFACT_SCHEMAS",
    "ArtifactError",
    "ArtifactWriter",
    "dumps_json",
    "table_frame",
    "render_table",
    "validate_artifact",
]

ARTIFACT_SCHEMAS = {
    "diagram/v1": "diagram_schema.json",
    "carving/v1": "carving_schema.json",
    "curve-family/v1": "curve_family_schema.json",
    "sphere-decomposition/v1": "sphere_decomposition_schema.json",
    "splitting/v1": "splitting_schema.json",
    "triangulation/v1": "triangulation_schema.json",
    "report/v1": "report_schema.json",
}

logger = get_logger(__name__)


class ArtifactError(ValueError):
    pass


def dumps_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def validate_artifact(data: Mapping[str, Any]) -> None:
    """Check a schema-tagged artifact against its contract schema."""
    tag = data.get("schema")
    if tag not in ARTIFACT_SCHEMAS:
        raise ArtifactError(f"unknown artifact schema tag: {tag!r}")
    if jsonschema is None:
        raise ArtifactError("jsonschema library is required for artifact validation")
    path = CONTRACTS_DIR / ARTIFACT_SCHEMAS[tag]
    try:
        schema = json.loads(path.read_text(encoding="utf-8"))
        jsonschema.validate(dict(data), schema)
    except FileNotFoundError as e:
        raise ArtifactError(f"artifact schema not found: {path}") from e
    except ValidationError as e:
        raise ArtifactError(f"{tag}: {e.message}") from e


def table_frame(rows: Sequence[Mapping[str, Any]]) -> pd.DataFrame:
    return pd.DataFrame.from_records([dict(r) for r in rows])


def render_table(rows: Sequence[Mapping[str, Any]], fmt: str) -> str:
    """CSV or GitHub markdown; an empty row list gives an empty table."""
    df = table_frame(rows)
    if df.empty:
        return ""
    if fmt == "csv":
        return df.to_csv(index=False, lineterminator="\n")
    return df.to_markdown(index=False, tablefmt="github") + "\n"


class ArtifactWriter:
    """Writes artifacts under one output directory, remembering what it wrote."""

    def __init__(self, out_dir: Path, *, validate: bool = True) -> None:
        self.out_dir = out_dir
        self.validate = validate
        self.written: list[Path] = []

    def _path(self, name: str) -> Path:
        path = self.out_dir / name
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def write_text(self, name: str, text: str) -> Path:
        path = self._path(name)
        path.write_text(text, encoding="utf-8")
        self.written.append(path)
        logger.debug(f"artifact: {path}")
        return path

    def write_json(self, name: str, data: Mapping[str, Any]) -> Path:
        if self.validate and "schema" in data:
            validate_artifact(data)
        return self.write_text(name, dumps_json(data))

    def write_table(self, name: str, rows: Sequence[Mapping[str, Any]], fmt: str) -> Path:
        return self.write_text(name, render_table(rows, fmt))
