from __future__ import annotations

import json
import pathlib

import pytest
import yaml

try:
    import jsonschema  # type: ignore
    from jsonschema.exceptions import ValidationError  # type: ignore
except ImportError:  # pragma: no cover
    jsonschema = None  # type: ignore
    ValidationError = Exception  # type: ignore

from src.config.loader import SCHEMA_PATH

"""Config schema contract test (config/pipeline.yml)."""

REPO_ROOT = pathlib.Path(__file__).resolve().parents[2]


def _schema() -> dict:
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


@pytest.mark.skipif(jsonschema is None, reason="jsonschema library not installed")
def test_config_schema_valid_example(sample_config_yaml: str):
    jsonschema.validate(yaml.safe_load(sample_config_yaml), _schema())  # type: ignore


@pytest.mark.skipif(jsonschema is None, reason="jsonschema library not installed")
def test_shipped_config_is_valid():
    shipped = REPO_ROOT / "config" / "pipeline.yml"
    jsonschema.validate(yaml.safe_load(shipped.read_text(encoding="utf-8")), _schema())  # type: ignore


@pytest.mark.skipif(jsonschema is None, reason="jsonschema library not installed")
@pytest.mark.parametrize(
    "config",
    [
        {"exact_cap": 1},
        {"threads": 0},
        {"format": "xlsx"},
        {"grid": {"cube": 3}},
        {"grid": {"torus": -1}},
        {"database": {"host": "localhost"}},
    ],
)
def test_config_schema_rejects(config: dict):
    with pytest.raises(ValidationError):
        jsonschema.validate(config, _schema())  # type: ignore
