from __future__ import annotations

import json
import os
from collections.abc import Mapping
from dataclasses import replace
from pathlib import Path
from typing import TYPE_CHECKING, Any

import yaml

from ..models.config_models import OutputFormat, PipelineConfig

"""Config loader for the knot-width pipeline.

Responsibilities:
- Load YAML config/pipeline.yml (built-in defaults when the default file is absent)
- Validate against contracts/config_schema.json
- Apply KNOTWIDTH_* environment overrides (CLI flags are applied later, in the CLI)
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
    "CONTRACTS_DIR",
    "SCHEMA_PATH",
    "DEFAULT_CONFIG_PATH",
    "ENV_KEYS",
    "ConfigError",
    "load_config",
    "apply_env",
]

# src/config/loader.py -> src/config -> src -> repo_root
_repo_root = Path(__file__).parent.parent.parent
CONTRACTS_DIR = _repo_root / "specs" / "001-knot-width-pipeline" / "contracts"
SCHEMA_PATH = CONTRACTS_DIR / "config_schema.json"
DEFAULT_CONFIG_PATH = Path("config/pipeline.yml")

ENV_KEYS = {
    "exact_cap": "KNOTWIDTH_EXACT_CAP",
    "threads": "KNOTWIDTH_THREADS",
    "seed": "KNOTWIDTH_SEED",
    "fmt": "KNOTWIDTH_FORMAT",
    "out_dir": "KNOTWIDTH_OUT",
}


class ConfigError(ValueError):
    pass


def _validate_config_schema(data: dict[str, Any]) -> None:
    """Validate config data against the JSON schema.

    Raises:
        ConfigError: jsonschema missing, schema file missing or broken, or a schema violation.
    """
    if jsonschema is None:
        raise ConfigError("jsonschema library is required for config validation")

    if not SCHEMA_PATH.exists():
        raise ConfigError(f"config schema not found: {SCHEMA_PATH}")

    try:
        schema = json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
        jsonschema.validate(data, schema)
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid schema file: {e}") from e
    except ValidationError as e:
        raise ConfigError(f"config validation failed: {e.message}") from e


def load_config(path: Path | None = None) -> PipelineConfig:
    if path is None:
        if not DEFAULT_CONFIG_PATH.exists():
            return PipelineConfig()
        path = DEFAULT_CONFIG_PATH
    elif not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"invalid yaml: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError("config validation failed: top level must be a mapping")

    _validate_config_schema(data)

    defaults = PipelineConfig()
    return PipelineConfig(
        exact_cap=data.get("exact_cap", defaults.exact_cap),
        bond=data.get("bond", defaults.bond),
        exact_only=data.get("exact_only", defaults.exact_only),
        fmt=OutputFormat(data.get("format", defaults.fmt.value)),
        seed=data.get("seed", defaults.seed),
        threads=data.get("threads", defaults.threads),
        out_dir=Path(data.get("out_dir", str(defaults.out_dir))),
        grid_max=dict(data.get("grid", {})),
    )


def _env_int(environ: Mapping[str, str], key: str, minimum: int) -> int | None:
    raw = environ.get(key)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{key} must be >= {minimum}, got {value}")
    return value


def apply_env(cfg: PipelineConfig, environ: Mapping[str, str] | None = None) -> PipelineConfig:
    env = os.environ if environ is None else environ
    changes: dict[str, Any] = {}
    for field_name, minimum in (("exact_cap", 2), ("threads", 1), ("seed", 0)):
        value = _env_int(env, ENV_KEYS[field_name], minimum)
        if value is not None:
            changes[field_name] = value
    fmt = env.get(ENV_KEYS["fmt"])
    if fmt:
        try:
            changes["fmt"] = OutputFormat(fmt)
        except ValueError:
            raise ConfigError(f"{ENV_KEYS['fmt']} must be one of json|dot|svg|csv|md") from None
    out = env.get(ENV_KEYS["out_dir"])
    if out:
        changes["out_dir"] = Path(out)
    return replace(cfg, **changes) if changes else cfg
