from __future__ import annotations

from pathlib import Path

import pytest

from src.config.loader import ConfigError, apply_env, load_config
from src.models.config_models import OutputFormat, PipelineConfig, RunConfig


def test_load_config_success(write_config: Path):
    cfg = load_config(write_config)
    assert cfg.exact_cap == 16
    assert cfg.fmt is OutputFormat.JSON
    assert cfg.out_dir == Path("out")
    assert cfg.grid_max == {"torus": 5, "pretzel": 3, "sum": 3, "triangulation": 5}


def test_load_config_missing_file(temp_workdir: Path):
    missing = temp_workdir / "config" / "not_exists.yml"
    with pytest.raises(ConfigError, match="not found"):
        load_config(missing)


def test_default_path_absent_gives_defaults(temp_workdir: Path):
    assert load_config() == PipelineConfig()


def test_default_path_is_used(write_config: Path):
    # temp_workdir is the cwd, so config/pipeline.yml is picked up
    assert load_config().grid_max["torus"] == 5


def test_load_config_extra_field(write_config: Path):
    # additionalProperties: false
    text = write_config.read_text(encoding="utf-8") + "\nextra_field: not_allowed\n"
    write_config.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError) as e:
        load_config(write_config)
    assert "config validation failed" in str(e.value)


@pytest.mark.parametrize(
    ("old", "new"),
    [
        ("exact_cap: 16", "exact_cap: 1"),
        ("format: json", "format: xlsx"),
        ("threads: 1", "threads: 0"),
        ("  torus: 5", "  knots: 5"),
    ],
)
def test_load_config_invalid_values(write_config: Path, old: str, new: str):
    text = write_config.read_text(encoding="utf-8").replace(old, new)
    write_config.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError, match="config validation failed"):
        load_config(write_config)


def test_load_config_invalid_yaml(write_config: Path):
    write_config.write_text("exact_cap: [16\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="invalid yaml"):
        load_config(write_config)


def test_load_config_not_mapping(write_config: Path):
    write_config.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="mapping"):
        load_config(write_config)


def test_apply_env_overrides():
    cfg = apply_env(
        PipelineConfig(),
        {
            "KNOTWIDTH_EXACT_CAP": "12",
            "KNOTWIDTH_THREADS": "4",
            "KNOTWIDTH_SEED": "7",
            "KNOTWIDTH_FORMAT": "md",
            "KNOTWIDTH_OUT": "results",
        },
    )
    assert (cfg.exact_cap, cfg.threads, cfg.seed) == (12, 4, 7)
    assert cfg.fmt is OutputFormat.MD
    assert cfg.out_dir == Path("results")


def test_apply_env_empty_is_noop():
    base = PipelineConfig()
    assert apply_env(base, {}) is base
    assert apply_env(base, {"KNOTWIDTH_THREADS": ""}) is base


@pytest.mark.parametrize(
    ("env", "fragment"),
    [
        ({"KNOTWIDTH_THREADS": "many"}, "must be an integer"),
        ({"KNOTWIDTH_EXACT_CAP": "1"}, ">= 2"),
        ({"KNOTWIDTH_FORMAT": "xlsx"}, "json\\|dot"),
    ],
)
def test_apply_env_rejects(env: dict[str, str], fragment: str):
    with pytest.raises(ConfigError, match=fragment):
        apply_env(PipelineConfig(), env)


def test_run_config_problems():
    assert RunConfig(command="pipeline").problems() == []
    bad = RunConfig(command="grid", exact_cap=1, threads=0, k=-1, grid_max=-2)
    assert len(bad.problems()) == 4
