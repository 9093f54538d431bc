# Shared pytest fixtures
from __future__ import annotations

import tempfile
from collections.abc import Iterator
from pathlib import Path

import pytest

from src.diagram.model import Diagram
from src.diagram.pd_code import parse_pd
from src.families.corpus import FIGURE_EIGHT_PD, TREFOIL_PD
from src.logging.init import reset_logging
from src.models.config_models import RunConfig


@pytest.fixture(autouse=True)
def _fresh_logging() -> Iterator[None]:
    reset_logging()
    yield
    reset_logging()


@pytest.fixture()
def temp_workdir(monkeypatch) -> Iterator[Path]:
    with tempfile.TemporaryDirectory() as d:
        p = Path(d)
        (p / "config").mkdir()
        (p / "logs").mkdir()
        monkeypatch.chdir(p)
        yield p


@pytest.fixture()
def sample_config_yaml() -> str:
    return """exact_cap: 16
bond: false
exact_only: false
format: json
seed: 0
threads: 1
out_dir: out
grid:
  torus: 5
  pretzel: 3
  sum: 3
  triangulation: 5
"""


@pytest.fixture()
def write_config(temp_workdir: Path, sample_config_yaml: str) -> Path:
    cfg = temp_workdir / "config" / "pipeline.yml"
    cfg.write_text(sample_config_yaml, encoding="utf-8")
    return cfg


@pytest.fixture()
def trefoil() -> Diagram:
    return parse_pd(TREFOIL_PD, name="trefoil")


@pytest.fixture()
def figure_eight() -> Diagram:
    return parse_pd(FIGURE_EIGHT_PD, name="figure-eight")


@pytest.fixture()
def trefoil_pd_file(temp_workdir: Path) -> Path:
    f = temp_workdir / "trefoil.pd"
    f.write_text(TREFOIL_PD + "\n", encoding="utf-8")
    return f


@pytest.fixture()
def run_config(temp_workdir: Path) -> RunConfig:
    return RunConfig(command="pipeline", out_dir=temp_workdir / "out")
