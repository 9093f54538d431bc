from __future__ import annotations

import time

import pytest

from src.families.corpus import build_family, standard_corpus
from src.families.spec import parse_family_spec
from src.models.config_models import GridFamily, RunConfig
from src.services.grid import run_grid
from src.services.orchestrator import run_stages

"""Performance smoke tests.

Budgets are generous so CI stays stable; they catch an accidental exponential blow-up,
not small regressions.
"""


@pytest.mark.smoke
def test_pretzel_template_under_one_second(tmp_path):
    cfg = RunConfig(command="pipeline", out_dir=tmp_path)
    start = time.perf_counter()
    run = run_stages(build_family(parse_family_spec("pretzel:-2,3,7")), cfg)
    elapsed = time.perf_counter() - start
    assert run.violations == []
    assert elapsed < 1.0, f"pretzel pipeline too slow: {elapsed:.3f}s"


@pytest.mark.smoke
def test_torus_grid_budget(tmp_path):
    cfg = RunConfig(command="grid", out_dir=tmp_path)
    start = time.perf_counter()
    result = run_grid(GridFamily.TORUS, 5, cfg)
    elapsed = time.perf_counter() - start
    assert result.run.failed == 0
    assert elapsed < 30.0, f"torus grid too slow: {elapsed:.1f}s"


@pytest.mark.smoke
def test_standard_corpus_budget(tmp_path):
    cfg = RunConfig(command="pipeline", out_dir=tmp_path)
    start = time.perf_counter()
    for entry in standard_corpus(seed=0, random_count=20):
        assert run_stages(entry, cfg).violations == []
    elapsed = time.perf_counter() - start
    # 全エントリ合計で 2 分以内
    assert elapsed < 120.0, f"corpus too slow: {elapsed:.1f}s"
