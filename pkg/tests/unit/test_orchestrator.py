from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path

import pytest

from src.diagram.embedding import subdivide_to_simple
from src.diagram.model import Diagram
from src.families.corpus import CorpusEntry, standard_corpus
from src.logging.violation_log import ViolationLogBuffer
from src.models.config_models import OutputFormat, RunConfig
from src.services.artifacts import ArtifactWriter
from src.services.orchestrator import (
    PipelineError,
    artifact_stem,
    carve,
    diagram_report,
    load_entry,
    report_markdown,
    run_instance,
    run_pipeline,
    run_stages,
)

"""Unit tests for the stage runner and artifact layout."""


def test_run_stages_trefoil_passes(trefoil: Diagram, run_config: RunConfig) -> None:
    run = run_stages(CorpusEntry("trefoil", trefoil), run_config)
    assert run.violations == []
    assert run.exact
    assert run.report is not None and run.report.ok
    assert run.spheres is not None
    assert run.spheres.cost() <= run.decomposition.width
    assert run.checks["bond carving"]
    assert run.checks["thick spheres = 2L-2"]


@pytest.mark.parametrize(
    ("until", "present", "absent"),
    [
        ("carve", "decomposition", "curves"),
        ("realize", "curves", "spheres"),
        ("spheres", "spheres", "splitting"),
        ("tube", "splitting", "report"),
    ],
)
def test_run_stages_stops_at_stage(
    trefoil: Diagram, run_config: RunConfig, until: str, present: str, absent: str
) -> None:
    run = run_stages(CorpusEntry("trefoil", trefoil), run_config, until=until)
    assert getattr(run, present) is not None
    assert getattr(run, absent) is None


def test_unknown_stage_rejected(trefoil: Diagram, run_config: RunConfig) -> None:
    with pytest.raises(PipelineError, match="unknown stage"):
        run_stages(CorpusEntry("trefoil", trefoil), run_config, until="paint")


def test_template_entry_skips_carving(run_config: RunConfig) -> None:
    run = run_stages(load_entry("pretzel:-2,3,7"), run_config)
    assert run.curves is None
    assert "bond carving" not in run.checks
    assert run.spheres is not None and run.spheres.width_list() == (4, 4, 4)
    assert run.splitting is not None and run.splitting.cost() == 8
    assert run.violations == []


def test_carve_falls_back_to_heuristic_over_cap(trefoil: Diagram, run_config: RunConfig) -> None:
    sg = subdivide_to_simple(trefoil)
    dec, exact = carve(sg, replace(run_config, exact_cap=3))
    assert not exact
    assert dec.leaf_count == sg.vertex_count


def test_carve_exact_only_over_cap_is_fatal(trefoil: Diagram, run_config: RunConfig) -> None:
    sg = subdivide_to_simple(trefoil)
    with pytest.raises(PipelineError, match="cap"):
        carve(sg, replace(run_config, exact_cap=3, exact_only=True))


def test_diagram_report_with_k(trefoil: Diagram) -> None:
    report = diagram_report(trefoil, k=2)
    assert (report.sphere_bound, report.splitting_bound) == (12, 24)
    assert report.ok


def test_load_entry_sources(trefoil_pd_file: Path, temp_workdir: Path) -> None:
    entry = load_entry(str(trefoil_pd_file))
    assert entry.name == "trefoil"
    assert entry.diagram.crossing_count == 3
    assert load_entry("torus:5,2").diagram.crossing_count == 5


def test_load_entry_diagram_json(temp_workdir: Path, run_config: RunConfig) -> None:
    entry = load_entry("torus:3,2")
    run_pipeline([entry], run_config)
    json_path = run_config.out_dir / "torus_3_2" / "diagram.json"
    again = load_entry(str(json_path))
    assert again.diagram.vertices == entry.diagram.vertices


def test_load_entry_missing(temp_workdir: Path) -> None:
    with pytest.raises(PipelineError, match="input not found"):
        load_entry("missing.pd")


@pytest.mark.parametrize(
    ("label", "stem"),
    [
        ("trefoil", "trefoil"),
        ("torus:3,2", "torus_3_2"),
        ("pretzel:-2,3,7", "pretzel_-2_3_7"),
        (":::", "instance"),
    ],
)
def test_artifact_stem(label: str, stem: str) -> None:
    assert artifact_stem(label) == stem


def test_run_instance_writes_stage_artifacts(trefoil: Diagram, run_config: RunConfig) -> None:
    writer = ArtifactWriter(run_config.out_dir)
    result = run_instance(CorpusEntry("trefoil", trefoil), run_config, writer)
    base = run_config.out_dir / "trefoil"
    for name in ("diagram", "carving", "curves", "spheres", "splitting", "report"):
        data = json.loads((base / f"{name}.json").read_text(encoding="utf-8"))
        assert "schema" in data
    assert (base / "report.txt").read_text(encoding="utf-8").startswith("knot: trefoil")
    assert result.passed


@pytest.mark.parametrize(
    ("fmt", "files"),
    [
        (OutputFormat.DOT, ("diagram.dot", "dual.dot", "carving.dot", "components.dot")),
        (OutputFormat.SVG, ("diagram.svg",)),
        (OutputFormat.MD, ("report.md",)),
    ],
)
def test_format_extras(
    trefoil: Diagram, run_config: RunConfig, fmt: OutputFormat, files: tuple[str, ...]
) -> None:
    cfg = replace(run_config, fmt=fmt)
    run_instance(CorpusEntry("trefoil", trefoil), cfg, ArtifactWriter(cfg.out_dir))
    for name in files:
        assert (cfg.out_dir / "trefoil" / name).is_file()


def test_run_pipeline_table_and_artifacts_are_deterministic(temp_workdir: Path) -> None:
    entries = [load_entry("torus:3,2"), load_entry("pretzel:1,1,1")]
    outputs = []
    for out in ("a", "b"):
        cfg = RunConfig(command="pipeline", out_dir=temp_workdir / out)
        result = run_pipeline(entries, cfg)
        assert result.failed == 0
        outputs.append((cfg.out_dir / "pipeline.csv").read_text(encoding="utf-8"))
        outputs.append((cfg.out_dir / "torus_3_2" / "spheres.json").read_text(encoding="utf-8"))
    assert outputs[0] == outputs[2]
    assert outputs[1] == outputs[3]
    assert outputs[0].splitlines()[0].startswith("instance,cw,")


def test_run_pipeline_collects_violations(temp_workdir: Path, trefoil: Diagram) -> None:
    buffer = ViolationLogBuffer(temp_workdir / "logs")
    cfg = RunConfig(command="pipeline", out_dir=temp_workdir / "out", k=0)
    result = run_pipeline([CorpusEntry("trefoil", trefoil)], cfg, violations=buffer)
    assert len(buffer) == len(result.violations)


CORPUS = standard_corpus(seed=0, random_count=20)


def test_standard_corpus_contents() -> None:
    names = [e.name for e in CORPUS]
    assert len(names) == len(set(names))
    assert sum(1 for n in names if n.startswith("random")) == 20
    assert {"trefoil", "figure-eight", "pretzel:-2,3,7"} <= set(names)


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_standard_corpus_chain_holds(entry: CorpusEntry, run_config: RunConfig) -> None:
    run = run_stages(entry, run_config)
    assert run.violations == []
    assert run.spheres is not None and run.splitting is not None and run.report is not None
    assert run.spheres.cost() <= run.decomposition.width
    assert run.splitting.cost() <= 2 * run.spheres.cost()
    leaves = run.spheres.census()["leaves"]
    assert len(run.splitting.thick) == 2 * leaves - 2
    assert run.report.ok


def test_report_markdown_is_a_rendered_table(trefoil: Diagram) -> None:
    report = diagram_report(trefoil, k=2)
    md = report_markdown(report)
    lines = md.splitlines()
    assert lines[0] == "### trefoil"
    assert lines[2].replace(" ", "") == "|quantity|value|"
    assert "|k|2|" in [ln.replace(" ", "") for ln in lines]
    assert md.endswith("\n")
