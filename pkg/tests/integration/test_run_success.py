from __future__ import annotations

import json
import re
from pathlib import Path

import pytest

from src.cli import main as cli_main

"""End-to-end CLI runs that pass every check.

Artifacts are read back and checked against the numbers the report promises.
"""

SUMMARY_RE = re.compile(r"SUMMARY instances=(\d+)/\1 passed=(\d+) failed=(\d+) cw_max=(\d+)")


def _summary(out: str) -> tuple[int, int, int]:
    m = SUMMARY_RE.search(out)
    assert m, out
    return int(m.group(1)), int(m.group(2)), int(m.group(3))


def test_trefoil_pipeline_end_to_end(trefoil_pd_file: Path, temp_workdir: Path, capsys):
    code = cli_main(["pipeline", str(trefoil_pd_file), "--format", "dot"])
    out = capsys.readouterr().out
    assert code == 0
    assert _summary(out) == (1, 1, 0)
    base = temp_workdir / "out" / "trefoil"
    carving = json.loads((base / "carving.json").read_text(encoding="utf-8"))
    spheres = json.loads((base / "spheres.json").read_text(encoding="utf-8"))
    report = json.loads((base / "report.json").read_text(encoding="utf-8"))
    assert carving["schema"] == "carving/v1"
    assert spheres["schema"] == "sphere-decomposition/v1"
    assert report["checks"] and all(report["checks"].values())
    assert (base / "components.dot").is_file()
    assert not list((temp_workdir / "logs").glob("violations-*.log"))


def test_pretzel_template_end_to_end(temp_workdir: Path, capsys):
    code = cli_main(["pipeline", "pretzel:-2,3,7"])
    out = capsys.readouterr().out
    assert code == 0
    assert "sphere_cost_max=4 splitting_cost_max=8" in out
    base = temp_workdir / "out" / "pretzel_-2_3_7"
    report = json.loads((base / "report.json").read_text(encoding="utf-8"))
    assert report["sphere_cost"] == 4
    assert report["splitting_cost"] == 8


@pytest.mark.parametrize("stage", ["carve", "realize", "spheres", "tube", "report"])
def test_single_stage_commands(stage: str, trefoil_pd_file: Path, temp_workdir: Path, capsys):
    code = cli_main([stage, str(trefoil_pd_file)])
    assert code == 0
    assert _summary(capsys.readouterr().out) == (1, 1, 0)
    assert (temp_workdir / "out" / "trefoil" / "carving.json").is_file()


def test_pipeline_several_inputs_writes_table(temp_workdir: Path, capsys):
    code = cli_main(["pipeline", "torus:3,2", "torus:5,2", "pretzel:1,1,1", "--format", "md"])
    out = capsys.readouterr().out
    assert code == 0
    assert _summary(out) == (3, 3, 0)
    table = (temp_workdir / "out" / "pipeline.md").read_text(encoding="utf-8")
    assert "torus:5,2" in table


def test_triangulate_torus_complement(temp_workdir: Path, capsys):
    code = cli_main(["triangulate", "torus:5,3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "pv-qu=1" in out
    data = json.loads(
        (temp_workdir / "out" / "torus_5_3" / "triangulation.json").read_text(encoding="utf-8")
    )
    assert data["schema"] == "triangulation/v1"
    tri = (temp_workdir / "out" / "torus_5_3" / "triangulation.tri").read_text(encoding="utf-8")
    assert len(tri.splitlines()) == data["census"]["tetrahedra"] + 1


def test_torus_grid_with_workers(write_config: Path, temp_workdir: Path, capsys):
    code = cli_main(["grid", "torus", "--max", "4", "--threads", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert _summary(out) == (2, 2, 0)
    rows = json.loads((temp_workdir / "out" / "grid-torus.json").read_text(encoding="utf-8"))
    assert [r["params"] for r in rows] == ["3,2", "4,3"]


def test_empty_grid(temp_workdir: Path, capsys):
    assert cli_main(["grid", "pretzel", "--max", "0"]) == 0
    assert "SUMMARY instances=0/0" in capsys.readouterr().out
