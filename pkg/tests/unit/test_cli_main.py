from __future__ import annotations

import json
from pathlib import Path

import pytest

from src.cli import main as cli_main


def test_cli_pipeline_trefoil(trefoil_pd_file: Path, temp_workdir: Path, capsys):
    code = cli_main(["pipeline", str(trefoil_pd_file), "--out", "out"])
    out = capsys.readouterr().out
    assert code == 0
    assert "SUMMARY instances=1/1 passed=1 failed=0" in out
    assert (temp_workdir / "out" / "trefoil" / "report.json").is_file()


def test_cli_parse_writes_diagram_without_summary(trefoil_pd_file: Path, temp_workdir: Path,
                                                  capsys):
    code = cli_main(["parse", str(trefoil_pd_file), "--out", "out"])
    out = capsys.readouterr().out
    assert code == 0
    assert "SUMMARY" not in out
    assert "crossings=3 edges=6 faces=5" in out
    data = json.loads((temp_workdir / "out" / "trefoil" / "diagram.json").read_text("utf-8"))
    assert data["crossings"] == 3
    assert (temp_workdir / "out" / "trefoil" / "diagram.pd").is_file()


@pytest.mark.parametrize(
    ("argv", "stem"),
    [
        (["gen-torus", "5", "2"], "torus_5_2"),
        (["gen-pretzel", "-2", "3", "7"], "pretzel_-2_3_7"),
        (["gen-sum", "2"], "sum_2"),
    ],
)
def test_cli_generators(argv: list[str], stem: str, temp_workdir: Path, capsys):
    code = cli_main([*argv, "--out", "out"])
    assert code == 0
    assert "SUMMARY" not in capsys.readouterr().out
    assert (temp_workdir / "out" / stem / "diagram.json").is_file()


def test_cli_missing_config_file(temp_workdir: Path, capsys):
    code = cli_main(["gen-torus", "3", "2", "--config", "missing.yml"])
    out = capsys.readouterr().out
    assert code == 1
    assert "ERROR config:" in out


def test_cli_invalid_threads(temp_workdir: Path, capsys):
    code = cli_main(["grid", "torus", "--threads", "0"])
    out = capsys.readouterr().out
    assert code == 1
    assert "threads must be >= 1" in out


def test_cli_exact_only_over_cap(trefoil_pd_file: Path, temp_workdir: Path, capsys):
    code = cli_main(["carve", str(trefoil_pd_file), "--exact-only", "--exact-cap", "4"])
    out = capsys.readouterr().out
    assert code == 1
    assert "ERROR carve:" in out


def test_cli_broken_pd(temp_workdir: Path, capsys):
    bad = temp_workdir / "bad.pd"
    bad.write_text("X[1,2,3]\n", encoding="utf-8")
    code = cli_main(["parse", str(bad)])
    assert code == 1
    assert "ERROR parse:" in capsys.readouterr().out


def test_cli_triangulate_prism(temp_workdir: Path, capsys):
    code = cli_main(["triangulate", "prism", "--out", "out", "--format", "dot"])
    out = capsys.readouterr().out
    assert code == 0
    assert "SUMMARY instances=1/1 passed=1 failed=0" in out
    base = temp_workdir / "out" / "prism"
    for name in ("triangulation.json", "triangulation.tri", "face_pairing.dot"):
        assert (base / name).is_file()


def test_cli_empty_grid(temp_workdir: Path, capsys):
    code = cli_main(["grid", "sum", "--max", "0", "--out", "out"])
    out = capsys.readouterr().out
    assert code == 0
    assert "SUMMARY instances=0/0 passed=0 failed=0" in out
    assert (temp_workdir / "out" / "grid-sum.json").read_text(encoding="utf-8") == "[]\n"


def test_cli_grid_uses_config_limit(write_config: Path, temp_workdir: Path, capsys):
    code = cli_main(["grid", "sum", "--format", "md"])
    out = capsys.readouterr().out
    assert code in (0, 2)
    assert "SUMMARY instances=3/3" in out
    assert (temp_workdir / "out" / "grid-sum.md").is_file()


def test_cli_debug_flag(trefoil_pd_file: Path, temp_workdir: Path, capsys):
    code = cli_main(["parse", str(trefoil_pd_file), "--debug"])
    assert code == 0
    assert "debug mode enabled" in capsys.readouterr().out


def test_cli_env_override(monkeypatch, temp_workdir: Path, capsys):
    monkeypatch.setenv("KNOTWIDTH_OUT", "env-out")
    code = cli_main(["gen-torus", "3", "2"])
    assert code == 0
    assert (temp_workdir / "env-out" / "torus_3_2" / "diagram.json").is_file()
