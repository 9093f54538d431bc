from __future__ import annotations

from pathlib import Path

from src.cli import main as cli_main

"""Exit code contract tests (contracts/cli_exit_codes.md)."""


def test_exit_code_all_passed(trefoil_pd_file: Path, capsys):
    assert cli_main(["report", str(trefoil_pd_file)]) == 0
    assert "failed=0" in capsys.readouterr().out


def test_exit_code_missing_config(trefoil_pd_file: Path, capsys):
    # --config に存在しないファイル → exit 1
    code = cli_main(["report", str(trefoil_pd_file), "--config", "missing.yml"])
    assert code == 1
    assert "ERROR config:" in capsys.readouterr().out


def test_exit_code_broken_pd(temp_workdir: Path, capsys):
    bad = temp_workdir / "broken.pd"
    bad.write_text("X[1,2,3,4] Y[5]\n", encoding="utf-8")
    assert cli_main(["pipeline", str(bad)]) == 1
    assert "ERROR pipeline:" in capsys.readouterr().out


def test_exit_code_exact_only_cap(trefoil_pd_file: Path, capsys):
    code = cli_main(["pipeline", str(trefoil_pd_file), "--exact-only", "--exact-cap", "4"])
    assert code == 1
    assert "SUMMARY" not in capsys.readouterr().out


def test_exit_code_check_failure(temp_workdir: Path, capsys):
    # plat:3 has sphere cost 6 > 4k+4 when k = 0
    code = cli_main(["pipeline", "plat:3", "--k", "0"])
    out = capsys.readouterr().out
    assert code == 2
    assert "failed=1" in out
    assert list((temp_workdir / "logs").glob("violations-*.log"))


def test_cap_fallback_does_not_change_exit_code(trefoil_pd_file: Path, capsys):
    code = cli_main(["pipeline", str(trefoil_pd_file), "--exact-cap", "4"])
    out = capsys.readouterr().out
    assert code != 1
    assert "WARN" in out and "falling back to heuristic" in out
