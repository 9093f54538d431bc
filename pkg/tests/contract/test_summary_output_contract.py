from __future__ import annotations

import re
from datetime import datetime, timezone

UTC = timezone.utc

from src.models.pipeline_result import InstanceResult, RunResult
from src.services.summary import render_summary_line

"""SUMMARY 行フォーマット契約テスト (contracts/summary_output.md)"""

SUMMARY_PATTERN = re.compile(
    r"^SUMMARY\s+instances=([0-9]+)/(\1)\s+passed=([0-9]+)\s+failed=([0-9]+)\s+"
    r"cw_max=([0-9]+)\s+sphere_cost_max=([0-9]+)\s+splitting_cost_max=([0-9]+)\s+"
    r"elapsed_sec=([0-9]+\.?[0-9]*)$"
)


def _instance(name: str, cw: int, cost: int, ok: bool = True) -> InstanceResult:
    return InstanceResult(
        instance=name,
        cw=cw,
        max_degree=4,
        tw_lower=0,
        tw_upper=5,
        k=5,
        sphere_cost=cost,
        splitting_cost=2 * cost,
        sphere_width=(cost,),
        splitting_width=f"{{(0,{2 * cost})}}",
        exact=True,
        checks={"sphere cost <= carving width": ok},
    )


def test_summary_pattern_example_line():
    line = (
        "SUMMARY instances=2/2 passed=1 failed=1 cw_max=6 sphere_cost_max=6 "
        "splitting_cost_max=12 elapsed_sec=0.84"
    )
    assert SUMMARY_PATTERN.match(line)


def test_rendered_line_matches_contract():
    t = datetime(2026, 1, 1, tzinfo=UTC)
    result = RunResult(
        (_instance("trefoil", 4, 4), _instance("plat:3", 6, 6, ok=False)), t, t, 1.234
    )
    line = render_summary_line(result)
    m = SUMMARY_PATTERN.match(line)
    assert m, line
    assert m.group(3, 4, 5, 6, 7) == ("1", "1", "6", "6", "12")


def test_empty_run_matches_contract():
    t = datetime(2026, 1, 1, tzinfo=UTC)
    assert SUMMARY_PATTERN.match(render_summary_line(RunResult((), t, t, 0.0)))
