from __future__ import annotations

import re
from datetime import datetime, timezone

UTC = timezone.utc

import pytest

from src.models.pipeline_result import InstanceResult, RunResult
from src.models.violation_record import ViolationRecord
from src.services.summary import format_elapsed, render_summary_line

"""Unit tests for summary rendering service.

Tests render_summary_line against the format in contracts/summary_output.md.
"""

SUMMARY_PATTERN = re.compile(
    r"^SUMMARY\s+instances=([0-9]+)/(\1)\s+passed=([0-9]+)\s+failed=([0-9]+)\s+"
    r"cw_max=([0-9]+)\s+sphere_cost_max=([0-9]+)\s+splitting_cost_max=([0-9]+)\s+"
    r"elapsed_sec=([0-9]+\.?[0-9]*)$"
)

START = datetime(2024, 1, 1, 10, 0, 0, tzinfo=UTC)


def _instance(
    name: str, cw: int, sphere: int, splitting: int, *, ok: bool = True
) -> InstanceResult:
    violations = (
        () if ok else (ViolationRecord.create(name, "report", "sphere cost <= carving width"),)
    )
    return InstanceResult(
        instance=name,
        cw=cw,
        max_degree=4,
        tw_lower=0,
        tw_upper=(3 * cw) // 2 - 1,
        k=(3 * cw) // 2 - 1,
        sphere_cost=sphere,
        splitting_cost=splitting,
        checks={"sphere cost <= carving width": ok},
        violations=violations,
    )


def test_render_summary_line_all_passed() -> None:
    result = RunResult(
        (_instance("trefoil", 4, 4, 8), _instance("pretzel:-2,3,7", 6, 4, 8)),
        START,
        START,
        2.0,
    )

    line = render_summary_line(result)

    match = SUMMARY_PATTERN.match(line)
    assert match, f"SUMMARY line should match regex: {line}"
    assert match.group(1) == "2"
    assert match.group(3) == "2"
    assert match.group(4) == "0"
    assert match.group(5) == "6"  # cw_max
    assert match.group(6) == "4"
    assert match.group(7) == "8"
    assert match.group(8) == "2"


def test_render_summary_line_partial_failure() -> None:
    result = RunResult(
        (_instance("a", 4, 4, 8), _instance("b", 4, 6, 12, ok=False)),
        START,
        START,
        0.84,
    )

    line = render_summary_line(result)

    assert line == (
        "SUMMARY instances=2/2 passed=1 failed=1 cw_max=4 sphere_cost_max=6 "
        "splitting_cost_max=12 elapsed_sec=0.84"
    )


def test_render_summary_line_empty_run() -> None:
    line = render_summary_line(RunResult((), START, START, 0.0))

    assert SUMMARY_PATTERN.match(line)
    assert line.endswith("cw_max=0 sphere_cost_max=0 splitting_cost_max=0 elapsed_sec=0")


@pytest.mark.parametrize(
    ("seconds", "text"),
    [
        (0, "0"),
        (5.0, "5"),
        (1.5, "1.5"),
        (0.84, "0.84"),
        (1.23456, "1.235"),
        (0.000123, "0.000123"),
    ],
)
def test_format_elapsed(seconds: float, text: str) -> None:
    assert format_elapsed(seconds) == text


def test_violations_aggregate() -> None:
    result = RunResult((_instance("a", 4, 6, 12, ok=False),), START, START, 1.0)
    assert [v.instance for v in result.violations] == ["a"]
