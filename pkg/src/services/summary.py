from __future__ import annotations

from ..models.pipeline_result import RunResult

"""SUMMARY line rendering (contracts/summary_output.md)."""

__all__ = ["format_elapsed", "render_summary_line"]


def format_elapsed(seconds: float) -> str:
    """Elapsed seconds without scientific notation; integral values drop the fraction."""
    if seconds == 0:
        return "0"
    if seconds == int(seconds):
        return str(int(seconds))
    if seconds < 0.01:
        return f"{seconds:.6f}".rstrip("0").rstrip(".")
    return f"{seconds:.3f}".rstrip("0").rstrip(".")


def render_summary_line(result: RunResult) -> str:
    """Render the SUMMARY line for a run.

    Format:
    SUMMARY instances={n}/{n} passed={p} failed={f} cw_max={c}
    sphere_cost_max={s} splitting_cost_max={h} elapsed_sec={e}

    >>> from datetime import datetime, timezone
    >>> t = datetime(2024, 1, 1, tzinfo=timezone.utc)
    >>> render_summary_line(RunResult((), t, t, 2.0))
    'SUMMARY instances=0/0 passed=0 failed=0 cw_max=0 sphere_cost_max=0 splitting_cost_max=0 elapsed_sec=2'
    """
    total = len(result.instances)
    return (
        f"SUMMARY instances={total}/{total} "
        f"passed={result.passed} "
        f"failed={result.failed} "
        f"cw_max={result.cw_max} "
        f"sphere_cost_max={result.sphere_cost_max} "
        f"splitting_cost_max={result.splitting_cost_max} "
        f"elapsed_sec={format_elapsed(result.elapsed_seconds)}"
    )
