from __future__ import annotations

import math
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from datetime import datetime, timezone

UTC = timezone.utc
from typing import Any

from ..families.corpus import build_family
from ..families.lower_bounds import tw_lower_bound_report
from ..families.spec import FamilyError, parse_family_spec
from ..logging.init import get_logger
from ..models.config_models import GridFamily, OutputFormat, RunConfig
from ..models.pipeline_result import InstanceResult, RunResult
from ..models.violation_record import ViolationRecord
from .orchestrator import instance_result, run_stages
from .progress import ProgressTracker
from .triangulate import build_triangulation

"""Parameter grids producing the acceptance tables.

Rows are computed in a process pool when ``threads > 1`` and always assembled in grid order,
so the table is identical for any thread count. An empty grid gives an empty table.
"""

__all__ = ["DEFAULT_GRID_MAX", "GridRow", "GridResult", "grid_points", "run_grid"]

DEFAULT_GRID_MAX = {
    GridFamily.TORUS: 9,
    GridFamily.PRETZEL: 7,
    GridFamily.SUM: 20,
    GridFamily.TRIANGULATION: 30,
}

logger = get_logger(__name__)


@dataclass(frozen=True)
class GridRow:
    row: dict[str, Any]
    result: InstanceResult


@dataclass(frozen=True)
class GridResult:
    family: GridFamily
    rows: tuple[dict[str, Any], ...]
    run: RunResult
    constant_width: bool | None = None


def _coprime_pairs(limit: int) -> Iterator[tuple[int, int]]:
    for p in range(3, limit + 1):
        for q in range(2, p):
            if math.gcd(p, q) == 1:
                yield p, q


def grid_points(family: GridFamily, limit: int) -> list[str]:
    """Instance specs of a grid, in table order."""
    if family is GridFamily.TORUS or family is GridFamily.TRIANGULATION:
        return [f"torus:{p},{q}" for p, q in _coprime_pairs(limit)]
    if family is GridFamily.SUM:
        return [f"sum:{n}" for n in range(1, limit + 1)]
    odd = [x for x in range(1, limit + 1) if x % 2]
    return [
        f"pretzel:{a},{b},{c}"
        for a in [-x for x in reversed(odd)] + odd
        for b in odd
        for c in odd
        if b <= c
    ]


def _diagram_row(spec: str, cfg: RunConfig) -> GridRow:
    fs = parse_family_spec(spec)
    started = time.perf_counter()
    run = run_stages(build_family(fs), cfg)
    result = instance_result(run, time.perf_counter() - started)
    row = {"family": fs.kind.value, "params": ",".join(map(str, fs.params)), **result.to_row()}
    row.pop("instance")
    row["exact"] = result.exact
    if fs.kind.value == "torus":
        lb = tw_lower_bound_report(*fs.params)
        row["bridge_number"] = lb.bridge_number
        row["tw_min"] = lb.k_min
    return GridRow(row, result)


def _triangulation_row(spec: str, cfg: RunConfig) -> GridRow:
    started = time.perf_counter()
    tr = build_triangulation(spec)
    return GridRow(tr.to_row(), tr.to_result(time.perf_counter() - started))


def _worker(family: GridFamily) -> Callable[[str, RunConfig], GridRow]:
    return _triangulation_row if family is GridFamily.TRIANGULATION else _diagram_row


def _compute(args: tuple[GridFamily, str, RunConfig]) -> GridRow | str:
    family, spec, cfg = args
    try:
        return _worker(family)(spec, cfg)
    except FamilyError as e:
        # 絡み目になるパラメータなどは表から外す
        return f"{spec}: {e}"


def run_grid(family: GridFamily, limit: int, cfg: RunConfig) -> GridResult:
    start = datetime.now(UTC)
    started = time.perf_counter()
    points = grid_points(family, limit)
    # grid は表だけ出す (svg/dot は個別コマンドで)
    cfg = replace(cfg, fmt=OutputFormat.JSON)
    jobs = [(family, spec, cfg) for spec in points]
    outcomes: list[GridRow | str] = []
    with ProgressTracker(len(jobs), description=f"grid {family.value}") as progress:
        if cfg.threads > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
                for spec, out in zip(points, pool.map(_compute, jobs), strict=True):
                    progress.start(spec)
                    outcomes.append(out)
                    progress.finish()
        else:
            for job in jobs:
                progress.start(job[1])
                outcomes.append(_compute(job))
                progress.finish()

    rows: list[dict[str, Any]] = []
    results: list[InstanceResult] = []
    for out in outcomes:
        if isinstance(out, str):
            logger.warning(f"grid: skipped {out}")
            continue
        rows.append(out.row)
        results.append(out.result)

    constant: bool | None = None
    if family is GridFamily.TRIANGULATION and rows:
        widths = [r["width"] for r in rows]
        constant = min(widths) == max(widths)
        for r in rows:
            r["width_constant"] = constant
        if not constant:
            record = ViolationRecord.create(
                f"grid:{family.value}",
                "grid",
                "face-pairing width constant",
                f"widths range over [{min(widths)}, {max(widths)}]",
            )
            results[0] = replace(
                results[0],
                checks={**results[0].checks, "face-pairing width constant": False},
                violations=(*results[0].violations, record),
            )
        logger.info(f"grid triangulation: face-pairing width {sorted(set(widths))}")

    elapsed = time.perf_counter() - started
    run = RunResult(tuple(results), start, datetime.now(UTC), elapsed)
    return GridResult(family, tuple(rows), run, constant)
