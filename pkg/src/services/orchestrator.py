from __future__ import annotations

import json
import re
import time
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone

UTC = timezone.utc
from pathlib import Path

import networkx as nx

from ..carving.decomposition import CarvingDecomposition, CarvingError, SolverCapExceeded, is_bond
from ..carving.exact import exact_carving_width
from ..carving.heuristic import heuristic_carving
from ..diagram.embedding import SimpleDiagramGraph, subdivide_to_simple
from ..diagram.export import diagram_from_dict, diagram_to_dict, dual_to_dot, graph_to_dot
from ..diagram.model import Diagram
from ..diagram.pd_code import parse_pd
from ..families.corpus import CorpusEntry, build_family
from ..families.spec import parse_family_spec
from ..heegaard.model import HeegaardError, MultipleHeegaardSplitting
from ..heegaard.report import TheoremMainReport, theorem_main_report
from ..heegaard.tubing import tube
from ..logging.init import get_logger
from ..logging.violation_log import ViolationLogBuffer
from ..models.config_models import OutputFormat, RunConfig
from ..models.pipeline_result import InstanceResult, RunResult
from ..models.violation_record import ViolationRecord
from ..realize.curves import CurveFamily, RealizationError, realize
from ..realize.validate import RealizationReport, validate
from ..spheres.decompose import check_census, spheres_from_blocks, spheres_from_carving
from ..spheres.model import SphereDecomposition, SphereDecompositionError
from .artifacts import ArtifactWriter, render_table
from .figures import diagram_svg
from .progress import ProgressTracker

"""Pipeline orchestration: subdivide -> carve -> realize -> spheres -> tube -> report.

Every stage's artifact is written before any verdict is taken, so a failing instance can be
inspected from its output directory. Failed checks become ``ViolationRecord`` entries; only
input errors and an exceeded solver cap under ``exact_only`` abort the run (``PipelineError``).
"""

__all__ = [
    "STAGES",
    "PipelineError",
    "PipelineRun",
    "load_entry",
    "carve",
    "run_stages",
    "write_artifacts",
    "instance_result",
    "run_instance",
    "run_pipeline",
    "diagram_report",
    "artifact_stem",
    "report_markdown",
]

STAGES = ("carve", "realize", "spheres", "tube", "report")

logger = get_logger(__name__)


class PipelineError(ValueError):
    """Fatal orchestration error (bad input, or solver cap exceeded under exact_only)."""


@dataclass
class PipelineRun:
    """Everything one instance produced; later stages stay ``None`` after a stage failure."""

    entry: CorpusEntry
    simple: SimpleDiagramGraph
    decomposition: CarvingDecomposition
    exact: bool
    curves: CurveFamily | None = None
    realization: RealizationReport | None = None
    spheres: SphereDecomposition | None = None
    splitting: MultipleHeegaardSplitting | None = None
    report: TheoremMainReport | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    violations: list[ViolationRecord] = field(default_factory=list)

    @property
    def label(self) -> str:
        return self.entry.name

    def fail(self, stage: str, check: str, detail: str = "") -> None:
        self.checks[check] = False
        self.violations.append(ViolationRecord.create(self.label, stage, check, detail))

    def record(self, stage: str, check: str, passed: bool, detail: str = "") -> None:
        if passed:
            self.checks.setdefault(check, True)
        else:
            self.fail(stage, check, detail)


def artifact_stem(label: str) -> str:
    """File-system safe directory name for an instance label."""
    stem = re.sub(r"[^A-Za-z0-9._-]+", "_", label).strip("_")
    return stem or "instance"


def load_entry(source: str) -> CorpusEntry:
    """A PD file, a diagram JSON artifact, or a family spec such as ``torus:3,2``."""
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        if path.suffix == ".json":
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise PipelineError(f"{path}: invalid json: {e}") from e
            d = diagram_from_dict(data)
            return CorpusEntry(d.name or path.stem, d)
        return CorpusEntry(path.stem, parse_pd(text, name=path.stem))
    if ":" not in source:
        raise PipelineError(f"input not found: {source}")
    return build_family(parse_family_spec(source))


def _max_degree(sg: SimpleDiagramGraph) -> int:
    return max((sg.graph.degree(v) for v in range(sg.vertex_count)), default=0)


def carve(sg: SimpleDiagramGraph, cfg: RunConfig) -> tuple[CarvingDecomposition, bool]:
    """Bond carving for realization: exact up to the cap, heuristic beyond.

    Returns the decomposition and whether it is provably optimal.
    """
    simple = nx.Graph(sg.to_networkx())
    bond_only = cfg.bond or nx.is_biconnected(simple)
    try:
        _, dec = exact_carving_width(sg, bond_only=bond_only, cap=cfg.exact_cap)
        return dec, True
    except SolverCapExceeded as e:
        if cfg.exact_only:
            raise PipelineError(f"carve: {e}") from e
        logger.warning(f"carve: {e}; falling back to heuristic carving")
    except CarvingError as e:
        if cfg.exact_only or cfg.bond:
            raise PipelineError(f"carve: {e}") from e
        logger.warning(f"carve: {e}; falling back to heuristic carving")
    return heuristic_carving(sg), False


def run_stages(entry: CorpusEntry, cfg: RunConfig, *, until: str = "report") -> PipelineRun:
    """Run the stages up to and including ``until`` in memory.

    Check failures are recorded, not raised. Template entries skip carving and realization
    and start from their own sphere-decomposition.
    """
    if until not in STAGES:
        raise PipelineError(f"unknown stage {until!r} (stages: {', '.join(STAGES)})")
    last = STAGES.index(until)
    if entry.template is not None:
        sd = entry.template
        run = PipelineRun(entry, sd.graph, sd.decomposition, exact=False, curves=sd.curves)
        run.spheres = sd
    else:
        sg = subdivide_to_simple(entry.diagram)
        dec, exact = carve(sg, cfg)
        run = PipelineRun(entry, sg, dec, exact=exact)
    dec = run.decomposition
    if entry.template is None:
        run.record("carve", "bond carving", is_bond(dec), f"width {dec.width}")
    if last < STAGES.index("realize"):
        return run

    if run.spheres is None:
        try:
            run.curves = realize(run.simple, dec)
        except RealizationError as e:
            run.fail("realize", "curves realizable", str(e))
    if run.curves is not None:
        run.realization = validate(run.curves)
        for c in run.realization.checks:
            run.record("realize", c.name, c.passed, c.witness)
    if last < STAGES.index("spheres"):
        return run

    if run.spheres is None:
        try:
            if run.curves is not None and run.realization is not None and run.realization.ok:
                run.spheres = spheres_from_carving(run.simple, run.curves, label=run.label)
            else:
                run.spheres = spheres_from_blocks(run.simple, dec, label=run.label)
        except SphereDecompositionError as e:
            run.fail("spheres", "sphere-decomposition", str(e))
            return run
    sd = run.spheres
    census = check_census(sd)
    run.record("spheres", "component census", not census, "; ".join(census))
    if last < STAGES.index("tube"):
        return run

    try:
        run.splitting = tube(sd)
    except HeegaardError as e:
        run.fail("tube", "tubing", str(e))
        return run
    mhs = run.splitting
    run.record("tube", "splitting structure", not mhs.structure_problems,
               "; ".join(mhs.structure_problems))
    leaves = sd.census()["leaves"]
    run.record("tube", "thick spheres = 2L-2", len(mhs.thick) == 2 * leaves - 2,
               f"{len(mhs.thick)} thick spheres for {leaves} leaves")
    if last < STAGES.index("report"):
        return run

    run.report = theorem_main_report(
        carving_width=dec.width,
        max_degree=_max_degree(run.simple),
        sphere_cost=sd.cost(),
        splitting_cost=mhs.cost(),
        k=cfg.k,
        label=run.label,
        sphere_width=sd.width_list(),
        splitting_width=str(mhs.width()),
    )
    for name, passed in run.report.checks.items():
        run.record("report", name, passed, f"cw={dec.width} k={run.report.k}")
    return run


def diagram_report(
    d: Diagram, *, k: int | None = None, cfg: RunConfig | None = None
) -> TheoremMainReport:
    """Full pipeline on one diagram, returning only the bound-chain report."""
    base = cfg or RunConfig(command="report")
    if k is not None:
        base = replace(base, k=k)
    run = run_stages(CorpusEntry(d.name, d), base)
    if run.report is None:
        detail = "; ".join(f"{v.stage}: {v.detail}" for v in run.violations)
        raise PipelineError(f"{d.name or 'diagram'}: pipeline did not reach the report: {detail}")
    return run.report


def report_markdown(report: TheoremMainReport) -> str:
    return f"### {report.label or 'report'}\n\n" + render_table(report.table_rows(), "md")


def write_artifacts(run: PipelineRun, writer: ArtifactWriter, fmt: OutputFormat) -> None:
    """JSON for every stage reached, plus the extras ``fmt`` asks for."""
    prefix = artifact_stem(run.label)
    writer.write_json(f"{prefix}/diagram.json", diagram_to_dict(run.entry.diagram))
    carving = run.decomposition.to_dict()
    carving["label"] = carving.get("label") or run.label
    writer.write_json(f"{prefix}/carving.json", carving)
    if run.curves is not None:
        writer.write_json(f"{prefix}/curves.json", run.curves.to_dict())
    if run.spheres is not None:
        writer.write_json(f"{prefix}/spheres.json", run.spheres.to_dict())
    if run.splitting is not None:
        writer.write_json(f"{prefix}/splitting.json", run.splitting.to_dict())
    if run.report is not None:
        writer.write_json(f"{prefix}/report.json", run.report.to_dict())
        writer.write_text(f"{prefix}/report.txt", run.report.to_text() + "\n")

    if fmt is OutputFormat.DOT:
        writer.write_text(f"{prefix}/diagram.dot", graph_to_dot(run.simple))
        writer.write_text(f"{prefix}/dual.dot", dual_to_dot(run.simple))
        tree = nx.nx_pydot.to_pydot(run.decomposition.to_networkx()).to_string()
        writer.write_text(f"{prefix}/carving.dot", str(tree))
        if run.spheres is not None:
            comp = nx.nx_pydot.to_pydot(run.spheres.component_tree()).to_string()
            writer.write_text(f"{prefix}/components.dot", str(comp))
    elif fmt is OutputFormat.SVG:
        writer.write_text(f"{prefix}/diagram.svg", diagram_svg(run.simple, run.curves,
                                                               title=run.label))
    elif fmt is OutputFormat.MD and run.report is not None:
        writer.write_text(f"{prefix}/report.md", report_markdown(run.report))


def instance_result(run: PipelineRun, elapsed: float) -> InstanceResult:
    rep = run.report
    sd = run.spheres
    mhs = run.splitting
    return InstanceResult(
        instance=run.label,
        cw=run.decomposition.width,
        max_degree=rep.bounds.max_degree if rep else _max_degree(run.simple),
        tw_lower=rep.bounds.tw_lower if rep else 0,
        tw_upper=rep.bounds.tw_upper if rep else 0,
        k=rep.k if rep else 0,
        sphere_cost=sd.cost() if sd else 0,
        splitting_cost=mhs.cost() if mhs else 0,
        sphere_width=sd.width_list() if sd else (),
        splitting_width=str(mhs.width()) if mhs else "",
        exact=run.exact,
        checks=dict(run.checks),
        violations=tuple(run.violations),
        elapsed_seconds=elapsed,
    )


def run_instance(
    entry: CorpusEntry, cfg: RunConfig, writer: ArtifactWriter, *, until: str = "report"
) -> InstanceResult:
    started = time.perf_counter()
    run = run_stages(entry, cfg, until=until)
    write_artifacts(run, writer, cfg.fmt)
    result = instance_result(run, time.perf_counter() - started)
    for v in run.violations:
        logger.error(f"{v.instance} {v.stage}: {v.check} {v.detail}".rstrip())
    source = "exact" if result.exact else ("template" if entry.template else "heuristic")
    logger.info(
        f"{entry.name}: cw={result.cw} ({source}) "
        f"sphere_cost={result.sphere_cost} splitting_cost={result.splitting_cost} "
        f"width={list(result.sphere_width)}"
    )
    return result


def run_pipeline(
    entries: Sequence[CorpusEntry],
    cfg: RunConfig,
    *,
    violations: ViolationLogBuffer | None = None,
    until: str = "report",
) -> RunResult:
    """Run every entry in order, writing artifacts under ``cfg.out_dir``."""
    start = datetime.now(UTC)
    started = time.perf_counter()
    writer = ArtifactWriter(cfg.out_dir)
    results: list[InstanceResult] = []
    with ProgressTracker(len(entries)) as progress:
        for entry in entries:
            progress.start(entry.name)
            result = run_instance(entry, cfg, writer, until=until)
            results.append(result)
            if violations is not None:
                violations.extend(result.violations)
            progress.finish(cw=result.cw, cost=result.sphere_cost)
    if len(results) > 1:
        rows = [r.to_row() for r in results]
        table_fmt = "md" if cfg.fmt is OutputFormat.MD else "csv"
        writer.write_text(f"pipeline.{table_fmt}", render_table(rows, table_fmt))
    elapsed = time.perf_counter() - started
    return RunResult(
        instances=tuple(results),
        start_time=start,
        end_time=datetime.now(UTC),
        elapsed_seconds=elapsed,
    )
