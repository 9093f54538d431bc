from __future__ import annotations

import argparse
import logging
import sys
import time
from datetime import datetime, timezone

UTC = timezone.utc
from pathlib import Path

from src.carving.decomposition import CarvingError
from src.config.loader import ConfigError, apply_env, load_config
from src.diagram.embedding import subdivide_to_simple
from src.diagram.export import diagram_to_dict, graph_to_dot
from src.diagram.model import DiagramError
from src.diagram.pd_code import emit_pd
from src.families.corpus import CorpusEntry, build_family, standard_corpus
from src.families.spec import FamilyError, FamilyKind, FamilySpec
from src.logging.init import log_summary, setup_logging
from src.logging.violation_log import ViolationLogBuffer
from src.models.config_models import GridFamily, OutputFormat, PipelineConfig, RunConfig
from src.models.pipeline_result import RunResult
from src.services.artifacts import ArtifactError, ArtifactWriter, dumps_json
from src.services.figures import diagram_svg
from src.services.grid import DEFAULT_GRID_MAX, run_grid
from src.services.orchestrator import PipelineError, artifact_stem, load_entry, run_pipeline
from src.services.summary import render_summary_line
from src.services.triangulate import build_triangulation
from src.triangulation.face_pairing import face_pairing_dot
from src.triangulation.model import TriangulationError

try:  # pragma: no cover - import guard
    from dotenv import load_dotenv
except Exception:  # pragma: no cover
    load_dotenv = None  # type: ignore[assignment]

"""CLI entrypoint.

Subcommands:
- parse / gen-*: write a diagram (JSON + PD, DOT/SVG on request); no SUMMARY line
- carve / realize / spheres / tube / report / pipeline: run the stages up to the named one
- triangulate: torus-knot complement, layered solid torus, prism or drilled block
- grid: acceptance table over a parameter family

Precedence for settings: flag > KNOTWIDTH_* environment (.env) > config/pipeline.yml > default.
"""

EXIT_SUCCESS_ALL = 0
EXIT_PARTIAL_FAILURE = 2
EXIT_FATAL = 1

FATAL_ERRORS = (
    PipelineError,
    DiagramError,
    FamilyError,
    CarvingError,
    TriangulationError,
    ArtifactError,
    OSError,
)

STAGE_COMMANDS = ("carve", "realize", "spheres", "tube", "report")


def _load_env_file(path: Path, override: bool = False) -> None:
    """Load .env using python-dotenv; existing environment variables win unless ``override``."""
    try:
        if path.exists() and load_dotenv is not None:
            load_dotenv(dotenv_path=path, override=override)
    except Exception as e:  # pragma: no cover
        logging.getLogger("knot_width").warning(f"failed to load .env via python-dotenv: {e}")


def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument(
        "--config", type=Path, default=None, help="YAML config (default config/pipeline.yml)"
    )
    p.add_argument("--exact-cap", type=int, default=None, help="exact carving solver vertex cap")
    p.add_argument("--bond", action="store_true", default=None, help="restrict to bond carvings")
    p.add_argument("--exact-only", action="store_true", default=None,
                   help="treat an exceeded solver cap as fatal")
    p.add_argument("--format", dest="fmt", choices=[f.value for f in OutputFormat], default=None)
    p.add_argument("--seed", type=int, default=None, help="seed for the random corpus")
    p.add_argument("--threads", type=int, default=None, help="grid worker processes")
    p.add_argument("--out", type=Path, default=None, help="artifact directory")
    p.add_argument("--k", type=int, default=None, help="tree-width bound for the report")
    p.add_argument("--debug", action="store_true", help="Enable debug logging")
    return p


def _parse_args(argv: list[str]) -> argparse.Namespace:
    common = _common_flags()
    p = argparse.ArgumentParser(
        prog="knot-width",
        description="knot diagram carvings -> sphere-decompositions -> Heegaard splittings",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("parse", parents=[common], help="parse a PD file").add_argument("input")
    g = sub.add_parser("gen-torus", parents=[common], help="T(p,q) closed braid")
    g.add_argument("p", type=int)
    g.add_argument("q", type=int)
    g = sub.add_parser("gen-pretzel", parents=[common], help="pretzel P(a,b,c)")
    for name in ("a", "b", "c"):
        g.add_argument(name, type=int)
    sub.add_parser("gen-sum", parents=[common], help="connected sum of n trefoils").add_argument(
        "n", type=int
    )
    sub.add_parser(
        "gen-two-bridge", parents=[common], help="two-bridge knot from a continued fraction"
    ).add_argument("cf", type=int, nargs="+")
    g = sub.add_parser("gen-plat", parents=[common], help="b-bridge plat")
    g.add_argument("bridges", type=int)
    g.add_argument("--twists", type=int, default=None)

    for stage in STAGE_COMMANDS:
        g = sub.add_parser(stage, parents=[common], help=f"run the pipeline up to {stage}")
        g.add_argument("input", help="PD file, diagram JSON or family spec (torus:3,2)")
    sub.add_parser("pipeline", parents=[common], help="full pipeline").add_argument(
        "inputs", nargs="+", help="PD files, family specs, or 'corpus'"
    )
    g = sub.add_parser("triangulate", parents=[common], help="build a triangulation")
    g.add_argument("target", help="torus:P,Q | lst:P,U | prism | drilled")
    g = sub.add_parser("grid", parents=[common], help="acceptance table over a family")
    g.add_argument("family", choices=[f.value for f in GridFamily])
    g.add_argument("--max", dest="grid_max", type=int, default=None, help="largest parameter")
    return p.parse_args(argv)


def _run_config(args: argparse.Namespace, base: PipelineConfig) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        exact_cap=base.exact_cap if args.exact_cap is None else args.exact_cap,
        bond=base.bond if args.bond is None else args.bond,
        exact_only=base.exact_only if args.exact_only is None else args.exact_only,
        fmt=OutputFormat(args.fmt) if args.fmt else base.fmt,
        seed=base.seed if args.seed is None else args.seed,
        threads=base.threads if args.threads is None else args.threads,
        out_dir=base.out_dir if args.out is None else args.out,
        k=args.k,
        grid_family=GridFamily(args.family) if args.command == "grid" else None,
        grid_max=getattr(args, "grid_max", None),
    )


def _generated_spec(args: argparse.Namespace) -> FamilySpec:
    if args.command == "gen-torus":
        return FamilySpec(FamilyKind.TORUS, (args.p, args.q))
    if args.command == "gen-pretzel":
        return FamilySpec(FamilyKind.PRETZEL, (args.a, args.b, args.c))
    if args.command == "gen-sum":
        return FamilySpec(FamilyKind.SUM, (args.n,))
    if args.command == "gen-two-bridge":
        return FamilySpec(FamilyKind.TWO_BRIDGE, tuple(args.cf))
    params = (args.bridges,) if args.twists is None else (args.bridges, args.twists)
    return FamilySpec(FamilyKind.PLAT, params)


def _cmd_diagram(entry: CorpusEntry, cfg: RunConfig) -> int:
    """parse / gen-*: write the diagram and report its size."""
    logger = setup_logging()
    d = entry.diagram
    writer = ArtifactWriter(cfg.out_dir)
    prefix = artifact_stem(entry.name)
    writer.write_json(f"{prefix}/diagram.json", diagram_to_dict(d))
    writer.write_text(f"{prefix}/diagram.pd", emit_pd(d) + "\n")
    if cfg.fmt is OutputFormat.DOT:
        writer.write_text(f"{prefix}/diagram.dot", graph_to_dot(d))
    elif cfg.fmt is OutputFormat.SVG:
        writer.write_text(f"{prefix}/diagram.svg", diagram_svg(subdivide_to_simple(d)))
    logger.info(
        f"{entry.name}: crossings={d.crossing_count} edges={d.edge_count} "
        f"faces={d.graph.face_count} -> {cfg.out_dir / prefix}"
    )
    return EXIT_SUCCESS_ALL


def _finish(result: RunResult, violations: ViolationLogBuffer) -> int:
    logger = setup_logging()
    path = violations.flush()
    if path is not None:
        logger.info(f"violations written to {path}")
    line = render_summary_line(result)
    log_summary(line[len("SUMMARY "):])
    return EXIT_PARTIAL_FAILURE if result.failed else EXIT_SUCCESS_ALL


def _cmd_stages(inputs: list[str], cfg: RunConfig, until: str) -> int:
    entries: list[CorpusEntry] = []
    for source in inputs:
        if source == "corpus":
            entries.extend(standard_corpus(seed=cfg.seed))
        else:
            entries.append(load_entry(source))
    violations = ViolationLogBuffer()
    result = run_pipeline(entries, cfg, violations=violations, until=until)
    return _finish(result, violations)


def _cmd_triangulate(cfg: RunConfig, target: str) -> int:
    logger = setup_logging()
    started = time.perf_counter()
    start = datetime.now(UTC)
    tr = build_triangulation(target)
    writer = ArtifactWriter(cfg.out_dir)
    prefix = artifact_stem(tr.target)
    tri = tr.triangulation
    writer.write_json(f"{prefix}/triangulation.json", tri.to_dict())
    writer.write_text(f"{prefix}/triangulation.tri", tri.to_interchange())
    if cfg.fmt is OutputFormat.DOT:
        writer.write_text(f"{prefix}/face_pairing.dot", face_pairing_dot(tr.width.graph))
    census = tri.census()
    logger.info(
        f"{tr.target}: V={census.vertices} E={census.edges} F={census.faces} "
        f"T={census.tetrahedra} face-pairing width={tr.width.width}"
    )
    if tr.complement is not None:
        tc = tr.complement
        logger.info(
            f"{tr.target}: u={tc.u} v={tc.v} pv-qu={tc.p * tc.v - tc.q * tc.u} "
            f"U{tc.u_slope} V{tc.v_slope} sizes={list(tc.sizes)}"
        )
    for v in tr.violations():
        logger.error(f"{v.instance} {v.stage}: {v.check} {v.detail}".rstrip())
    elapsed = time.perf_counter() - started
    result = RunResult((tr.to_result(elapsed),), start, datetime.now(UTC), elapsed)
    violations = ViolationLogBuffer()
    violations.extend(result.violations)
    return _finish(result, violations)


def _cmd_grid(cfg: RunConfig, base: PipelineConfig) -> int:
    logger = setup_logging()
    family = cfg.grid_family or GridFamily.TORUS
    limit = cfg.grid_max
    if limit is None:
        limit = base.grid_max.get(family.value, DEFAULT_GRID_MAX[family])
    grid = run_grid(family, limit, cfg)
    writer = ArtifactWriter(cfg.out_dir)
    table_fmt = "md" if cfg.fmt is OutputFormat.MD else "csv"
    path = writer.write_table(f"grid-{family.value}.{table_fmt}", list(grid.rows), table_fmt)
    writer.write_text(f"grid-{family.value}.json", dumps_json(list(grid.rows)))
    logger.info(f"grid {family.value} (max {limit}): {len(grid.rows)} rows -> {path}")
    violations = ViolationLogBuffer()
    violations.extend(grid.run.violations)
    return _finish(grid.run, violations)


def main(argv: list[str] | None = None) -> int:
    logger = setup_logging()

    # [] が渡されたときに sys.argv を読まないよう None のときだけ参照する
    if argv is None:
        argv = sys.argv[1:]
    args = _parse_args(argv)
    _load_env_file(Path(".env"))
    try:
        base = apply_env(load_config(args.config))
        cfg = _run_config(args, base)
    except ConfigError as e:
        logger.error(f"config: {e}")
        return EXIT_FATAL
    problems = cfg.problems()
    if problems:
        logger.error(f"config: {'; '.join(problems)}")
        return EXIT_FATAL

    if args.debug:
        for h in logger.handlers:
            h.setLevel(logging.DEBUG)
        logger.setLevel(logging.DEBUG)
        logger.debug("debug mode enabled")

    try:
        if args.command.startswith("gen-"):
            return _cmd_diagram(build_family(_generated_spec(args)), cfg)
        if args.command == "parse":
            return _cmd_diagram(load_entry(args.input), cfg)
        if args.command in STAGE_COMMANDS:
            return _cmd_stages([args.input], cfg, args.command)
        if args.command == "pipeline":
            return _cmd_stages(args.inputs, cfg, "report")
        if args.command == "triangulate":
            return _cmd_triangulate(cfg, args.target)
        return _cmd_grid(cfg, base)
    except FATAL_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_FATAL


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
