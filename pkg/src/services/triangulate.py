from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..logging.init import get_logger
from ..models.pipeline_result import InstanceResult
from ..models.violation_record import ViolationRecord
from ..triangulation.blocks import drilled_block, prism_block
from ..triangulation.complement import TorusComplement, torus_complement
from ..triangulation.face_pairing import FacePairingWidth, face_pairing_width, is_daisy_chain
from ..triangulation.layered import (
    SlopeTriple,
    layered_solid_torus,
    normalize_slope,
    slope_problems,
)
from ..triangulation.model import Triangulation, TriangulationError

"""Triangulation targets for the ``triangulate`` command and the triangulation grid.

Targets: ``torus:P,Q`` (knot complement), ``lst:P,U`` (layered solid torus), ``prism`` and
``drilled``. Each build carries its structural checks and a face-pairing width.
"""

__all__ = [
    "LST_WIDTH_BOUND",
    "TriangulationRun",
    "parse_target",
    "build_triangulation",
]

# 一本の daisy chain: 境界の切断は 2 重辺 1 本、内部の四面体の次数は 4
LST_WIDTH_BOUND = 4

logger = get_logger(__name__)


@dataclass(frozen=True)
class TriangulationRun:
    target: str
    triangulation: Triangulation
    width: FacePairingWidth
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)
    complement: TorusComplement | None = None
    slope: SlopeTriple | None = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def violations(self) -> list[ViolationRecord]:
        return [
            ViolationRecord.create(self.target, "triangulate", name, self.details.get(name, ""))
            for name, ok in self.checks.items()
            if not ok
        ]

    def to_result(self, elapsed: float = 0.0) -> InstanceResult:
        """Pipeline-shaped result: ``cw`` carries the face-pairing width, costs are 0."""
        return InstanceResult(
            instance=self.target,
            cw=self.width.width,
            max_degree=self.width.max_degree,
            tw_lower=0,
            tw_upper=0,
            k=0,
            sphere_cost=0,
            splitting_cost=0,
            checks=dict(self.checks),
            violations=tuple(self.violations()),
            elapsed_seconds=elapsed,
        )

    def to_row(self) -> dict[str, Any]:
        census = self.triangulation.census()
        row: dict[str, Any] = {"target": self.target}
        tc = self.complement
        if tc is not None:
            row.update(
                p=tc.p, q=tc.q, u=tc.u, v=tc.v,
                size_u=tc.sizes[0], size_q=tc.sizes[1], size_v=tc.sizes[2],
                det=tc.determinant,
            )
        if self.slope is not None:
            row["slope"] = str(self.slope)
        row.update(
            tetrahedra=census.tetrahedra,
            vertices=census.vertices,
            edges=census.edges,
            width=self.width.width,
            checks="pass" if self.passed else "FAIL",
        )
        return row


def parse_target(text: str) -> tuple[str, tuple[int, ...]]:
    kind, _, rest = text.strip().partition(":")
    kind = kind.lower()
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError as e:
        raise TriangulationError(f"non-integer parameter in {text!r}") from e
    arity = {"torus": 2, "lst": 2, "prism": 0, "drilled": 0}
    if kind not in arity:
        raise TriangulationError(
            f"unknown triangulation target {kind!r} (known: torus:P,Q lst:P,U prism drilled)"
        )
    if len(params) != arity[kind]:
        raise TriangulationError(f"{kind} takes {arity[kind]} parameters, got {params}")
    return kind, params


class _Checks:
    def __init__(self) -> None:
        self.checks: dict[str, bool] = {}
        self.details: dict[str, str] = {}

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = ok
        if not ok and detail:
            self.details[name] = detail


def _common(tri: Triangulation, c: _Checks, tori: int) -> None:
    problems = tri.check_gluings()
    c.add("gluings involutive", not problems, "; ".join(problems[:3]))
    c.add("orientable", tri.is_orientable())
    comps = tri.boundary_components()
    chis = [b.euler_characteristic for b in comps]
    c.add(
        f"{tori} boundary tori",
        len(comps) == tori and all(x == 0 for x in chis),
        f"{len(comps)} components with euler characteristics {chis}",
    )


def _lst_checks(tri: Triangulation, triple: SlopeTriple, c: _Checks, prefix: str = "") -> None:
    slope = slope_problems(tri, triple)
    c.add(f"{prefix}meridian slope {triple}", not slope, "; ".join(slope))
    c.add(f"{prefix}daisy chain", is_daisy_chain(tri.face_pairing_graph()))


def build_triangulation(text: str) -> TriangulationRun:
    kind, params = parse_target(text)
    c = _Checks()
    complement: TorusComplement | None = None
    slope: SlopeTriple | None = None
    if kind == "torus":
        p, q = params
        complement = torus_complement(p, q)
        tri = complement.triangulation
        _common(tri, c, 1)
        c.add("bezout pv-qu=1", p * complement.v - q * complement.u == 1)
        c.add("meridians meet once", abs(complement.determinant) == 1,
              f"determinant {complement.determinant}")
        for name, (a, b) in (("U", (p, complement.u)), ("V", (q, complement.v))):
            piece, triple = layered_solid_torus(a, b)
            _lst_checks(piece, triple, c, prefix=f"{name} ")
        target = f"torus:{p},{q}"
    elif kind == "lst":
        p, u = normalize_slope(*params)
        tri, slope = layered_solid_torus(p, u)
        _common(tri, c, 1)
        c.add("one vertex", tri.census().vertices == 1)
        _lst_checks(tri, slope, c)
        target = f"lst:{p},{u}"
    elif kind == "prism":
        tri = prism_block()
        _common(tri, c, 2)
        c.add("6 tetrahedra", tri.size == 6, f"{tri.size} tetrahedra")
        target = "prism"
    else:
        tri = drilled_block()
        _common(tri, c, 3)
        c.add("drilled", tri.drilled)
        target = "drilled"

    width = face_pairing_width(tri)
    if kind == "lst":
        c.add(f"width <= {LST_WIDTH_BOUND}", width.width <= LST_WIDTH_BOUND,
              f"width {width.width}")
    logger.debug(f"triangulate {target}: {tri.size} tetrahedra, width {width.width}")
    return TriangulationRun(target, tri, width, c.checks, c.details, complement, slope)
