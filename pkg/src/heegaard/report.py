from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..carving.bounds import WidthBounds, tw_bounds_from_cw

"""Bound chain from a diagram's carving width to its tubed splitting.

If the diagram has tree-width at most ``k`` then its carving width is at most ``4(k + 1)``,
so the sphere cost is at most ``4k + 4`` and the splitting cost at most ``8k + 8``. The
conclusion (an essential planar meridional surface with at most ``8k + 8`` boundary components,
or bridge number at most ``4k + 4``) rests on external theorem input and is reported as text.
"""

__all__ = ["REPORT_SCHEMA", "TheoremMainReport", "theorem_main_report"]

REPORT_SCHEMA = "report/v1"


@dataclass(frozen=True)
class TheoremMainReport:
    label: str
    carving_width: int
    bounds: WidthBounds
    k: int
    sphere_cost: int
    splitting_cost: int
    sphere_width: tuple[int, ...] = ()
    splitting_width: str = ""
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def sphere_bound(self) -> int:
        return 4 * self.k + 4

    @property
    def splitting_bound(self) -> int:
        return 8 * self.k + 8

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_text(self) -> str:
        lines = [
            f"knot: {self.label or '(unnamed)'}",
            f"carving width cw = {self.carving_width} (max degree {self.bounds.max_degree})",
            f"tree-width interval from cw: [{self.bounds.tw_lower}, {self.bounds.tw_upper}]",
            f"k = {self.k}: 4k+4 = {self.sphere_bound}, 8k+8 = {self.splitting_bound}",
            f"sphere cost = {self.sphere_cost} width {list(self.sphere_width)}",
            f"splitting cost = {self.splitting_cost} width {self.splitting_width}",
        ]
        for name, passed in self.checks.items():
            lines.append(f"  [{'ok' if passed else 'FAIL'}] {name}")
        lines.append(
            "conclusion: the knot has an essential planar meridional surface with at most "
            f"{self.splitting_bound} boundary components, or bridge number at most "
            f"{self.sphere_bound} (external theorem input: thin multiple Heegaard splittings "
            "have essential thin levels; not recomputed here)"
        )
        return "\n".join(lines)

    def table_rows(self) -> list[dict[str, Any]]:
        """quantity/value rows for tabular output."""
        rows: list[tuple[str, Any]] = [
            ("cw", self.carving_width),
            ("tw interval", f"[{self.bounds.tw_lower}, {self.bounds.tw_upper}]"),
            ("k", self.k),
            ("sphere cost", f"{self.sphere_cost} <= {self.sphere_bound}"),
            ("splitting cost", f"{self.splitting_cost} <= {self.splitting_bound}"),
        ]
        return [{"quantity": q, "value": str(v)} for q, v in rows]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "label": self.label,
            "cw": self.carving_width,
            "max_degree": self.bounds.max_degree,
            "tw_lower": self.bounds.tw_lower,
            "tw_upper": self.bounds.tw_upper,
            "k": self.k,
            "sphere_cost": self.sphere_cost,
            "sphere_bound": self.sphere_bound,
            "splitting_cost": self.splitting_cost,
            "splitting_bound": self.splitting_bound,
            "sphere_width": list(self.sphere_width),
            "splitting_width": self.splitting_width,
            "checks": dict(self.checks),
        }


def theorem_main_report(
    *,
    carving_width: int,
    max_degree: int,
    sphere_cost: int,
    splitting_cost: int,
    k: int | None = None,
    label: str = "",
    sphere_width: tuple[int, ...] = (),
    splitting_width: str = "",
) -> TheoremMainReport:
    """Check the chain; ``k`` defaults to the upper end of the tree-width interval."""
    bounds = tw_bounds_from_cw(carving_width, max_degree)
    if k is None:
        k = bounds.tw_upper
    checks = {
        "sphere cost <= carving width": sphere_cost <= carving_width,
        "splitting cost <= 2 * sphere cost": splitting_cost <= 2 * sphere_cost,
        "sphere cost <= 4k+4": sphere_cost <= 4 * k + 4,
        "splitting cost <= 8k+8": splitting_cost <= 8 * k + 8,
    }
    return TheoremMainReport(
        label=label,
        carving_width=carving_width,
        bounds=bounds,
        k=k,
        sphere_cost=sphere_cost,
        splitting_cost=splitting_cost,
        sphere_width=sphere_width,
        splitting_width=splitting_width,
        checks=checks,
    )
