from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any

from .violation_record import ViolationRecord

"""Result models for pipeline runs and grids.

``InstanceResult`` is one diagram pushed through carve -> realize -> spheres -> tube -> report;
``RunResult`` aggregates instances for the SUMMARY line.
"""

__all__ = ["InstanceResult", "RunResult"]


@dataclass(frozen=True)
class InstanceResult:
    instance: str
    cw: int
    max_degree: int
    tw_lower: int
    tw_upper: int
    k: int
    sphere_cost: int
    splitting_cost: int
    sphere_width: tuple[int, ...] = ()
    splitting_width: str = ""
    exact: bool = False  # cw came from the exact solver (else heuristic/template)
    checks: dict[str, bool] = field(default_factory=dict)
    violations: tuple[ViolationRecord, ...] = ()
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations and all(self.checks.values())

    def to_row(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "cw": self.cw,
            "tw_interval": f"[{self.tw_lower},{self.tw_upper}]",
            "k": self.k,
            "sphere_cost": self.sphere_cost,
            "splitting_cost": self.splitting_cost,
            "sphere_width": " ".join(map(str, self.sphere_width)),
            "checks": "pass" if self.passed else "FAIL",
        }


@dataclass(frozen=True)
class RunResult:
    instances: tuple[InstanceResult, ...]
    start_time: datetime
    end_time: datetime
    elapsed_seconds: float

    @property
    def passed(self) -> int:
        return sum(1 for r in self.instances if r.passed)

    @property
    def failed(self) -> int:
        return len(self.instances) - self.passed

    def _max(self, attr: str) -> int:
        return max((getattr(r, attr) for r in self.instances), default=0)

    @property
    def cw_max(self) -> int:
        return self._max("cw")

    @property
    def sphere_cost_max(self) -> int:
        return self._max("sphere_cost")

    @property
    def splitting_cost_max(self) -> int:
        return self._max("splitting_cost")

    @property
    def violations(self) -> list[ViolationRecord]:
        return [v for r in self.instances for v in r.violations]
