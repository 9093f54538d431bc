from __future__ import annotations

import math
from dataclasses import dataclass

from .spec import FamilyError

"""Diagrammatic tree-width lower bounds for torus knots.

A diagram of tree-width ``k`` forces an essential planar meridional surface with at most
``8k + 8`` boundary components or bridge number at most ``4k + 4``. Torus knots have no
essential planar meridional surface (external input) and bridge number ``min(p, q)``
(external input), so every diagram of T(p,q) has tree-width ``k`` with ``4k + 4 >= min(p, q)``,
that is ``k >= ceil((min(p, q) - 4) / 4)``.
"""

__all__ = ["LowerBoundReport", "tw_lower_bound_report"]


@dataclass(frozen=True)
class LowerBoundReport:
    p: int
    q: int
    bridge_number: int
    k_min: int

    def to_text(self) -> str:
        b = self.bridge_number
        if self.k_min == 0:
            verdict = f"b={b} <= 4*0+4: no nontrivial bound (tw >= 0)"
        else:
            verdict = (
                f"b={b} > 4k+4 for every k < {self.k_min}: every diagram of "
                f"T({self.p},{self.q}) has tree-width >= {self.k_min}"
            )
        return (
            f"T({self.p},{self.q}): bridge number min(p,q) = {b} "
            "[external theorem input: bridge number of torus knots; no essential planar "
            f"meridional surface]; {verdict}"
        )

    def to_row(self) -> dict[str, int]:
        return {"p": self.p, "q": self.q, "bridge_number": self.bridge_number, "tw_min": self.k_min}


def tw_lower_bound_report(p: int, q: int) -> LowerBoundReport:
    if p < 2 or q < 2:
        raise FamilyError(f"torus knot parameters must be >= 2, got ({p},{q})")
    if math.gcd(p, q) != 1:
        raise FamilyError(f"T({p},{q}) is a link: gcd {math.gcd(p, q)} != 1")
    b = min(p, q)
    return LowerBoundReport(p=p, q=q, bridge_number=b, k_min=max(0, math.ceil((b - 4) / 4)))
