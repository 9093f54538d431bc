from __future__ import annotations

import math
from dataclasses import dataclass

from .decomposition import CarvingError

"""Tree-width interval implied by a carving width.

With maximum degree ``d``: ``2/3 (tw + 1) <= cw <= d (tw + 1)``.
"""

__all__ = ["WidthBounds", "tw_bounds_from_cw"]


@dataclass(frozen=True)
class WidthBounds:
    cw: int
    tw_lower: int
    tw_upper: int
    max_degree: int

    def contains(self, tw: int) -> bool:
        return self.tw_lower <= tw <= self.tw_upper


def tw_bounds_from_cw(cw: int, d: int) -> WidthBounds:
    if cw < 1 or d < 1:
        raise CarvingError(f"tw bounds need cw >= 1 and d >= 1 (got cw={cw}, d={d})")
    lower = max(0, math.ceil(cw / d) - 1)
    upper = (3 * cw) // 2 - 1
    return WidthBounds(cw=cw, tw_lower=lower, tw_upper=upper, max_degree=d)
