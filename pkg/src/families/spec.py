from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

"""Family specs such as ``torus:9,7`` or ``pretzel:-2,3,7``."""

__all__ = ["FamilyError", "FamilyKind", "FamilySpec", "parse_family_spec"]


class FamilyError(ValueError):
    """Invalid family parameters, or parameters that give a link."""


class FamilyKind(str, Enum):
    TORUS = "torus"
    PRETZEL = "pretzel"
    SUM = "sum"
    TWO_BRIDGE = "two-bridge"
    PLAT = "plat"


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.params
        if self.kind is FamilyKind.TORUS:
            if len(p) != 2 or min(p) < 2:
                raise FamilyError(f"torus needs two parameters >= 2, got {p}")
            if math.gcd(*p) != 1:
                raise FamilyError(f"torus({p[0]},{p[1]}): gcd {math.gcd(*p)} != 1 gives a link")
        elif self.kind is FamilyKind.PRETZEL:
            if len(p) != 3 or 0 in p:
                raise FamilyError(f"pretzel needs three nonzero parameters, got {p}")
        elif self.kind is FamilyKind.SUM:
            if len(p) != 1 or p[0] < 1:
                raise FamilyError(f"sum needs one parameter >= 1, got {p}")
        elif self.kind is FamilyKind.TWO_BRIDGE:
            if not p or 0 in p:
                raise FamilyError(f"continued fraction entries must be nonzero, got {p}")
        elif self.kind is FamilyKind.PLAT:
            if len(p) not in (1, 2) or p[0] < 1 or (len(p) == 2 and p[1] < 1):
                raise FamilyError(f"plat needs bridges >= 1 and optional twists >= 1, got {p}")

    @property
    def label(self) -> str:
        return f"{self.kind.value}:{','.join(str(x) for x in self.params)}"


def parse_family_spec(text: str) -> FamilySpec:
    kind_text, sep, rest = text.strip().partition(":")
    if not sep:
        raise FamilyError(f"family spec needs 'family:params', got {text!r}")
    try:
        kind = FamilyKind(kind_text.strip().lower())
    except ValueError as e:
        known = ", ".join(k.value for k in FamilyKind)
        raise FamilyError(f"unknown family {kind_text!r} (known: {known})") from e
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError as e:
        raise FamilyError(f"non-integer parameter in {text!r}") from e
    return FamilySpec(kind, params)
