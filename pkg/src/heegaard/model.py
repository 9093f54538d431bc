from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any

from ..spheres.model import Sphere, SphereDecomposition

"""Multiple Heegaard splittings built from sphere-decompositions.

Every surface here is a sphere. A compression body is kept symbolically: its kind, the thick
sphere on its ``+`` side, the thin spheres on its ``-`` side and how many of its strands are
vertical arcs or bridges.
"""

__all__ = [
    "SPLITTING_SCHEMA",
    "HeegaardError",
    "BodyKind",
    "StrandType",
    "ThickSphere",
    "CompressionBody",
    "SplittingWidth",
    "MultipleHeegaardSplitting",
]

SPLITTING_SCHEMA = "splitting/v1"


class HeegaardError(ValueError):
    """Tubing failure or a compression body that breaks its kind's rules."""


class BodyKind(str, Enum):
    BALL = "ball"
    SHELL = "shell"
    PANTS = "pants"


class StrandType(str, Enum):
    VERTICAL = "vertical"
    BRIDGE = "bridge"


@dataclass(frozen=True)
class ThickSphere:
    id: int
    component: int
    weight: int
    tube: tuple[int, int] | None = None
    genus: int = 0


@dataclass(frozen=True)
class CompressionBody:
    id: int
    kind: BodyKind
    plus: int
    plus_weight: int
    minus: tuple[int, ...]
    minus_weights: tuple[int, ...]
    verticals: int
    bridges: int
    case: str

    @property
    def strand_types(self) -> tuple[StrandType, ...]:
        return (StrandType.VERTICAL,) * self.verticals + (StrandType.BRIDGE,) * self.bridges


@dataclass(frozen=True, order=True)
class SplittingWidth:
    """Thick-sphere complexities ``(genus, |F ∩ K|)``, largest first."""

    complexities: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, pairs: list[tuple[int, int]]) -> SplittingWidth:
        return cls(tuple(sorted(pairs, reverse=True)))

    @property
    def cost(self) -> int:
        return max((w for _, w in self.complexities), default=0)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({g},{w})" for g, w in self.complexities) + "}"


@dataclass(frozen=True)
class MultipleHeegaardSplitting:
    spheres: SphereDecomposition
    thick: tuple[ThickSphere, ...]
    bodies: tuple[CompressionBody, ...]

    @property
    def thin(self) -> tuple[Sphere, ...]:
        return self.spheres.spheres

    def cost(self) -> int:
        return max((t.weight for t in self.thick), default=0)

    def width(self) -> SplittingWidth:
        return SplittingWidth.of([(t.genus, t.weight) for t in self.thick])

    @cached_property
    def structure_problems(self) -> tuple[str, ...]:
        """Each thick sphere bounds two bodies on their + side, each thin sphere two on -."""
        problems = []
        plus = Counter(b.plus for b in self.bodies)
        for t in self.thick:
            if plus[t.id] != 2:
                problems.append(f"thick sphere {t.id} is the + boundary of {plus[t.id]} bodies")
        minus = Counter(s for b in self.bodies for s in b.minus)
        for s in self.thin:
            if minus[s.id] != 2:
                problems.append(f"thin sphere {s.id} is the - boundary of {minus[s.id]} bodies")
        if any(t.genus for t in self.thick):
            problems.append("thick surface of positive genus")
        return tuple(problems)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SPLITTING_SCHEMA,
            "label": self.spheres.label,
            "thick": [
                {
                    "id": t.id,
                    "component": t.component,
                    "weight": t.weight,
                    "genus": t.genus,
                    "tube": list(t.tube) if t.tube else None,
                }
                for t in self.thick
            ],
            "thin": [{"id": s.id, "weight": s.weight} for s in self.thin],
            "bodies": [
                {
                    "id": b.id,
                    "kind": b.kind.value,
                    "plus": b.plus,
                    "minus": list(b.minus),
                    "verticals": b.verticals,
                    "bridges": b.bridges,
                    "case": b.case,
                }
                for b in self.bodies
            ],
            "width": [list(c) for c in self.width().complexities],
            "cost": self.cost(),
        }
