from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any

import networkx as nx

from ..carving.decomposition import CarvingDecomposition
from ..diagram.embedding import SimpleDiagramGraph
from ..realize.curves import CurveFamily

"""Sphere-decomposition types.

Spheres are the tree edges of a carving (one sphere per tree edge, numbered in ascending
child-node order); complementary components are the tree nodes. Leaves are balls, internal
nodes are solid pants.
"""

__all__ = [
    "SPHERE_DECOMPOSITION_SCHEMA",
    "SphereDecompositionError",
    "InessentialStrandError",
    "ComponentKind",
    "BallCertificate",
    "Sphere",
    "Strand",
    "ComponentClassification",
    "Component",
    "SphereDecomposition",
]

SPHERE_DECOMPOSITION_SCHEMA = "sphere-decomposition/v1"


class SphereDecompositionError(ValueError):
    """Component or sphere family that does not form a sphere-decomposition."""


class InessentialStrandError(SphereDecompositionError):
    """A pants strand that is boundary parallel in the pair of pants."""


class ComponentKind(str, Enum):
    BALL = "ball"
    PANTS = "pants"


class BallCertificate(str, Enum):
    SINGLE_CROSSING = "single-crossing"
    SUBDIVISION = "subdivision"
    TWIST_REGION = "twist-region"
    PLAT_HALF = "plat-half"


@dataclass(frozen=True)
class Sphere:
    id: int
    tree_edge: int
    weight: int
    sides: tuple[int, int]


@dataclass(frozen=True)
class Strand:
    """One arc of the knot inside a component, entering and leaving through spheres."""

    component: int
    ends: tuple[int, int]
    vertices: tuple[int, ...] = ()

    @property
    def joins_distinct(self) -> bool:
        return self.ends[0] != self.ends[1]


@dataclass(frozen=True)
class ComponentClassification:
    kind: ComponentKind
    certificate: str
    bridges: int = 0
    strand_types: tuple[str, ...] = ()
    essential: tuple[bool, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "certificate": self.certificate,
            "bridges": self.bridges,
            "strand_types": list(self.strand_types),
            "essential": list(self.essential),
        }


@dataclass(frozen=True)
class Component:
    node: int
    boundary: tuple[int, ...]
    vertices: tuple[int, ...]
    strands: tuple[Strand, ...]
    classification: ComponentClassification

    @property
    def kind(self) -> ComponentKind:
        return self.classification.kind


@dataclass(frozen=True)
class SphereDecomposition:
    graph: SimpleDiagramGraph
    decomposition: CarvingDecomposition
    spheres: tuple[Sphere, ...]
    components: tuple[Component, ...]
    curves: CurveFamily | None = None
    label: str = ""

    @cached_property
    def sphere_by_id(self) -> dict[int, Sphere]:
        return {s.id: s for s in self.spheres}

    @cached_property
    def component_by_node(self) -> dict[int, Component]:
        return {c.node: c for c in self.components}

    def width_list(self) -> tuple[int, ...]:
        return tuple(sorted((s.weight for s in self.spheres), reverse=True))

    def cost(self) -> int:
        return max((s.weight for s in self.spheres), default=0)

    @cached_property
    def prunable(self) -> frozenset[int]:
        """Spheres that only wrap a lone subdivision vertex."""
        out = set()
        for s in self.spheres:
            for node in s.sides:
                comp = self.component_by_node[node]
                if (
                    comp.kind is ComponentKind.BALL
                    and comp.classification.certificate == BallCertificate.SUBDIVISION.value
                ):
                    out.add(s.id)
        return frozenset(out)

    def pruned_width_list(self) -> tuple[int, ...]:
        return tuple(
            sorted((s.weight for s in self.spheres if s.id not in self.prunable), reverse=True)
        )

    def census(self) -> dict[str, int]:
        return {
            "leaves": self.decomposition.leaf_count,
            "balls": sum(1 for c in self.components if c.kind is ComponentKind.BALL),
            "pants": sum(1 for c in self.components if c.kind is ComponentKind.PANTS),
            "spheres": len(self.spheres),
        }

    def component_tree(self) -> nx.Graph:
        t = nx.Graph()
        for c in self.components:
            t.add_node(c.node, label=f"{c.kind.value}:{c.classification.certificate}")
        for s in self.spheres:
            t.add_edge(*s.sides, sphere=s.id, weight=s.weight, label=f"S{s.id}={s.weight}")
        return t

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SPHERE_DECOMPOSITION_SCHEMA,
            "label": self.label,
            "spheres": [
                {"id": s.id, "tree_edge": s.tree_edge, "weight": s.weight, "sides": list(s.sides)}
                for s in self.spheres
            ],
            "components": [
                {
                    "node": c.node,
                    "boundary": list(c.boundary),
                    "vertices": list(c.vertices),
                    "strands": [list(st.ends) for st in c.strands],
                    "classification": c.classification.to_dict(),
                }
                for c in self.components
            ],
            "width": list(self.width_list()),
            "pruned_width": list(self.pruned_width_list()),
            "cost": self.cost(),
            "census": self.census(),
        }
