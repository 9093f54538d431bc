from __future__ import annotations

from .embedding import validate_diagram
from .model import Diagram, DiagramError, Vertex

"""Port-based diagram construction.

A crossing is drawn as a small square with ports ``BL, BR, TR, TL`` in counterclockwise
order. The strands run ``BL -> TR`` and ``BR -> TL``. In a positive crossing the under strand
is ``BR -> TL``; in a negative one it is ``BL -> TR``. A point has the two ports ``A`` and ``B``.
Every ``connect`` call creates one edge label.
"""

__all__ = ["BL", "BR", "TR", "TL", "A", "B", "Port", "DiagramBuilder"]

BL, BR, TR, TL = "BL", "BR", "TR", "TL"
A, B = "A", "B"

Port = tuple[int, str]

_SLOT_ORDER: dict[int, tuple[str, ...]] = {
    1: (BR, TR, TL, BL),
    -1: (BL, BR, TR, TL),
    0: (A, B),
}


class DiagramBuilder:
    def __init__(self, name: str = "") -> None:
        self.name = name
        self._signs: list[int] = []
        self._ports: list[dict[str, int]] = []
        self._ranks: list[float] = []
        self._caps: set[int] = set()
        self._next_label = 1

    @property
    def vertex_count(self) -> int:
        return len(self._signs)

    def crossing(self, sign: int, rank: float = 0.0) -> int:
        if sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {sign}")
        return self._add(sign, rank)

    def point(self, rank: float = 0.0, *, cap: bool = False) -> int:
        v = self._add(0, rank)
        if cap:
            self._caps.add(v)
        return v

    def _add(self, sign: int, rank: float) -> int:
        self._signs.append(sign)
        self._ports.append({})
        self._ranks.append(float(rank))
        return len(self._signs) - 1

    def connect(self, a: Port, b: Port) -> int:
        if a == b:
            raise DiagramError(f"cannot connect port {a} to itself")
        label = self._next_label
        for v, port in (a, b):
            if port not in _SLOT_ORDER[self._signs[v]]:
                raise DiagramError(f"vertex {v} has no port {port}")
            if port in self._ports[v]:
                raise DiagramError(f"port {v}.{port} already connected")
            self._ports[v][port] = label
        self._next_label += 1
        return label

    def open_ports(self) -> list[Port]:
        return [
            (v, p)
            for v, sign in enumerate(self._signs)
            for p in _SLOT_ORDER[sign]
            if p not in self._ports[v]
        ]

    def build(self, *, validate: bool = True) -> Diagram:
        dangling = self.open_ports()
        if dangling:
            raise DiagramError(f"unconnected ports: {dangling[:6]}")
        vertices = tuple(
            Vertex(tuple(ports[p] for p in _SLOT_ORDER[sign]))
            for sign, ports in zip(self._signs, self._ports, strict=True)
        )
        d = Diagram(vertices, ranks=tuple(self._ranks), caps=frozenset(self._caps), name=self.name)
        return validate_diagram(d) if validate else d
