from __future__ import annotations

from dataclasses import dataclass, field

from .curves import CurveFamily

"""Independent checks of a realized curve family."""

__all__ = ["CurveCheck", "RealizationReport", "validate"]


@dataclass(frozen=True)
class CurveCheck:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class RealizationReport:
    checks: tuple[CurveCheck, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CurveCheck]:
        return [c for c in self.checks if not c.passed]


def _flood(fam: CurveFamily, start: int, blocked: frozenset[int]) -> frozenset[int]:
    g = fam.graph
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for slot in range(g.degree(v)):
            d = g.dart(v, slot)
            if g.dart_edge[d] in blocked:
                continue
            w = g.dart_vertex[g.twin[d]]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def _check_cuts(fam: CurveFamily) -> list[CurveCheck]:
    dec = fam.decomposition
    every = frozenset(range(fam.graph.vertex_count))
    out = []
    for curve in fam.curves:
        mid = dec.middle(curve.tree_edge)
        ok = curve.edges == mid and len(curve.crossings) == len(mid)
        out.append(
            CurveCheck(
                f"crosses-middle-set[{curve.tree_edge}]",
                ok,
                "" if ok else f"crossed {sorted(curve.edges)} expected {sorted(mid)}",
            )
        )
        inside = _flood(fam, min(curve.side), curve.edges)
        outside_set = every - curve.side
        outside = _flood(fam, min(outside_set), curve.edges) if outside_set else frozenset()
        ok = inside == curve.side and outside == outside_set
        out.append(
            CurveCheck(
                f"separates[{curve.tree_edge}]",
                ok,
                "" if ok else f"flood fill reached {sorted(inside)} from side {sorted(curve.side)}",
            )
        )
    return out


def _check_faces(fam: CurveFamily) -> list[CurveCheck]:
    g = fam.graph
    out = []
    chords: dict[int, list[tuple[tuple[int, int], tuple[int, int], int]]] = {}

    def key(dart: int, position: int) -> tuple[int, int]:
        e = g.dart_edge[dart]
        forward = g.dart_vertex[dart] == g.ends[e][0]
        return (g.face_position[dart], position if forward else -position)

    for curve in fam.curves:
        steps = curve.crossings
        consistent = True
        for i, here in enumerate(steps):
            nxt = steps[(i + 1) % len(steps)]
            exit_dart = g.twin[nxt.dart]
            if g.face_of[here.dart] != g.face_of[exit_dart]:
                consistent = False
                out.append(
                    CurveCheck(
                        f"face-consistency[{curve.tree_edge}]",
                        False,
                        f"step {i} enters face {g.face_of[here.dart]} "
                        f"but leaves face {g.face_of[exit_dart]}",
                    )
                )
                break
            if len(steps) > 1:
                chords.setdefault(g.face_of[here.dart], []).append(
                    (key(here.dart, here.position), key(exit_dart, nxt.position), curve.tree_edge)
                )
        if consistent:
            out.append(CurveCheck(f"face-consistency[{curve.tree_edge}]", True))

    for f in sorted(chords):
        points = []
        for a, b, t in chords[f]:
            points.append((a, t))
            points.append((b, t))
        points.sort()
        stack: list[int] = []
        witness = ""
        for _, t in points:
            if stack and stack[-1] == t:
                stack.pop()
            elif t in stack:
                witness = f"face {f}: curves {stack[-1]} and {t} interleave"
                break
            else:
                stack.append(t)
        out.append(CurveCheck(f"non-crossing[face {f}]", not witness, witness))
    return out


def _check_laminar(fam: CurveFamily) -> list[CurveCheck]:
    every = frozenset(range(fam.graph.vertex_count))
    curves = fam.curves
    for i, a in enumerate(curves):
        for b in curves[i + 1 :]:
            s, t = a.side, b.side
            if s <= t or t <= s or not (s & t) or (s | t) == every:
                continue
            return [
                CurveCheck(
                    "laminar",
                    False,
                    f"sides of tree edges {a.tree_edge} and {b.tree_edge} overlap",
                )
            ]
    return [CurveCheck("laminar", True)]


def validate(fam: CurveFamily) -> RealizationReport:
    """Run every curve-family check; failures carry a witness string."""
    return RealizationReport(
        tuple(_check_cuts(fam) + _check_faces(fam) + _check_laminar(fam))
    )
