from __future__ import annotations

import math
from collections.abc import Sequence

from ..diagram.builder import BL, BR, TL, TR, A, B, DiagramBuilder, Port
from ..diagram.model import Diagram, DiagramError
from ..spheres.model import SphereDecomposition
from ..spheres.templates import plat_sphere_decomposition
from .spec import FamilyError

"""Braid closures and plats.

A braid word is a sequence of nonzero integers: ``i`` is the generator crossing positions
``i-1`` and ``i`` positively, ``-i`` its inverse. Crossing ranks follow the word, so a sweep
in rank order moves up the braid.
"""

__all__ = [
    "closed_braid",
    "torus_diagram",
    "plat_from_word",
    "plat_diagram",
    "bridge_sphere_decomposition",
    "DEFAULT_PLAT_TWISTS",
]

DEFAULT_PLAT_TWISTS = 3


def _stack(
    builder: DiagramBuilder,
    word: Sequence[int],
    strands: int,
    bottoms: list[Port | None],
    rank0: float,
) -> tuple[list[Port | None], list[Port | None]]:
    """Add the word's crossings; returns the open top port and first bottom port per position."""
    tops = list(bottoms)
    firsts: list[Port | None] = [None] * strands
    for idx, gen in enumerate(word):
        i = abs(gen)
        if gen == 0 or i >= strands:
            raise FamilyError(f"generator {gen} out of range for {strands} strands")
        c = builder.crossing(1 if gen > 0 else -1, rank0 + idx)
        for pos, port_in, port_out in ((i - 1, BL, TL), (i, BR, TR)):
            top = tops[pos]
            if top is None:
                firsts[pos] = (c, port_in)
            else:
                builder.connect(top, (c, port_in))
            tops[pos] = (c, port_out)
    return tops, firsts


def _build(builder: DiagramBuilder) -> Diagram:
    try:
        return builder.build()
    except DiagramError as e:
        raise FamilyError(f"{builder.name}: {e}") from e


def closed_braid(word: Sequence[int], strands: int, *, name: str = "") -> Diagram:
    """Closure of a braid word; every position must meet at least one crossing."""
    if strands < 2:
        raise FamilyError("a braid needs at least 2 strands")
    builder = DiagramBuilder(name or f"braid{list(word)}")
    tops, firsts = _stack(builder, word, strands, [None] * strands, 0.0)
    for pos in range(strands):
        top, first = tops[pos], firsts[pos]
        if top is None or first is None:
            raise FamilyError(f"strand position {pos} meets no crossing (split component)")
        builder.connect(top, first)
    return _build(builder)


def torus_diagram(p: int, q: int) -> Diagram:
    """T(p,q) as the closure of ``(s1 ... s_{q-1})^p`` on ``q`` strands."""
    if p < 2 or q < 2:
        raise FamilyError(f"torus knot parameters must be >= 2, got ({p},{q})")
    if math.gcd(p, q) != 1:
        raise FamilyError(f"T({p},{q}) is a link: gcd {math.gcd(p, q)} != 1")
    return closed_braid(list(range(1, q)) * p, q, name=f"T({p},{q})")


def plat_from_word(word: Sequence[int], bridges: int, *, name: str = "") -> Diagram:
    """Plat closure on ``2 * bridges`` strands with caps on positions (2k, 2k+1)."""
    strands = 2 * bridges
    builder = DiagramBuilder(name or f"plat{list(word)}")
    bottoms: list[Port | None] = [None] * strands
    for k in range(bridges):
        cap = builder.point(0.0, cap=True)
        bottoms[2 * k], bottoms[2 * k + 1] = (cap, A), (cap, B)
    tops, _ = _stack(builder, word, strands, bottoms, 1.0)
    top_rank = float(len(word) + 1)
    for k in range(bridges):
        cap = builder.point(top_rank, cap=True)
        left, right = tops[2 * k], tops[2 * k + 1]
        assert left is not None and right is not None
        builder.connect(left, (cap, A))
        builder.connect(right, (cap, B))
    return _build(builder)


def plat_diagram(bridges: int, twists: int = DEFAULT_PLAT_TWISTS) -> Diagram:
    """``bridges``-bridge plat: one twist region of ``twists`` crossings between neighbouring caps."""
    if bridges < 1:
        raise FamilyError("plat needs at least one bridge")
    if twists < 1 or twists % 2 == 0:
        raise FamilyError(f"plat twists must be odd and positive, got {twists}")
    if bridges == 1:
        word = [1] * twists
    else:
        word = [g for k in range(1, bridges) for g in [2 * k] * twists]
    return plat_from_word(word, bridges, name=f"plat(b={bridges},t={twists})")


def bridge_sphere_decomposition(
    bridges: int, twists: int = DEFAULT_PLAT_TWISTS
) -> SphereDecomposition:
    """Single bridge sphere of a plat diagram; its width is ``{2 * bridges}``."""
    d = plat_diagram(bridges, twists)
    return plat_sphere_decomposition(d, label=d.name)
