from __future__ import annotations

from ..diagram.builder import BL, BR, TL, TR, DiagramBuilder
from ..diagram.model import Diagram, DiagramError
from ..spheres.model import SphereDecomposition, SphereDecompositionError
from ..spheres.templates import block_sphere_decomposition
from .spec import FamilyError

"""Pretzel knots P(a, b, c) with their natural three-tangle sphere-decomposition."""

__all__ = ["pretzel_diagram", "pretzel_columns"]


def pretzel_columns(a: int, b: int, c: int) -> tuple[Diagram, list[int]]:
    """Diagram plus the column index of every vertex.

    Column ``i`` is a vertical twist of ``|a_i|`` crossings whose sign follows ``a_i``.
    Neighbouring columns are joined at the top (TR to TL) and bottom (BR to BL); the last
    column wraps around to the first above and below the picture.
    """
    params = (a, b, c)
    if 0 in params:
        raise FamilyError(f"pretzel parameters must be nonzero, got {params}")
    builder = DiagramBuilder(f"P({a},{b},{c})")
    columns: list[list[int]] = []
    blocks: list[int] = []
    rank = 0
    for i, twist in enumerate(params):
        sign = 1 if twist > 0 else -1
        column = []
        for _ in range(abs(twist)):
            column.append(builder.crossing(sign, rank))
            blocks.append(i)
            rank += 1
        for lower, upper in zip(column, column[1:]):
            builder.connect((lower, TL), (upper, BL))
            builder.connect((lower, TR), (upper, BR))
        columns.append(column)
    for i in range(3):
        here, there = columns[i], columns[(i + 1) % 3]
        builder.connect((here[-1], TR), (there[-1], TL))
        builder.connect((here[0], BR), (there[0], BL))
    try:
        return builder.build(), blocks
    except DiagramError as e:
        raise FamilyError(f"P({a},{b},{c}): {e}") from e


def pretzel_diagram(a: int, b: int, c: int) -> tuple[Diagram, SphereDecomposition]:
    """Pretzel diagram and the decomposition with one sphere around each twist column."""
    d, blocks = pretzel_columns(a, b, c)
    try:
        sd = block_sphere_decomposition(d, blocks, ((0, 1), 2), label=d.name)
    except SphereDecompositionError as e:
        raise FamilyError(f"{d.name}: natural decomposition failed: {e}") from e
    return d, sd
