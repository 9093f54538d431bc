from __future__ import annotations

from ..diagram.builder import BL, BR, TL, TR, DiagramBuilder
from ..diagram.model import Diagram
from .spec import FamilyError

__all__ = ["trefoil_connect_sum", "TREFOIL_TWISTS"]

TREFOIL_TWISTS = 3


def trefoil_connect_sum(n: int) -> Diagram:
    """Connected sum of ``n`` trefoils stacked in a column.

    Each block is a 3-crossing twist whose right strand closes on itself; the left strand runs
    on into the next block, and the top of the last block returns to the bottom of the first.
    """
    if n < 1:
        raise FamilyError(f"connect sum needs n >= 1, got {n}")
    builder = DiagramBuilder(f"trefoil#{n}")
    blocks = []
    for j in range(n):
        block = [builder.crossing(1, TREFOIL_TWISTS * j + k) for k in range(TREFOIL_TWISTS)]
        for lower, upper in zip(block, block[1:]):
            builder.connect((lower, TL), (upper, BL))
            builder.connect((lower, TR), (upper, BR))
        builder.connect((block[-1], TR), (block[0], BR))
        blocks.append(block)
    for here, there in zip(blocks, blocks[1:]):
        builder.connect((here[-1], TL), (there[0], BL))
    builder.connect((blocks[-1][-1], TL), (blocks[0][0], BL))
    return builder.build()
