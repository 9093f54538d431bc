from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from ..diagram.model import Diagram
from .braids import plat_from_word
from .spec import FamilyError

"""Two-bridge knots as 4-plats.

The plat word ``s2^a1 s1^-a2 s2^a3 ... s2^an`` with caps on (0,1) and (2,3) at both ends is the
two-bridge knot of ``[a1, ..., an]`` only for odd ``n``. Even-length fractions are rewritten to an
odd-length one with the same value before the word is built.
"""

__all__ = [
    "continued_fraction_value",
    "odd_length_fraction",
    "two_bridge_diagram",
    "two_bridge_word",
]


def _check_entries(cf: Sequence[int]) -> None:
    if not cf or 0 in cf:
        raise FamilyError(f"continued fraction entries must be nonzero, got {list(cf)}")


def odd_length_fraction(cf: Sequence[int]) -> list[int]:
    """Same value, odd length.

    ``[..., a]`` becomes ``[..., a - 1, 1]`` (``a + 1, -1`` for negative ``a``); a trailing
    ``±1`` is folded into the entry before it instead.
    """
    _check_entries(cf)
    out = list(cf)
    if len(out) % 2 == 1:
        return out
    last = out.pop()
    if abs(last) == 1:
        out[-1] += last
        if out[-1] == 0:
            raise FamilyError(f"continued fraction {list(cf)} is degenerate")
        return out
    sign = 1 if last > 0 else -1
    return [*out, last - sign, sign]


def two_bridge_word(cf: Sequence[int]) -> list[int]:
    """4-plat word for ``cf`` (normalised to odd length first)."""
    word: list[int] = []
    for i, a in enumerate(odd_length_fraction(cf)):
        gen = 2 if i % 2 == 0 else 1
        signed = a if i % 2 == 0 else -a
        word.extend([gen if signed > 0 else -gen] * abs(a))
    return word


def continued_fraction_value(cf: Sequence[int]) -> Fraction:
    value = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        if value == 0:
            raise FamilyError(f"continued fraction {list(cf)} has a zero tail")
        value = a + 1 / value
    return value


def two_bridge_diagram(cf: Sequence[int]) -> Diagram:
    label = ",".join(str(a) for a in cf)
    return plat_from_word(two_bridge_word(cf), 2, name=f"two-bridge[{label}]")
