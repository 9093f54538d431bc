from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import networkx as nx

from ..logging.init import get_logger
from .blocks import drilled_block
from .layered import SlopeTriple, layered_solid_torus
from .model import LabelledFace, Perm, Triangulation, TriangulationError, perm_sign

"""Triangulated complement of the torus knot T(p, q).

Layered solid tori U (slope p/u) and V (slope q/v) are glued to the lower and upper
boundaries of the drilled block, matching edge labels (a, b, c). With ``pv - qu = 1`` the
two meridians meet once, so U and V make a genus-one splitting of the 3-sphere and the
drilled edge is the knot.
"""

__all__ = ["TorusComplement", "bezout_pair", "torus_complement"]

logger = get_logger(__name__)


def bezout_pair(p: int, q: int) -> tuple[int, int]:
    """The smallest ``0 < u < p`` with ``p*v - q*u = 1``, and its ``v``."""
    if p < 2 or q < 2:
        raise TriangulationError(f"torus knot parameters must be >= 2, got ({p},{q})")
    if math.gcd(p, q) != 1:
        raise TriangulationError(f"T({p},{q}) is a link: gcd {math.gcd(p, q)} != 1")
    u = (-pow(q, -1, p)) % p
    v, rem = divmod(1 + q * u, p)
    if rem or p * v - q * u != 1:
        raise TriangulationError(f"no Bezout pair for ({p},{q})")
    return u, v


@dataclass(frozen=True)
class TorusComplement:
    p: int
    q: int
    u: int
    v: int
    triangulation: Triangulation
    u_slope: SlopeTriple
    v_slope: SlopeTriple
    sizes: tuple[int, int, int]

    @property
    def meridians(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.u, -self.p), (self.v, -self.q)

    @property
    def determinant(self) -> int:
        (a, b), (c, d) = self.meridians
        return a * d - b * c


def _face_perm(src: LabelledFace, dst: LabelledFace) -> Perm:
    perm = [0, 0, 0, 0]
    perm[src.face] = dst.face
    for label in ("a", "b", "c"):
        perm[src.vertex_opposite(label)] = dst.vertex_opposite(label)
    return (perm[0], perm[1], perm[2], perm[3])


def _match_orientation(piece: Triangulation, block: Triangulation, end: str) -> Triangulation:
    """Mirror ``piece`` if gluing it to ``block`` by labels would reverse orientation."""
    piece_signs = piece.orientation()
    block_signs = block.orientation()
    if piece_signs is None or block_signs is None:
        raise TriangulationError("pieces must be orientable")
    src = piece.boundary_tori["boundary"][0]
    dst = block.boundary_tori[end][0]
    want = piece_signs[src.tet] * -perm_sign(_face_perm(src, dst))
    if block_signs[dst.tet] != want:
        return piece.mirrored()
    return piece


def _attach(
    tri: Triangulation,
    offset: int,
    piece: Triangulation,
    block: Triangulation,
    q_offset: int,
    end: str,
) -> None:
    for src, dst in zip(piece.boundary_tori["boundary"], block.boundary_tori[end], strict=True):
        tri.glue(src.tet + offset, src.face, dst.tet + q_offset, _face_perm(src, dst))


def _bfs_order(block: Triangulation) -> list[int]:
    g = block.face_pairing_graph()
    start = block.boundary_tori["lower"][0].tet
    seen = {start}
    order = []
    queue = deque([start])
    while queue:
        t = queue.popleft()
        order.append(t)
        for w in sorted(set(g.neighbors(t))):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(order) != block.size:
        raise TriangulationError("drilled block is not connected")
    return order


def torus_complement(p: int, q: int) -> TorusComplement:
    u, v = bezout_pair(p, q)
    block = drilled_block()
    lst_u, u_slope = layered_solid_torus(p, u)
    lst_v, v_slope = layered_solid_torus(q, v)
    lst_u = _match_orientation(lst_u, block, "lower")
    lst_v = _match_orientation(lst_v, block, "upper")

    tri = Triangulation(name=f"T({p},{q}) complement")
    u_off = tri.absorb(lst_u)
    q_off = tri.absorb(block)
    v_off = tri.absorb(lst_v)
    _attach(tri, u_off, lst_u, block, q_off, "lower")
    _attach(tri, v_off, lst_v, block, q_off, "upper")
    tri.drilled = True
    tri.layer_order = (
        *range(u_off, u_off + lst_u.size),
        *(q_off + t for t in _bfs_order(block)),
        *reversed(range(v_off, v_off + lst_v.size)),
    )
    if not nx.is_connected(tri.face_pairing_graph()):
        raise TriangulationError("assembled complement is disconnected")
    logger.debug(f"T({p},{q}): u={u} v={v} sizes U={lst_u.size} Q={block.size} V={lst_v.size}")
    return TorusComplement(
        p, q, u, v, tri, u_slope, v_slope, (lst_u.size, block.size, lst_v.size)
    )
