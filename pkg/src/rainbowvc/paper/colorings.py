"""Explicit colorings from the proofs, transcribed onto the family labelings.

Two-layer wheel vertices follow :mod:`rainbowvc.families`: ``w = 0``,
``u_i = i``, ``v_i = n + i``. Helpers below take 1-based indices so the
transcriptions read like 1-based case tables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..errors import FamilyError, GraphError
from ..families import check_thm4_params, thm4_graph, thm4_order, thm4_path_ids, wheel2
from ..graph import Graph, diameter, lex_geodesic
from ..rainbow import VertexColoring
from .formulas import formula_wheel2_rvc, formula_wheel2_srvc


class Which(str, enum.Enum):
    THM1 = "thm1"
    LEMMA3 = "lemma3"
    LEMMA4 = "lemma4"
    THM4_RVC = "thm4-rvc"
    THM4_SRVC = "thm4-srvc"


@dataclass(frozen=True)
class ColoringSpec:
    which: Which
    n: int | None = None
    a: int | None = None
    b: int | None = None
    repaired: bool = False

    def __post_init__(self):
        object.__setattr__(self, "which", Which(self.which))
        w = self.which
        if w in (Which.LEMMA3, Which.LEMMA4):
            if self.n is None or self.n < 3:
                raise FamilyError(f"{w.value} needs n >= 3")
        elif w in (Which.THM4_RVC, Which.THM4_SRVC):
            if self.a is None or self.b is None:
                raise FamilyError(f"{w.value} needs a and b")
            check_thm4_params(self.a, self.b)


def _wheel2_table(n: int, w: int, u, v, extra: int = 0) -> list[int]:
    """Color list for ``W2_n`` (plus ``extra`` trailing slots) from 1-based rules."""
    colors = [0] * (2 * n + 1 + extra)
    colors[0] = w
    for i in range(1, n + 1):
        colors[i] = u(i)
        colors[n + i] = v(i)
    return colors


def _alternating(i: int) -> int:
    return 1 if i % 2 else 2


def wheel2_c1(n: int) -> list[int]:
    # 4 <= n <= 6
    return _wheel2_table(n, 2, lambda i: 1, _alternating)


def wheel2_c2(n: int = 7) -> list[int]:
    def v(i):
        if i <= 5:
            return 3 if i % 2 else 2
        return {6: 1, 7: 2}[i]

    return _wheel2_table(n, 3, _alternating, v)


def wheel2_c3(n: int) -> list[int]:
    # 8 <= n <= 9
    return _wheel2_table(n, 3, _alternating, lambda i: {2: 1, 0: 2, 1: 3}[i % 3])


def wheel2_c4(n: int = 10) -> list[int]:
    def v(i):
        if i == 1:
            return 2
        if 2 <= i <= 4:
            return i - 1
        if 5 <= i <= 7:
            return i - 4
        return {8: 2, 9: 1, 10: 3}[i]

    return _wheel2_table(n, 3, lambda i: 1 if i <= 5 else 2, v)


def wheel2_c_large(n: int) -> list[int]:
    # n >= 11: hub 3, inner cycle alternating 1/2, outer cycle all 4
    return _wheel2_table(n, 3, _alternating, lambda i: 4)


def wheel2_c_star(n: int) -> list[int]:
    """The (k+1)-coloring for n >= 11, k = ceil(n/5); blocks of five spokes share a color."""
    k = -(-n // 5)
    return _wheel2_table(n, k + 1, lambda i: (i - 1) // 5 + 1, lambda i: {2: 1, 3: 2, 4: 3}.get(i % 5, 1))


# Outer-cycle colors for the repaired block coloring: residue i mod 5 inside a
# complete block of five, and fixed tails for a final partial block of length
# n mod 5. Adjacent outer vertices must differ (every outer 3-path is the unique
# geodesic between its ends) and the middle three of a block must be distinct.
_REPAIR_RESIDUE = {1: 2, 2: 1, 3: 2, 4: 3, 0: 1}
_REPAIR_TAIL = {1: (3,), 2: (2, 1), 3: (2, 1, 3), 4: (2, 1, 2, 1)}


def wheel2_c_star_repaired(n: int) -> list[int]:
    """Block coloring with the outer cycle recolored so that it is strongly rainbow.

    The literal block coloring gives ``v_i`` color 1 for ``i = 0, 1, 2 (mod 5)``,
    so ``v_{5j-1}`` and ``v_{5j+2}`` are joined by a unique geodesic whose two
    internal vertices share color 1. Hub and spoke colors are unchanged.
    """
    colors = wheel2_c_star(n)
    full = n - n % 5
    for i in range(1, full + 1):
        colors[n + i] = _REPAIR_RESIDUE[i % 5]
    for offset, col in enumerate(_REPAIR_TAIL.get(n % 5, ())):
        colors[n + full + 1 + offset] = col
    return colors


def wheel2_rvc_coloring(n: int) -> VertexColoring:
    if n < 3:
        raise FamilyError("the two-layer wheel needs n >= 3")
    if n == 3:
        colors = [1] * (2 * n + 1)  # diameter 2: any single color works
    elif n <= 6:
        colors = wheel2_c1(n)
    elif n == 7:
        colors = wheel2_c2(n)
    elif n <= 9:
        colors = wheel2_c3(n)
    elif n == 10:
        colors = wheel2_c4(n)
    else:
        colors = wheel2_c_large(n)
    return VertexColoring(formula_wheel2_rvc(n).value, tuple(colors))


def wheel2_srvc_coloring(n: int, repaired: bool = False) -> VertexColoring:
    if n < 11:
        colors = wheel2_rvc_coloring(n).colors
    elif repaired:
        colors = tuple(wheel2_c_star_repaired(n))
    else:
        colors = tuple(wheel2_c_star(n))
    return VertexColoring(formula_wheel2_srvc(n).value, tuple(colors))


def thm1_coloring(g: Graph) -> VertexColoring:
    """(n-2)-coloring for a connected graph of diameter at least 3.

    Takes the lexicographically first diametral pair ``u, v`` and the
    lexicographically first geodesic ``u = x_0, ..., x_k = v``; ``u`` and
    ``x_{k-1}`` share color 1, ``x_1`` and ``v`` share color 2, and the other
    vertices get 3, 4, ... in id order.
    """
    k = diameter(g)
    if k < 3:
        raise GraphError("needs diameter at least 3")
    d = g.distances.dist
    u, v = next((a, b) for a in range(g.order) for b in range(a + 1, g.order) if d[a][b] == k)
    x = lex_geodesic(g, u, v)
    colors = [0] * g.order
    colors[u] = colors[x[k - 1]] = 1
    colors[x[1]] = colors[v] = 2
    fresh = 3
    for y in range(g.order):
        if colors[y] == 0:
            colors[y] = fresh
            fresh += 1
    return VertexColoring(g.order - 2, tuple(colors))


def thm4_rvc_coloring(a: int, b: int) -> VertexColoring:
    """a-coloring of ``thm4_graph(a, b)``; the pendant ``s_0`` gets color 1."""
    check_thm4_params(a, b)
    n = thm4_order(a, b)
    s = thm4_path_ids(a, b)
    colors = _wheel2_table(n, 0, lambda i: a if i % 2 else a - 1, lambda i: 1, extra=a - 2)
    for i in range(1, a - 1):
        colors[s[i]] = i
    colors[s[0]] = 1
    return VertexColoring(a, tuple(colors))


def thm4_srvc_coloring(a: int, b: int, repaired: bool = False) -> VertexColoring:
    """b-coloring: the wheel part by the block coloring, ``s_i`` gets ``b - a + 3 + i``."""
    check_thm4_params(a, b)
    n = thm4_order(a, b)
    s = thm4_path_ids(a, b)
    block = wheel2_c_star_repaired(n) if repaired else wheel2_c_star(n)
    colors = block + [0] * (a - 2)
    for i in range(a - 2):
        colors[s[i]] = b - a + 3 + i
    return VertexColoring(b, tuple(colors))


def _expect_graph(g: Graph | None, expected: Graph) -> Graph:
    if g is not None and g != expected:
        raise GraphError("graph does not match the standard labeling for this coloring")
    return expected


def paper_coloring(spec: ColoringSpec, g: Graph | None = None) -> VertexColoring:
    """Materialize a proof coloring. ``g`` is checked against the expected graph when given."""
    w = spec.which
    if w is Which.THM1:
        if g is None:
            raise GraphError("thm1 needs a graph")
        return thm1_coloring(g)
    if w is Which.LEMMA3:
        _expect_graph(g, wheel2(spec.n))
        return wheel2_rvc_coloring(spec.n)
    if w is Which.LEMMA4:
        _expect_graph(g, wheel2(spec.n))
        return wheel2_srvc_coloring(spec.n, spec.repaired)
    _expect_graph(g, thm4_graph(spec.a, spec.b))
    if w is Which.THM4_RVC:
        return thm4_rvc_coloring(spec.a, spec.b)
    return thm4_srvc_coloring(spec.a, spec.b, spec.repaired)
