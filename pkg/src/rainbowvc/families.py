"""Generators for the named graph families.

Labeling conventions (family indices are 1-based, ids are 0-based):

* path, cycle: ``0..n-1`` in order.
* complete bipartite ``K_{s,t}``: side A is ``0..s-1``, side B ``s..s+t-1``.
* complete multipartite: parts sorted ascending, then laid out consecutively.
* wheel ``W_n``: rim ``0..n-1``, hub ``n``.
* two-layer wheel ``W2_n``: hub ``w = 0``, inner cycle ``u_i = i``, outer
  cycle ``v_i = n + i`` for ``i = 1..n``.
* ``thm4_graph(a, b)``: ``W2_n`` with ``n = 5b - 5a + 10`` plus a pendant
  path ``s_0 .. s_{a-3}`` at ids ``2n+1 .. 2n+a-2``, with ``s_{a-3}`` joined
  to ``w`` (the hub plays ``s_{a-2}``).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import FamilyError
from .graph import Graph, format_edge_list


class Kind(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    BIPARTITE = "bipartite"
    MULTIPARTITE = "multipartite"
    WHEEL = "wheel"
    WHEEL2 = "wheel2"
    THM4 = "thm4"


_REQUIRED = {
    Kind.PATH: {"n"},
    Kind.CYCLE: {"n"},
    Kind.COMPLETE: {"n"},
    Kind.BIPARTITE: {"s", "t"},
    Kind.MULTIPARTITE: {"parts"},
    Kind.WHEEL: {"n"},
    Kind.WHEEL2: {"n"},
    Kind.THM4: {"a", "b"},
}


@dataclass(frozen=True)
class FamilySpec:
    kind: Kind
    n: int | None = None
    s: int | None = None
    t: int | None = None
    parts: tuple[int, ...] | None = None
    a: int | None = None
    b: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.parts is not None:
            object.__setattr__(self, "parts", tuple(sorted(self.parts)))
        given = {f for f in ("n", "s", "t", "parts", "a", "b") if getattr(self, f) is not None}
        need = _REQUIRED[self.kind]
        if given != need:
            raise FamilyError(f"{self.kind.value} takes exactly {sorted(need)}, got {sorted(given)}")
        for f in ("n", "s", "t"):
            val = getattr(self, f)
            if val is not None and val < 1:
                raise FamilyError(f"{f} must be at least 1")
        if self.parts is not None and (not self.parts or min(self.parts) < 1):
            raise FamilyError("parts must be non-empty with every size at least 1")
        if self.kind is Kind.CYCLE and self.n < 3:
            raise FamilyError("a cycle needs n >= 3")
        if self.kind in (Kind.WHEEL, Kind.WHEEL2) and self.n < 3:
            raise FamilyError(f"{self.kind.value} needs n >= 3")
        if self.kind is Kind.THM4:
            check_thm4_params(self.a, self.b)

    def describe(self) -> str:
        fields = []
        for f in ("n", "s", "t", "a", "b"):
            if getattr(self, f) is not None:
                fields.append(f"{f}={getattr(self, f)}")
        if self.parts is not None:
            fields.append("parts=" + ",".join(map(str, self.parts)))
        return " ".join([self.kind.value] + fields)


def check_thm4_params(a: int, b: int) -> None:
    if a < 5:
        raise FamilyError(f"need a >= 5, got a={a}")
    if 5 * b < 7 * a - 8:
        raise FamilyError(f"need b >= (7a-8)/5, got a={a}, b={b}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], label=f"path n={n}")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], label=f"cycle n={n}")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2), label=f"complete n={n}")


def complete_multipartite(parts) -> Graph:
    parts = sorted(parts)
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] != owner[v]]
    return Graph.from_edges(n, edges, label="multipartite parts=" + ",".join(map(str, parts)))


def complete_bipartite(s: int, t: int) -> Graph:
    edges = [(i, s + j) for i in range(s) for j in range(t)]
    return Graph.from_edges(s + t, edges, label=f"bipartite s={s} t={t}")


def wheel(n: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges, label=f"wheel n={n}")


def wheel2_ids(n: int) -> tuple[int, list[int], list[int]]:
    """``(w, u, v)`` ids for ``W2_n``; ``u[i]``/``v[i]`` use the 1-based index ``i`` (slot 0 unused)."""
    return 0, [-1] + list(range(1, n + 1)), [-1] + list(range(n + 1, 2 * n + 1))


def _wheel2_edges(n: int) -> list[tuple[int, int]]:
    w, u, v = wheel2_ids(n)
    edges = []
    for i in range(1, n + 1):
        j = i % n + 1
        edges += [(u[i], u[j]), (v[i], v[j]), (w, u[i]), (u[i], v[i])]
    return edges


def wheel2(n: int) -> Graph:
    if n < 3:
        raise FamilyError("the two-layer wheel needs n >= 3")
    return Graph.from_edges(2 * n + 1, _wheel2_edges(n), label=f"wheel2 n={n}")


def thm4_order(a: int, b: int) -> int:
    """Cycle length ``n`` of the two-layer wheel inside ``thm4_graph(a, b)``."""
    return 5 * b - 5 * a + 10


def thm4_path_ids(a: int, b: int) -> list[int]:
    """Ids of ``s_0 .. s_{a-2}``; the last entry is the hub ``w``."""
    n = thm4_order(a, b)
    return [2 * n + 1 + i for i in range(a - 2)] + [0]


def thm4_graph(a: int, b: int) -> Graph:
    check_thm4_params(a, b)
    n = thm4_order(a, b)
    s = thm4_path_ids(a, b)
    edges = _wheel2_edges(n) + list(zip(s, s[1:]))
    return Graph.from_edges(2 * n + a - 1, edges, label=f"thm4 a={a} b={b}")


def generate(spec: FamilySpec) -> Graph:
    k = spec.kind
    if k is Kind.PATH:
        return path(spec.n)
    if k is Kind.CYCLE:
        return cycle(spec.n)
    if k is Kind.COMPLETE:
        return complete(spec.n)
    if k is Kind.BIPARTITE:
        return complete_bipartite(spec.s, spec.t)
    if k is Kind.MULTIPARTITE:
        return complete_multipartite(spec.parts)
    if k is Kind.WHEEL:
        return wheel(spec.n)
    if k is Kind.WHEEL2:
        return wheel2(spec.n)
    return thm4_graph(spec.a, spec.b)


def generate_text(spec: FamilySpec) -> str:
    """Edge-list text with a leading comment naming the family."""
    return format_edge_list(generate(spec), comment=spec.describe())


def paper_label(spec_or_n, vertex: int) -> str:
    """Render a two-layer-wheel id as ``w``, ``u_i``, ``v_i`` or ``s_i``."""
    if isinstance(spec_or_n, FamilySpec):
        spec = spec_or_n
        n = spec.n if spec.kind is Kind.WHEEL2 else thm4_order(spec.a, spec.b)
    else:
        n = spec_or_n
    if vertex == 0:
        return "w"
    if vertex <= n:
        return f"u_{vertex}"
    if vertex <= 2 * n:
        return f"v_{vertex - n}"
    return f"s_{vertex - 2 * n - 1}"
