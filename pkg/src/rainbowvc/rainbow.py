"""Rainbow path and rainbow geodesic checks for vertex colorings.

A u-v path is rainbow when its internal vertices carry pairwise distinct
colors; endpoint colors never matter.

The checkers search over states ``(vertex, set of colors used internally)``
with color sets held as bit masks. A walk whose internal vertices have
pairwise distinct colors cannot repeat an internal vertex (a repeated vertex
would repeat its color), so every walk found this way, truncated at its first
arrival at ``v``, is already a simple rainbow path. Conversely every rainbow
path is such a walk, which makes the state search exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ColoringError, GuardExceeded, ParseError, PaletteTooLarge
from .graph import Graph, _require_connected

MAX_PALETTE = 64
ORACLE_MAX_ORDER = 12


class Mode(str, enum.Enum):
    RVC = "rvc"
    SRVC = "srvc"

    @classmethod
    def parse(cls, value: "str | Mode") -> "Mode":
        if isinstance(value, Mode):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown mode {value!r}; expected 'rvc' or 'srvc'") from None


@dataclass(frozen=True)
class VertexColoring:
    """Colors ``1..palette_size`` per vertex.

    ``palette_size == 0`` with no colors is the uncolored coloring, which only
    complete graphs accept.
    """

    palette_size: int
    colors: tuple[int, ...]

    def __post_init__(self):
        k = self.palette_size
        if k < 0:
            raise ColoringError("palette size must be non-negative")
        if k > MAX_PALETTE:
            raise PaletteTooLarge(f"palette size {k} exceeds the {MAX_PALETTE}-color cap")
        if k == 0 and self.colors:
            raise ColoringError("a 0-color coloring assigns no colors")
        for c in self.colors:
            if not 1 <= c <= k:
                raise ColoringError(f"color {c} outside [1, {k}]")

    @classmethod
    def of(cls, colors: Iterable[int], palette_size: int | None = None) -> "VertexColoring":
        colors = tuple(colors)
        if palette_size is None:
            palette_size = max(colors, default=0)
        return cls(palette_size, colors)

    @classmethod
    def empty(cls) -> "VertexColoring":
        return cls(0, ())

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))

    def relabel(self, perm: dict[int, int]) -> "VertexColoring":
        return VertexColoring(self.palette_size, tuple(perm[c] for c in self.colors))


@dataclass(frozen=True)
class CheckReport:
    valid: bool
    mode: Mode
    failing_pair: tuple[int, int] | None
    pairs_checked: int


def _color_bits(g: Graph, c: VertexColoring) -> list[int] | None:
    if c.palette_size == 0:
        return None
    if len(c.colors) != g.order:
        raise ColoringError(f"coloring has {len(c.colors)} entries for a graph of order {g.order}")
    return [1 << (x - 1) for x in c.colors]


def _rainbow_reach(adj: Sequence[Sequence[int]], bits: list[int] | None, u: int,
                   layer: Sequence[int] | None = None, target: int = -1) -> int:
    """Bit mask of vertices joined to ``u`` by a rainbow path.

    With ``layer`` (distances from ``u``) every step must move one layer
    outward, which restricts the search to geodesics.
    """
    reached = 0
    stack: list[tuple[int, int]] = []
    seen: dict[int, set[int]] = {}
    for x in adj[u]:
        reached |= 1 << x
        if x == target:
            return reached
        stack.append((x, 0))
        seen[x] = {0}
    if bits is None:
        return reached
    while stack:
        x, mask = stack.pop()
        b = bits[x]
        if b & mask:
            continue
        nm = mask | b
        nxt = layer[x] + 1 if layer is not None else -1
        for y in adj[x]:
            if y == u or (layer is not None and layer[y] != nxt):
                continue
            reached |= 1 << y
            if y == target:
                return reached
            s = seen.get(y)
            if s is None:
                seen[y] = {nm}
            elif nm in s:
                continue
            else:
                s.add(nm)
            stack.append((y, nm))
    return reached


def exists_rainbow_path(g: Graph, c: VertexColoring, u: int, v: int) -> bool:
    bits = _color_bits(g, c)
    if u == v:
        raise ValueError("u and v must differ")
    return bool((_rainbow_reach(g.adjacency, bits, u, target=v) >> v) & 1)


def exists_rainbow_geodesic(g: Graph, c: VertexColoring, u: int, v: int) -> bool:
    bits = _color_bits(g, c)
    if u == v:
        raise ValueError("u and v must differ")
    layer = g.distances.row(u)
    return bool((_rainbow_reach(g.adjacency, bits, u, layer=layer, target=v) >> v) & 1)


def check_coloring(g: Graph, c: VertexColoring, mode: Mode | str) -> CheckReport:
    """Check every unordered pair; report the lexicographically first failure."""
    mode = Mode.parse(mode)
    _require_connected(g)
    bits = _color_bits(g, c)
    n = g.order
    checked = 0
    for u in range(n - 1):
        layer = g.distances.row(u) if mode is Mode.SRVC else None
        reach = _rainbow_reach(g.adjacency, bits, u, layer=layer)
        for v in range(u + 1, n):
            checked += 1
            if not (reach >> v) & 1:
                return CheckReport(False, mode, (u, v), checked)
    return CheckReport(True, mode, None, checked)


def is_valid(g: Graph, c: VertexColoring, mode: Mode | str) -> bool:
    return check_coloring(g, c, mode).valid


# --------------------------------------------------------------------------
# brute-force oracle


def simple_paths(g: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    """Every simple u-v path, by plain recursive enumeration."""
    out: list[tuple[int, ...]] = []
    path = [u]

    def walk(x: int) -> None:
        for y in g.adjacency[x]:
            if y == v:
                out.append(tuple(path) + (v,))
            elif y not in path:
                path.append(y)
                walk(y)
                path.pop()

    walk(u)
    return out


def _oracle_from_paths(paths: Iterable[Sequence[int]], colors: Sequence[int]) -> bool:
    """Whether any of the given paths (endpoints included) has distinct internal colors."""
    for p in paths:
        internal = [colors[x] for x in p[1:-1]]
        if len(internal) == len(set(internal)):
            return True
    return False


def oracle_rainbow_path(g: Graph, c: VertexColoring, u: int, v: int, geodesic: bool = False) -> bool:
    """Brute-force reference for :func:`exists_rainbow_path`.

    With ``geodesic=True`` only the shortest of the enumerated paths count,
    which gives a reference for :func:`exists_rainbow_geodesic` that never
    consults the distance matrix.
    """
    if g.order > ORACLE_MAX_ORDER:
        raise GuardExceeded(f"oracle limited to n <= {ORACLE_MAX_ORDER}")
    if u == v:
        raise ValueError("u and v must differ")
    if c.palette_size and len(c.colors) != g.order:
        raise ColoringError("coloring length does not match graph order")
    paths = simple_paths(g, u, v)
    if geodesic and paths:
        shortest = min(len(p) for p in paths)
        paths = [p for p in paths if len(p) == shortest]
    if c.palette_size == 0:
        return any(len(p) == 2 for p in paths)
    return _oracle_from_paths(paths, c.colors)


# --------------------------------------------------------------------------
# coloring text format


def parse_coloring(text: str | Iterable[str]) -> VertexColoring:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    body = [(i, ln.strip()) for i, ln in enumerate(lines, 1) if ln.strip() and not ln.strip().startswith("#")]
    if not body:
        raise ParseError("missing header line", kind="malformed")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        try:
            if len(parts) != 2:
                raise ValueError
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers", kind="malformed") from None

    n, k = ints(*body[0])
    if n < 1 or k < 0:
        raise ParseError("header must be '<n> <k>' with n >= 1, k >= 0", kind="malformed")
    if k > MAX_PALETTE:
        raise ParseError(f"palette size {k} exceeds the {MAX_PALETTE}-color cap", kind="color")
    rows = body[1:]
    if k == 0:
        if rows:
            raise ParseError("a 0-color coloring has no body lines", kind="count")
        return VertexColoring.empty()
    if len(rows) != n:
        raise ParseError(f"expected {n} vertex lines, got {len(rows)}", kind="count")
    colors: list[int | None] = [None] * n
    for lineno, line in rows:
        v, col = ints(lineno, line)
        if not 0 <= v < n:
            raise ParseError(f"line {lineno}: vertex id out of range", kind="range")
        if colors[v] is not None:
            raise ParseError(f"line {lineno}: vertex {v} colored twice", kind="duplicate")
        if not 1 <= col <= k:
            raise ParseError(f"line {lineno}: color {col} outside [1, {k}]", kind="color")
        colors[v] = col
    return VertexColoring(k, tuple(colors))  # type: ignore[arg-type]


def format_coloring(c: VertexColoring, order: int | None = None, comment: str | None = None) -> str:
    n = len(c.colors) if order is None else order
    out = [f"# {comment}"] if comment else []
    out.append(f"{n} {c.palette_size}")
    out.extend(f"{v} {col}" for v, col in enumerate(c.colors))
    return "\n".join(out) + "\n"
