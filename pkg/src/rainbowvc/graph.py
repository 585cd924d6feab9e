"""Simple undirected graphs, the edge-list format, distances and geodesics.

Vertices are the integers ``0..n-1``. A :class:`Graph` is immutable; derived
data (distance matrix, bitmask adjacency) is computed lazily and cached on the
instance, so sharing a graph between readers is safe.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import GraphError, ParseError

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    order: int
    adjacency: tuple[tuple[int, ...], ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise GraphError("graph order must be positive")
        if len(self.adjacency) != self.order:
            raise GraphError("adjacency length does not match order")
        for u, nbrs in enumerate(self.adjacency):
            prev = -1
            for v in nbrs:
                if not 0 <= v < self.order:
                    raise GraphError(f"vertex id {v} out of range")
                if v == u:
                    raise GraphError(f"loop at vertex {u}")
                if v <= prev:
                    raise GraphError(f"neighbors of {u} not strictly increasing")
                prev = v
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u not in self.adjacency[v]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], label: str = "") -> "Graph":
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) has a vertex id out of range")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(order, tuple(tuple(sorted(a)) for a in adj), label)

    @property
    def n(self) -> int:
        return self.order

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.order) for v in self.adjacency[u] if u < v]

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adjacency)

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    def is_connected(self) -> bool:
        return is_connected(self)

    def remove_vertex(self, x: int) -> "Graph":
        """Graph on ``n-1`` vertices; ids above ``x`` shift down by one."""
        if self.order == 1:
            raise GraphError("cannot delete the only vertex")
        relabel = lambda v: v if v < x else v - 1  # noqa: E731
        return Graph.from_edges(
            self.order - 1,
            [(relabel(u), relabel(v)) for u, v in self.edges() if x not in (u, v)],
        )

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u}, {v})")
        drop = {(min(u, v), max(u, v))}
        return Graph.from_edges(self.order, [e for e in self.edges() if e not in drop])


# --------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    Lines starting with ``#`` are comments. Duplicate edges, loops, ids out of
    range and an edge count that disagrees with the header are all rejected.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        body.append((lineno, line))
    if not body:
        raise ParseError("missing header line", kind="malformed")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers", kind="malformed")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers", kind="malformed") from None

    n, m = ints(*body[0])
    if n < 1 or m < 0:
        raise ParseError("header must be '<n> <m>' with n >= 1, m >= 0", kind="malformed")
    edges = body[1:]
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} given", kind="count")
    seen: set[tuple[int, int]] = set()
    for lineno, line in edges:
        u, v = ints(lineno, line)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex id out of range", kind="range")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}", kind="loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key}", kind="duplicate")
        seen.add(key)
    return Graph.from_edges(n, seen)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    edges = g.edges()
    out.append(f"{g.order} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# distances


@dataclass(frozen=True)
class DistanceMatrix:
    dist: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.dist[u][v]

    def row(self, u: int) -> tuple[int, ...]:
        return self.dist[u]

    @property
    def connected(self) -> bool:
        return all(d != UNREACHABLE for row in self.dist for d in row)

    def max_entry(self) -> int:
        return max(max(row) for row in self.dist)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in g.adjacency[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs_distances(g, s)) for s in range(g.order)))


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def _require_connected(g: Graph) -> None:
    if not g.distances.connected:
        raise GraphError("graph is disconnected")


def diameter(g: Graph) -> int:
    _require_connected(g)
    return g.distances.max_entry()


def eccentricity(g: Graph, v: int) -> int:
    return max(g.distances.row(v))


# --------------------------------------------------------------------------
# structure


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points by iterative DFS low-link."""
    n = g.order
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, iter(g.adjacency[root]))]
        while stack:
            x, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] == -1:
                    parent[y] = x
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, iter(g.adjacency[y])))
                    advanced = True
                    break
                if y != parent[x]:
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            p = parent[x]
            if p != -1:
                low[p] = min(low[p], low[x])
                if p != root and low[x] >= disc[p]:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts


@dataclass(frozen=True)
class GraphClass:
    connected: bool
    complete: bool
    path_graph: bool
    min_degree: int
    cut_vertex_count: int


def is_complete(g: Graph) -> bool:
    return all(len(a) == g.order - 1 for a in g.adjacency)


def is_path(g: Graph) -> bool:
    # K1 counts as the degenerate path P1
    if not is_connected(g):
        return False
    return g.size == g.order - 1 and all(len(a) <= 2 for a in g.adjacency)


def classify_graph(g: Graph) -> GraphClass:
    connected = is_connected(g)
    return GraphClass(
        connected=connected,
        complete=is_complete(g),
        path_graph=connected and is_path(g),
        min_degree=min(len(a) for a in g.adjacency),
        cut_vertex_count=len(cut_vertices(g)),
    )


# --------------------------------------------------------------------------
# geodesics and paths


def internal_pair_on_geodesic(g: Graph, x: int, y: int) -> bool:
    """Whether some geodesic has both ``x`` and ``y`` as internal vertices."""
    _require_connected(g)
    if x == y:
        raise GraphError("x and y must differ")
    d = g.distances.dist
    dxy = d[x][y]
    others = [w for w in range(g.order) if w != x and w != y]
    for a, b in ((x, y), (y, x)):
        # w1 - a - b - w2 in that order along the geodesic
        for w1 in others:
            lead = d[w1][a] + dxy
            row = d[w1]
            for w2 in others:
                if lead + d[b][w2] == row[w2]:
                    return True
    return False


def geodesic_interior(g: Graph, u: int, v: int) -> list[int]:
    """Vertices other than ``u``, ``v`` lying on at least one u-v geodesic."""
    d = g.distances.dist
    duv = d[u][v]
    return [x for x in range(g.order) if x != u and x != v and d[u][x] + d[x][v] == duv]


def count_geodesics(g: Graph, u: int, v: int) -> int:
    """Number of shortest u-v paths (path counting over BFS layers)."""
    _require_connected(g)
    du = g.distances.row(u)
    target = du[v]
    sigma = [0] * g.order
    sigma[u] = 1
    for x in sorted(range(g.order), key=du.__getitem__):
        if du[x] >= target:
            break
        if sigma[x] == 0:
            continue
        for y in g.adjacency[x]:
            if du[y] == du[x] + 1:
                sigma[y] += sigma[x]
    return sigma[v]


def lex_geodesic(g: Graph, u: int, v: int) -> list[int]:
    """Lexicographically smallest shortest u-v path."""
    d = g.distances.dist
    path = [u]
    x = u
    while x != v:
        x = next(y for y in g.adjacency[x] if d[y][v] == d[x][v] - 1)
        path.append(x)
    return path


@dataclass(frozen=True)
class PathEnumeration:
    paths: list[list[int]]
    truncated: bool

    def __len__(self) -> int:
        return len(self.paths)


def enumerate_paths(g: Graph, u: int, v: int, max_len: int | None = None, cap: int = 10**6) -> PathEnumeration:
    """All simple u-v paths with at most ``max_len`` edges, in lexicographic order.

    Stops after ``cap`` paths; ``truncated`` then says whether more existed.
    """
    if cap < 1:
        raise GraphError("cap must be at least 1")
    limit = g.order - 1 if max_len is None else max_len
    paths: list[list[int]] = []
    if u == v:
        return PathEnumeration([[u]], False)
    path = [u]
    on_path = 1 << u
    truncated = False

    def dfs(x: int) -> bool:
        nonlocal on_path, truncated
        if len(path) - 1 >= limit:
            return True
        for y in g.adjacency[x]:
            if (on_path >> y) & 1:
                continue
            if y == v:
                if len(paths) == cap:
                    truncated = True
                    return False
                paths.append(path + [v])
                continue
            path.append(y)
            on_path |= 1 << y
            keep_going = dfs(y)
            on_path &= ~(1 << y)
            path.pop()
            if not keep_going:
                return False
        return True

    dfs(u)
    return PathEnumeration(paths, truncated)

