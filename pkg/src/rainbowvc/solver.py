"""Exact rvc / srvc by iterative deepening over the palette size.

For a fixed palette ``k`` the search colors vertices in descending-degree
order and only ever offers a vertex the colors ``1..m+1`` where ``m`` is the
largest color used so far (restricted-growth form), so colorings that differ
by a permutation of colors are visited once.

Pruning is per pair. Every non-adjacent pair ``(u, v)`` gets a *relevant set*:
the vertices whose colors can influence whether the pair is served.

* srvc: the interior of the u-v geodesic DAG.
* rvc: every vertex ``x`` with ``d(u,x) + d(x,v) <= k + 1``. A rainbow path
  has at most ``k`` internal vertices, hence at most ``k + 1`` edges, so all
  of its internal vertices lie in this set.

As soon as the last vertex of a relevant set is colored the pair's fate is
fixed, and the pair is checked exactly (search restricted to that set). A
failed pair cuts the branch. When every vertex is colored every pair has been
checked, so a leaf is a valid coloring; it is still re-validated with
:func:`rainbowvc.rainbow.check_coloring` before being returned.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator

from .errors import GraphError, GuardExceeded, PaletteTooLarge
from .graph import Graph, diameter, is_complete
from .rainbow import MAX_PALETTE, Mode, VertexColoring, check_coloring, simple_paths

ORACLE_MAX_ORDER = 8


class Status(str, enum.Enum):
    EXACT = "exact"
    UNKNOWN = "unknown"


class Decision(str, enum.Enum):
    FOUND = "found"
    NONE = "none"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_time: float | None = None  # seconds

    @property
    def unlimited(self) -> bool:
        return self.max_nodes is None and self.max_time is None


UNLIMITED = SearchBudget()


@dataclass
class DecideResult:
    decision: Decision
    witness: VertexColoring | None = None
    nodes: int = 0


@dataclass
class SolveResult:
    mode: Mode
    value: int | None
    witness: VertexColoring | None
    status: Status
    nodes_explored: int = 0
    elapsed: float = 0.0
    largest_none: int | None = None
    smallest_found: int | None = None
    trace: list[tuple[int, Decision]] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT


class _BudgetExhausted(Exception):
    pass


def lower_bound(g: Graph) -> int:
    """0 for complete graphs, otherwise ``max(1, diam - 1)``."""
    d = diameter(g)
    if d <= 1:
        return 0
    return max(1, d - 1)


def search_order(g: Graph) -> list[int]:
    return sorted(range(g.order), key=lambda v: (-len(g.adjacency[v]), v))


class _PairTable:
    """Relevant sets and restricted successor lists for every non-adjacent pair."""

    def __init__(self, g: Graph, k: int, mode: Mode, pos: list[int]):
        n = g.order
        d = g.distances.dist
        self.infeasible = False
        self.by_trigger: list[list[tuple]] = [[] for _ in range(n)]
        self.partial: list[list[tuple]] = [[] for _ in range(n)]
        for u in range(n):
            du = d[u]
            for v in range(u + 1, n):
                duv = du[v]
                if duv <= 1:
                    continue
                dv = d[v]
                if mode is Mode.SRVC:
                    rel = [x for x in range(n) if x != u and x != v and du[x] + dv[x] == duv]
                    inside = set(rel)
                    inside.add(v)
                    succ = {
                        x: tuple(y for y in g.adjacency[x] if y in inside and du[y] == du[x] + 1)
                        for x in rel
                    }
                else:
                    if duv > k + 1:
                        self.infeasible = True
                        return
                    rel = [x for x in range(n) if x != u and x != v and du[x] + dv[x] <= k + 1]
                    inside = set(rel)
                    inside.add(v)
                    succ = {x: tuple(y for y in g.adjacency[x] if y in inside) for x in rel}
                start = tuple(x for x in g.adjacency[u] if x in succ)
                trigger = max(pos[x] for x in rel)
                entry = (v, start, succ)
                self.by_trigger[trigger].append(entry)
                for x in rel:
                    if pos[x] < trigger:
                        self.partial[pos[x]].append(entry)


def _pair_ok(v: int, start: tuple[int, ...], succ: dict, bits: list[int]) -> bool:
    stack = [(x, 0) for x in start]
    seen = set()
    while stack:
        x, mask = stack.pop()
        b = bits[x]
        if b & mask:
            continue
        nm = mask | b
        for y in succ[x]:
            if y == v:
                return True
            key = (y, nm)
            if key not in seen:
                seen.add(key)
                stack.append(key)
    return False


def _pair_possible(v: int, start: tuple[int, ...], succ: dict, bits: list[int], k: int) -> bool:
    """Optimistic version of :func:`_pair_ok` for a partially colored relevant set.

    Uncolored vertices are wildcards that each consume one fresh color, so a
    path survives only if its colored internals are distinct and the number of
    colors it needs stays within ``k``.
    """
    stack = [(x, 0, 0) for x in start]
    seen = set()
    while stack:
        x, mask, free = stack.pop()
        b = bits[x]
        if b:
            if b & mask:
                continue
            mask |= b
        else:
            free += 1
        if mask.bit_count() + free > k:
            continue
        for y in succ[x]:
            if y == v:
                return True
            key = (y, mask, free)
            if key not in seen:
                seen.add(key)
                stack.append(key)
    return False


def decide_k(g: Graph, k: int, mode: Mode | str, budget: SearchBudget = UNLIMITED,
             lookahead: bool = True) -> DecideResult:
    """Is there a coloring with at most ``k`` colors in the given mode?

    NONE is only returned after the symmetry-reduced space is exhausted.
    """
    mode = Mode.parse(mode)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > MAX_PALETTE:
        raise PaletteTooLarge(f"k={k} exceeds the {MAX_PALETTE}-color cap")
    if not g.distances.connected:
        raise GraphError("graph is disconnected")
    n = g.order
    if is_complete(g):
        return DecideResult(Decision.FOUND, VertexColoring.empty() if k == 0 else VertexColoring(k, (1,) * n))
    if k == 0:
        return DecideResult(Decision.NONE)

    order = search_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    table = _PairTable(g, k, mode, pos)
    if table.infeasible:
        return DecideResult(Decision.NONE)
    checks = table.by_trigger

    bits = [0] * n
    colors = [0] * n
    nodes = 0
    max_nodes = budget.max_nodes
    deadline = None if budget.max_time is None else time.perf_counter() + budget.max_time

    def extend(i: int, used: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        x = order[i]
        pending = checks[i]
        partial = table.partial[i] if lookahead else ()
        for col in range(1, min(used + 1, k) + 1):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise _BudgetExhausted
            if deadline is not None and nodes & 1023 == 0 and time.perf_counter() > deadline:
                raise _BudgetExhausted
            colors[x] = col
            bits[x] = 1 << (col - 1)
            for v, start, succ in pending:
                if not _pair_ok(v, start, succ, bits):
                    break
            else:
                for v, start, succ in partial:
                    if not _pair_possible(v, start, succ, bits, k):
                        break
                else:
                    if extend(i + 1, max(used, col)):
                        return True
        colors[x] = 0
        bits[x] = 0
        return False

    try:
        found = extend(0, 0)
    except _BudgetExhausted:
        return DecideResult(Decision.UNKNOWN, nodes=nodes)
    if not found:
        return DecideResult(Decision.NONE, nodes=nodes)
    witness = VertexColoring(max(colors), tuple(colors))
    if not check_coloring(g, witness, mode).valid:  # pragma: no cover - guards the pruning argument
        raise AssertionError("search produced an invalid coloring")
    return DecideResult(Decision.FOUND, witness, nodes)


def compute(g: Graph, mode: Mode | str, budget: SearchBudget = UNLIMITED) -> SolveResult:
    """Exact rvc(G) or srvc(G).

    Palettes are tried upward from :func:`lower_bound`. The budget covers the
    whole call; if it runs out the result is UNKNOWN with the bracket found so
    far.
    """
    mode = Mode.parse(mode)
    t0 = time.perf_counter()
    lb = lower_bound(g)
    if lb == 0:
        return SolveResult(mode, 0, VertexColoring.empty(), Status.EXACT, elapsed=time.perf_counter() - t0)
    result = SolveResult(mode, None, None, Status.UNKNOWN, largest_none=lb - 1)
    for k in range(lb, g.order + 1):
        remaining = budget
        if not budget.unlimited:
            remaining = SearchBudget(
                None if budget.max_nodes is None else max(0, budget.max_nodes - result.nodes_explored),
                None if budget.max_time is None else max(0.0, budget.max_time - (time.perf_counter() - t0)),
            )
        out = decide_k(g, k, mode, remaining)
        result.nodes_explored += out.nodes
        result.trace.append((k, out.decision))
        if out.decision is Decision.FOUND:
            result.value = k
            result.witness = out.witness
            result.smallest_found = k
            result.status = Status.EXACT
            break
        if out.decision is Decision.UNKNOWN:
            break
        result.largest_none = k
    result.elapsed = time.perf_counter() - t0
    return result


def rvc(g: Graph, budget: SearchBudget = UNLIMITED) -> int | None:
    return compute(g, Mode.RVC, budget).value


def srvc(g: Graph, budget: SearchBudget = UNLIMITED) -> int | None:
    return compute(g, Mode.SRVC, budget).value


# --------------------------------------------------------------------------
# brute-force oracle


def restricted_growth_strings(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Strings over ``1..k`` where each entry is at most one above the running max."""
    s = [0] * n

    def rec(i: int, m: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(s)
            return
        for c in range(1, min(m + 1, k) + 1):
            s[i] = c
            yield from rec(i + 1, max(m, c))

    if n == 0:
        yield ()
        return
    yield from rec(0, 0)


def oracle_exact(g: Graph, mode: Mode | str) -> int:
    """rvc / srvc by exhaustive enumeration with brute-force path checking.

    Shares nothing with :func:`compute` beyond the graph type: no distance
    matrix, no pruning, no vertex ordering.
    """
    mode = Mode.parse(mode)
    n = g.order
    if n > ORACLE_MAX_ORDER:
        raise GuardExceeded(f"oracle_exact limited to n <= {ORACLE_MAX_ORDER}")
    pairs = [(u, v) for u, v in itertools.combinations(range(n), 2) if not g.has_edge(u, v)]
    if not pairs:
        return 0
    internals: list[list[tuple[int, ...]]] = []
    for u, v in pairs:
        paths = simple_paths(g, u, v)
        if not paths:
            raise GraphError("graph is disconnected")
        if mode is Mode.SRVC:
            shortest = min(map(len, paths))
            paths = [p for p in paths if len(p) == shortest]
        internals.append([p[1:-1] for p in paths])
    for k in range(1, n + 1):
        for s in restricted_growth_strings(n, k):
            if max(s) != k:
                continue
            if all(any(len({s[x] for x in p}) == len(p) for p in plist) for plist in internals):
                return k
    raise AssertionError("unreachable: n distinct colors always suffice")


# --------------------------------------------------------------------------
# graph enumeration and the monotonicity sweep


def _pair_list(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _mask_connected(n: int, adj: list[int]) -> bool:
    seen = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on ``n`` vertices, edge-bitmask ascending.

    Bit ``i`` of the mask is the ``i``-th pair of ``combinations(range(n), 2)``.
    """
    if not 1 <= n <= 7:
        raise GuardExceeded("enumeration supports 1 <= n <= 7")
    pairs = _pair_list(n)
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            m >>= 1
            i += 1
        if n > 1 and not _mask_connected(n, adj):
            continue
        yield Graph(n, tuple(tuple(v for v in range(n) if (a >> v) & 1) for a in adj))


class Variant(str, enum.Enum):
    EDGE = "edge"
    VERTEX = "vertex"


@dataclass(frozen=True)
class Violation:
    graph: Graph
    element: int | tuple[int, int]
    srvc_before: int
    srvc_after: int


def search_monotonicity_violation(max_n: int, variant: Variant | str, budget: SearchBudget = UNLIMITED,
                                  min_n: int = 1) -> Violation | None:
    """First connected G and element x with G-x connected and srvc(G) > srvc(G-x).

    Graphs are scanned by order, then in enumeration order; elements by id
    (vertices) or lexicographically (edges). Pairs whose srvc could not be
    settled within ``budget`` are skipped.
    """
    variant = Variant(variant)
    if max_n > 7:
        raise GuardExceeded("max_n must be at most 7")
    cache: dict[tuple, int | None] = {}

    def value(h: Graph) -> int | None:
        key = (h.order, h.adjacency)
        if key not in cache:
            cache[key] = compute(h, Mode.SRVC, budget).value
        return cache[key]

    for n in range(max(min_n, 1), max_n + 1):
        for g in enumerate_connected_graphs(n):
            if variant is Variant.VERTEX:
                if n < 2:
                    continue
                candidates = [(x, g.remove_vertex(x)) for x in range(n)]
            else:
                candidates = [(e, g.remove_edge(*e)) for e in g.edges()]
            before = None
            for x, h in candidates:
                if not h.is_connected():
                    continue
                if before is None:
                    before = value(g)
                    if before is None:
                        break
                after = value(h)
                if after is not None and before > after:
                    return Violation(g, x, before, after)
    return None
