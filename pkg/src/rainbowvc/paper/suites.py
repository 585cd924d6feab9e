"""Named verification suites confronting the formulas, colorings and solver.

Each suite returns a :class:`SuiteReport` of rows ``(suite, case, expected,
observed, status)``. Status is ``pass`` or ``fail``; ``unknown`` marks a case
whose exact value could not be settled within the search budget, and
``finding`` marks an observation recorded without a verdict.
"""

from __future__ import annotations

import functools
import itertools
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from ..families import FamilySpec, Kind, generate, thm4_graph, thm4_order, thm4_path_ids, wheel2, wheel2_ids
from ..graph import (Graph, count_geodesics, cut_vertices, diameter, enumerate_paths, internal_pair_on_geodesic,
                     is_complete, is_path)
from ..rainbow import (Mode, VertexColoring, _oracle_from_paths, check_coloring, exists_rainbow_geodesic,
                       exists_rainbow_path, simple_paths)
from ..solver import (UNLIMITED, SearchBudget, SolveResult, Status, compute, enumerate_connected_graphs,
                      oracle_exact)
from .colorings import (thm1_coloring, thm4_rvc_coloring, thm4_srvc_coloring, wheel2_rvc_coloring,
                        wheel2_srvc_coloring)
from .formulas import formula_corollary12, formula_wheel2_rvc, formula_wheel2_srvc

PASS, FAIL, UNKNOWN, FINDING = "pass", "fail", "unknown", "finding"
COLUMNS = ("suite", "case", "expected", "observed", "status")


@dataclass(frozen=True)
class SuiteRow:
    suite: str
    case: str
    expected: str
    observed: str
    status: str


@dataclass
class SuiteReport:
    suite: str
    rows: list[SuiteRow] = field(default_factory=list)

    def add(self, case: str, expected, observed, ok: bool | None, status: str | None = None) -> None:
        if status is None:
            status = PASS if ok else FAIL
        self.rows.append(SuiteRow(self.suite, case, str(expected), str(observed), status))

    @property
    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.rows)

    @property
    def indeterminate(self) -> bool:
        return any(r.status == UNKNOWN for r in self.rows)

    @property
    def passed(self) -> bool:
        return not self.failed and not self.indeterminate

    def to_tsv(self, header: bool = True) -> str:
        lines = ["\t".join(COLUMNS)] if header else []
        lines += ["\t".join(getattr(r, c) for c in COLUMNS) for r in self.rows]
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        return "".join(json.dumps(asdict(r)) + "\n" for r in self.rows)


@dataclass(frozen=True)
class SuiteParams:
    min_n: int | None = None
    max_n: int | None = None
    pairs: tuple[tuple[int, int], ...] = ((5, 6), (5, 7), (6, 8))
    samples: int = 500
    seed: int = 20240501
    budget: SearchBudget = UNLIMITED


# --------------------------------------------------------------------------
# exhaustive sweep shared by several suites


@dataclass(frozen=True)
class SweepEntry:
    graph: Graph
    diameter: int
    path: bool
    complete: bool
    rvc: SolveResult
    srvc: SolveResult


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RVC_THREADS", "1")))
    except ValueError:
        return 1


def _solve_both(g: Graph) -> SweepEntry:
    return SweepEntry(g, diameter(g), is_path(g), is_complete(g), compute(g, Mode.RVC), compute(g, Mode.SRVC))


@functools.lru_cache(maxsize=None)
def sweep(n: int) -> tuple[SweepEntry, ...]:
    """rvc and srvc of every connected labeled graph of order ``n``, in enumeration order."""
    graphs = list(enumerate_connected_graphs(n))
    threads = _threads()
    if threads > 1 and len(graphs) > 1000:
        with ProcessPoolExecutor(threads) as ex:
            return tuple(ex.map(_solve_both, graphs, chunksize=512))
    return tuple(_solve_both(g) for g in graphs)


def _range(params: SuiteParams, lo: int, hi: int) -> range:
    return range(params.min_n if params.min_n is not None else lo, (params.max_n if params.max_n is not None else hi) + 1)


def _violations(entries: Iterable[SweepEntry], bad: Callable[[SweepEntry], bool]) -> tuple[int, int]:
    total = hit = 0
    for e in entries:
        total += 1
        if bad(e):
            hit += 1
    return total, hit


# --------------------------------------------------------------------------
# suites over the exhaustive sweep


def suite_prop11(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("prop11")
    for n in _range(params, 2, 6):
        entries = sweep(n)
        _, bad0 = _violations(entries, lambda e: (e.srvc.value == 0) != e.complete)
        _, bad1 = _violations(entries, lambda e: (e.srvc.value == 1) != (e.diameter == 2))
        rep.add(f"n={n} graphs={len(entries)} srvc=0 iff complete", "violations=0", f"violations={bad0}", bad0 == 0)
        rep.add(f"n={n} graphs={len(entries)} srvc=1 iff diam=2", "violations=0", f"violations={bad1}", bad1 == 0)
    return rep


def _random_connected(rng: random.Random, n: int) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    p = rng.uniform(0.0, 0.35)
    for e in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add(e)
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_graphs_with_diameter(samples: int, seed: int, min_diam: int = 3, n_range=(4, 12)) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < samples:
        g = _random_connected(rng, rng.randint(*n_range))
        if diameter(g) >= min_diam:
            out.append(g)
    return out


def suite_thm22(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("thm22-bounds")
    for n in _range(params, 3, 6):
        entries = sweep(n)
        _, bad = _violations(entries, lambda e: not 0 <= e.srvc.value <= n - 2)
        rep.add(f"n={n} graphs={len(entries)} 0<=srvc<=n-2", "violations=0", f"violations={bad}", bad == 0)
        _, bad = _violations(entries, lambda e: not e.diameter - 1 <= e.rvc.value <= e.srvc.value)
        rep.add(f"n={n} graphs={len(entries)} diam-1<=rvc<=srvc", "violations=0", f"violations={bad}", bad == 0)
        tested = bad = 0
        for e in entries:
            if e.diameter >= 3:
                tested += 1
                c = thm1_coloring(e.graph)
                if c.colors_used > n - 2 or not check_coloring(e.graph, c, Mode.SRVC).valid:
                    bad += 1
        rep.add(f"n={n} thm1 coloring on all diam>=3 graphs ({tested})", "failures=0", f"failures={bad}", bad == 0)
    bad = 0
    graphs = random_graphs_with_diameter(params.samples, params.seed)
    for g in graphs:
        c = thm1_coloring(g)
        if c.colors_used > g.order - 2 or not check_coloring(g, c, Mode.SRVC).valid:
            bad += 1
    rep.add(f"thm1 coloring random samples={len(graphs)} seed={params.seed} n<=12 diam>=3",
            "failures=0", f"failures={bad}", bad == 0)
    return rep


def suite_thm23(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("thm23-char")
    for n in _range(params, 3, 6):
        entries = sweep(n)
        _, bad = _violations(entries, lambda e: (e.srvc.value == n - 2) != e.path)
        paths = sum(e.path for e in entries)
        rep.add(f"n={n} graphs={len(entries)} srvc=n-2 iff path (paths={paths})", "violations=0",
                f"violations={bad}", bad == 0)
    return rep


def suite_lem24(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("lem24-nonpath")
    for n in _range(params, 3, 6):
        entries = [e for e in sweep(n) if not e.path]
        _, bad = _violations(entries, lambda e: e.srvc.value > n - 3)
        rep.add(f"n={n} non-paths={len(entries)} srvc<=n-3", "violations=0", f"violations={bad}", bad == 0)
    return rep


def suite_solver_oracle(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("solver-oracle")
    for n in _range(params, 1, 6):
        entries = sweep(n)
        for mode in (Mode.RVC, Mode.SRVC):
            bad = 0
            for e in entries:
                got = (e.rvc if mode is Mode.RVC else e.srvc).value
                if got != oracle_exact(e.graph, mode):
                    bad += 1
            rep.add(f"n={n} graphs={len(entries)} mode={mode.value} compute==oracle_exact", "mismatches=0",
                    f"mismatches={bad}", bad == 0)
    return rep


def suite_cutvertex(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("cutvertex-colors")
    for n in _range(params, 4, 6):
        graphs = found = 0
        example = ""
        for e in sweep(n):
            cuts = sorted(cut_vertices(e.graph))
            if len(cuts) < 2:
                continue
            graphs += 1
            w = e.rvc.witness
            if len({w[x] for x in cuts}) != len(cuts):
                found += 1
                if not example:
                    example = f" first={e.graph.edges()}"
        status = PASS if found == 0 else FINDING
        rep.add(f"n={n} graphs with >=2 cut vertices={graphs}", "cut vertices pairwise distinct",
                f"counterexamples={found}{example}", None, status)
    return rep


def suite_lem21(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("lem21-geodesic")
    for n in _range(params, 3, 6):
        tested = bad = 0
        for g in enumerate_connected_graphs(n):
            d = g.distances.dist
            diam = diameter(g)
            for x, y in itertools.combinations(range(n), 2):
                if d[x][y] >= diam - 1:
                    tested += 1
                    if internal_pair_on_geodesic(g, x, y):
                        bad += 1
        rep.add(f"n={n} pairs with d>=diam-1 ({tested})", "no geodesic with both internal",
                f"violations={bad}", bad == 0)
    return rep


def geodesics_bruteforce(g: Graph) -> list[tuple[int, ...]]:
    """Every geodesic of ``g``, from full simple-path enumeration."""
    out = []
    for u, v in itertools.combinations(range(g.order), 2):
        paths = simple_paths(g, u, v)
        shortest = min(map(len, paths))
        out += [p for p in paths if len(p) == shortest]
    return out


def suite_checker_oracle(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("checker-oracle")
    rng = random.Random(params.seed)
    ns = list(_range(params, 2, 6))
    pool: list[Graph] = []
    for n in ns:
        graphs = list(enumerate_connected_graphs(n))
        pool += graphs
        bad_path = bad_geo = checks = 0
        for g in graphs:
            table = _oracle_tables(g)
            for bits in range(1 << n):
                colors = tuple(1 + ((bits >> v) & 1) for v in range(n))
                c = VertexColoring(2, colors)
                for u, v, paths, geos in table:
                    checks += 1
                    if exists_rainbow_path(g, c, u, v) != _oracle_from_paths(paths, colors):
                        bad_path += 1
                    if exists_rainbow_geodesic(g, c, u, v) != _oracle_from_paths(geos, colors):
                        bad_geo += 1
        rep.add(f"n={n} graphs={len(graphs)} all 2-colorings path ({checks} pair checks)", "mismatches=0",
                f"mismatches={bad_path}", bad_path == 0)
        rep.add(f"n={n} graphs={len(graphs)} all 2-colorings geodesic ({checks} pair checks)", "mismatches=0",
                f"mismatches={bad_geo}", bad_geo == 0)
    samples = 1000
    bad_path = bad_geo = 0
    for _ in range(samples):
        g = rng.choice(pool)
        colors = tuple(rng.randint(1, 3) for _ in range(g.order))
        c = VertexColoring(3, colors)
        for u, v, paths, geos in _oracle_tables(g):
            if exists_rainbow_path(g, c, u, v) != _oracle_from_paths(paths, colors):
                bad_path += 1
            if exists_rainbow_geodesic(g, c, u, v) != _oracle_from_paths(geos, colors):
                bad_geo += 1
    rep.add(f"random 3-colorings samples={samples} seed={params.seed} path", "mismatches=0",
            f"mismatches={bad_path}", bad_path == 0)
    rep.add(f"random 3-colorings samples={samples} seed={params.seed} geodesic", "mismatches=0",
            f"mismatches={bad_geo}", bad_geo == 0)
    return rep


def _oracle_tables(g: Graph) -> list[tuple[int, int, list, list]]:
    table = []
    for u, v in itertools.combinations(range(g.order), 2):
        paths = simple_paths(g, u, v)
        shortest = min(map(len, paths))
        table.append((u, v, paths, [p for p in paths if len(p) == shortest]))
    return table


# --------------------------------------------------------------------------
# families and the two-layer wheel


def suite_cor12(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("cor12")
    cases: list[tuple[str, FamilySpec]] = []
    for s in range(2, 5):
        for t in range(2, 5):
            cases.append((f"K_{{{s},{t}}}", FamilySpec(Kind.BIPARTITE, s=s, t=t)))
    cases.append(("K_{2,2,2}", FamilySpec(Kind.MULTIPARTITE, parts=(2, 2, 2))))
    for n in range(4, 9):
        cases.append((f"W_{n}", FamilySpec(Kind.WHEEL, n=n)))
    for n in range(3, 9):
        cases.append((f"P_{n}", FamilySpec(Kind.PATH, n=n)))
    cases.append(("W_3", FamilySpec(Kind.WHEEL, n=3)))
    cases.append(("K_{1,1,1}", FamilySpec(Kind.MULTIPARTITE, parts=(1, 1, 1))))
    cases.append(("K_{1,1,1,1}", FamilySpec(Kind.MULTIPARTITE, parts=(1, 1, 1, 1))))
    for name, spec in cases:
        f = formula_corollary12(spec)
        got = compute(generate(spec), Mode.SRVC, params.budget)
        if f.caveat:
            rep.add(f"{name} srvc", f"{f.value} [caveat: {f.caveat}]", got.value, got.value == 0)
        else:
            rep.add(f"{name} srvc", f.value, got.value, got.value == f.value)
    return rep


def _solve_row(rep: SuiteReport, case: str, expected: int, result: SolveResult) -> None:
    if result.status is Status.EXACT:
        rep.add(case, expected, result.value, result.value == expected)
    else:
        bracket = f"unknown (largest NONE={result.largest_none}, smallest FOUND={result.smallest_found})"
        rep.add(case, expected, bracket, None, UNKNOWN)


def _coloring_row(rep: SuiteReport, case: str, g: Graph, c: VertexColoring, colors: int, mode: Mode) -> None:
    r = check_coloring(g, c, mode)
    observed = f"colors={c.colors_used} valid={r.valid}"
    if not r.valid:
        observed += f" failing_pair={r.failing_pair}"
    rep.add(case, f"colors={colors} valid=True", observed, r.valid and c.colors_used == colors)


def suite_lemma3(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("lemma3")
    for n in _range(params, 3, 10):
        g = wheel2(n)
        f = formula_wheel2_rvc(n).value
        _solve_row(rep, f"W2_{n} rvc", f, compute(g, Mode.RVC, params.budget))
        _coloring_row(rep, f"W2_{n} proof coloring rvc", g, wheel2_rvc_coloring(n), f, Mode.RVC)
    return rep


def suite_lemma4(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("lemma4")
    for n in _range(params, 3, 10):
        g = wheel2(n)
        f = formula_wheel2_srvc(n).value
        _solve_row(rep, f"W2_{n} srvc", f, compute(g, Mode.SRVC, params.budget))
        _coloring_row(rep, f"W2_{n} proof coloring srvc", g, wheel2_srvc_coloring(n), f, Mode.SRVC)
        if n >= 11:
            _coloring_row(rep, f"W2_{n} repaired block coloring srvc", g, wheel2_srvc_coloring(n, repaired=True),
                          f, Mode.SRVC)
    return rep


def suite_lemma4_pigeonhole(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("lemma4-pigeonhole")
    for n in _range(params, 11, 15):
        def cyc(i, j):
            return min(abs(i - j), n - abs(i - j))

        subsets = lacking = 0
        for sub in itertools.combinations(range(1, n + 1), 6):
            subsets += 1
            if not any(cyc(i, j) >= 5 for i, j in itertools.combinations(sub, 2)):
                lacking += 1
        rep.add(f"W2_{n} 6-subsets of spokes ({subsets})", "all contain a pair at cycle distance>=5",
                f"lacking={lacking}", lacking == 0)
        g = wheel2(n)
        w, u, v = wheel2_ids(n)
        pairs = bad = 0
        for i, j in itertools.combinations(range(1, n + 1), 2):
            if cyc(i, j) < 5:
                continue
            pairs += 1
            unique = count_geodesics(g, v[i], v[j]) == 1
            via_hub = enumerate_paths(g, v[i], v[j], max_len=4).paths == [[v[i], u[i], w, u[j], v[j]]]
            if not (unique and via_hub):
                bad += 1
        rep.add(f"W2_{n} v_i-v_j geodesic for cycle distance>=5 ({pairs} pairs)",
                "unique and equal to v_i,u_i,w,u_j,v_j", f"violations={bad}", bad == 0)
    return rep


def suite_thm4_colorings(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("thm4-colorings")
    for a, b in params.pairs:
        g = thm4_graph(a, b)
        n = thm4_order(a, b)
        rep.add(f"G({a},{b}) size", f"n={n} vertices={2 * n + a - 1} edges={4 * n + a - 2}",
                f"n={n} vertices={g.order} edges={g.size}", g.order == 2 * n + a - 1 and g.size == 4 * n + a - 2)
        _coloring_row(rep, f"G({a},{b}) rvc proof coloring", g, thm4_rvc_coloring(a, b), a, Mode.RVC)
        _coloring_row(rep, f"G({a},{b}) srvc proof coloring", g, thm4_srvc_coloring(a, b), b, Mode.SRVC)
        _coloring_row(rep, f"G({a},{b}) srvc repaired coloring", g, thm4_srvc_coloring(a, b, repaired=True), b,
                      Mode.SRVC)
    return rep


def suite_thm4_forcing(params: SuiteParams) -> SuiteReport:
    rep = SuiteReport("thm4-forcing")
    for a, b in params.pairs:
        g = thm4_graph(a, b)
        n = thm4_order(a, b)
        s = thm4_path_ids(a, b)
        w, u, v = wheel2_ids(n)
        bad = 0
        for i in range(1, n + 1):
            found = enumerate_paths(g, s[0], u[i], max_len=a - 1).paths
            if found != [s + [u[i]]]:
                bad += 1
        rep.add(f"G({a},{b}) s_0-u_i paths of length<=a-1", "exactly one, via s_1..s_{a-3},w",
                f"violations={bad}", bad == 0)
        bad = 0
        for j in range(1, n + 1):
            d = g.distances[s[0], v[j]]
            geo = enumerate_paths(g, s[0], v[j], max_len=d).paths
            if d != a or count_geodesics(g, s[0], v[j]) != 1 or geo != [s + [u[j], v[j]]]:
                bad += 1
        rep.add(f"G({a},{b}) d(s_0,v_j)=a with unique geodesic through w,u_j", "violations=0",
                f"violations={bad}", bad == 0)
        cuts = cut_vertices(g)
        expected = set(s[1:])
        rep.add(f"G({a},{b}) cut vertices", sorted(expected), sorted(cuts), cuts == expected)
    return rep


SUITES: dict[str, Callable[[SuiteParams], SuiteReport]] = {
    "prop11": suite_prop11,
    "cor12": suite_cor12,
    "thm22-bounds": suite_thm22,
    "thm23-char": suite_thm23,
    "lem24-nonpath": suite_lem24,
    "lem21-geodesic": suite_lem21,
    "lemma3": suite_lemma3,
    "lemma4": suite_lemma4,
    "thm4-colorings": suite_thm4_colorings,
    "thm4-forcing": suite_thm4_forcing,
    "cutvertex-colors": suite_cutvertex,
    "checker-oracle": suite_checker_oracle,
    "solver-oracle": suite_solver_oracle,
    "lemma4-pigeonhole": suite_lemma4_pigeonhole,
}


def verify_suite(name: str, params: SuiteParams | None = None) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(params or SuiteParams())
