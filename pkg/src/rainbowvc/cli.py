"""Command-line front end.

Exit codes: 0 success / pass, 1 check or suite failed, 2 usage or format
error, 3 search budget exhausted (indeterminate).
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from pathlib import Path

from .errors import RainbowError
from .families import FamilySpec, Kind, generate, paper_label
from .graph import Graph, diameter, format_edge_list, parse_edge_list
from .paper.colorings import ColoringSpec, Which, paper_coloring
from .paper.suites import SUITES, SuiteParams, verify_suite
from .rainbow import Mode, check_coloring, format_coloring, parse_coloring
from .solver import SearchBudget, Status, Variant, compute, oracle_exact, search_monotonicity_violation

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

# exact searches above this many vertices must carry an explicit budget
GUARD_ORDER = 24


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _family_comment(text: str) -> FamilySpec | None:
    for line in text.splitlines():
        line = line.strip()
        if not line.startswith("#"):
            if line:
                break
            continue
        m = re.match(r"#\s*(wheel2)\s+n=(\d+)\s*$", line)
        if m:
            return FamilySpec(Kind.WHEEL2, n=int(m.group(2)))
        m = re.match(r"#\s*thm4\s+a=(\d+)\s+b=(\d+)\s*$", line)
        if m:
            return FamilySpec(Kind.THM4, a=int(m.group(1)), b=int(m.group(2)))
    return None


def _load_graph(path: str) -> tuple[Graph, FamilySpec | None]:
    text = _read_text(path)
    return parse_edge_list(text), _family_comment(text)


def _labeler(args, family: FamilySpec | None, g: Graph):
    if not getattr(args, "paper_labels", False):
        return str
    if family is None:
        if g.order % 2 == 0 or g.order < 7:
            raise UsageError("--paper-labels needs a two-layer wheel (family comment missing)")
        family = FamilySpec(Kind.WHEEL2, n=(g.order - 1) // 2)
    return lambda v: paper_label(family, v)


def _budget(args) -> SearchBudget:
    return SearchBudget(args.max_nodes, args.max_time)


def _require_budget(args, order: int) -> None:
    if order > GUARD_ORDER and args.max_nodes is None and args.max_time is None:
        raise UsageError(f"graphs with more than {GUARD_ORDER} vertices need --max-nodes or --max-time")


# --------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    parts = tuple(int(p) for p in args.parts.split(",")) if args.parts else None
    spec = FamilySpec(Kind(args.family), n=args.n, s=args.s, t=args.t, parts=parts, a=args.a, b=args.b)
    g = generate(spec)
    _write_text(args.out, format_edge_list(g, comment=spec.describe()))
    return EXIT_OK


def cmd_dist(args) -> int:
    g, family = _load_graph(args.graph)
    lab = _labeler(args, family, g)
    out = [f"diameter\t{diameter(g)}"]
    if args.matrix:
        out.append("\t".join([""] + [lab(v) for v in range(g.order)]))
        for u in range(g.order):
            out.append("\t".join([lab(u)] + [str(d) for d in g.distances.row(u)]))
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    g, family = _load_graph(args.graph)
    c = parse_coloring(_read_text(args.coloring))
    lab = _labeler(args, family, g)
    report = check_coloring(g, c, Mode.parse(args.mode))
    lines = [f"mode\t{report.mode.value}", f"valid\t{str(report.valid).lower()}",
             f"pairs_checked\t{report.pairs_checked}"]
    if report.failing_pair:
        u, v = report.failing_pair
        lines.append(f"failing_pair\t{lab(u)}\t{lab(v)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if report.valid else EXIT_FAIL


def cmd_solve(args) -> int:
    g, family = _load_graph(args.graph)
    lab = _labeler(args, family, g)
    _require_budget(args, g.order)
    mode = Mode.parse(args.mode)
    result = compute(g, mode, _budget(args))
    lines = [f"mode\t{mode.value}"]
    if result.status is Status.EXACT:
        lines.append(f"value\t{result.value}")
    else:
        lines.append("value\tunknown")
        lines.append(f"bracket\t{(result.largest_none or 0) + 1}\t{g.order - 2 if result.smallest_found is None else result.smallest_found}")
    lines.append(f"status\t{result.status.value}")
    lines.append(f"nodes\t{result.nodes_explored}")
    code = EXIT_OK if result.status is Status.EXACT else EXIT_BUDGET
    if args.oracle:
        expected = oracle_exact(g, mode)
        agree = result.value == expected
        lines.append(f"oracle\t{expected}\t{'agree' if agree else 'disagree'}")
        if not agree and code == EXIT_OK:
            code = EXIT_FAIL
    if result.witness is not None and result.witness.palette_size:
        lines.append("witness\t" + " ".join(f"{lab(v)}={col}" for v, col in enumerate(result.witness.colors)))
        if args.witness_out:
            _write_text(args.witness_out, format_coloring(result.witness, g.order))
    if args.stats:
        lines.append(f"elapsed_s\t{result.elapsed:.3f}")
    sys.stdout.write("\n".join(lines) + "\n")
    return code


def cmd_paper_coloring(args) -> int:
    spec = ColoringSpec(Which(args.which), n=args.n, a=args.a, b=args.b, repaired=args.repaired)
    g = None
    if args.graph:
        g, _ = _load_graph(args.graph)
    c = paper_coloring(spec, g)
    comment = f"{spec.which.value}" + (f" n={spec.n}" if spec.n else "") + (
        f" a={spec.a} b={spec.b}" if spec.a else "") + (" repaired" if spec.repaired else "")
    _write_text(args.out, format_coloring(c, comment=comment))
    return EXIT_OK


def _pairs(values) -> tuple[tuple[int, int], ...]:
    out = []
    for v in values:
        try:
            a, b = (int(x) for x in v.split(","))
        except ValueError:
            raise UsageError(f"--pair expects 'a,b', got {v!r}") from None
        out.append((a, b))
    return tuple(out)


def cmd_verify(args) -> int:
    params = SuiteParams(min_n=args.min, max_n=args.max, samples=args.samples, seed=args.seed,
                         budget=_budget(args), **({"pairs": _pairs(args.pair)} if args.pair else {}))
    if args.suite in ("lemma3", "lemma4") and args.max is not None:
        _require_budget(args, 2 * args.max + 1)
    t0 = time.perf_counter()
    report = verify_suite(args.suite, params)
    text = report.to_jsonl() if args.format == "jsonl" else report.to_tsv()
    _write_text(args.out, text)
    if args.stats:
        sys.stderr.write(f"elapsed_s\t{time.perf_counter() - t0:.3f}\n")
    if report.failed:
        return EXIT_FAIL
    if report.indeterminate:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_search_violation(args) -> int:
    found = search_monotonicity_violation(args.max_n, Variant(args.variant), _budget(args), min_n=args.min_n)
    if found is None:
        sys.stdout.write(f"variant\t{args.variant}\nresult\tnone\n")
        return EXIT_OK
    element = found.element if isinstance(found.element, int) else f"{found.element[0]}-{found.element[1]}"
    sys.stdout.write(
        f"variant\t{args.variant}\nresult\tfound\nn\t{found.graph.order}\n"
        f"removed\t{element}\nsrvc_before\t{found.srvc_before}\nsrvc_after\t{found.srvc_after}\n"
        + format_edge_list(found.graph)
    )
    return EXIT_OK


# --------------------------------------------------------------------------


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, help="search node budget")
    p.add_argument("--max-time", type=float, help="search time budget in seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowvc", description="Rainbow vertex-connection toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph as an edge list")
    p.add_argument("--family", required=True, choices=[k.value for k in Kind])
    for name in ("n", "s", "t", "a", "b"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--parts", help="comma-separated part sizes for multipartite")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dist", help="diameter and distance matrix")
    p.add_argument("--graph", required=True)
    p.add_argument("--matrix", action="store_true")
    p.add_argument("--paper-labels", action="store_true")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("check", help="validate a coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--mode", required=True, choices=["rvc", "srvc"])
    p.add_argument("--paper-labels", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="exact rvc or srvc")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", required=True, choices=["rvc", "srvc"])
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force (n <= 8)")
    p.add_argument("--witness-out")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--paper-labels", action="store_true")
    _add_budget(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("paper-coloring", help="write a coloring from one of the proofs")
    p.add_argument("--which", required=True, choices=[w.value for w in Which])
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--graph", help="graph file (required for thm1)")
    p.add_argument("--repaired", action="store_true", help="use the repaired block coloring")
    p.add_argument("--out")
    p.set_defaults(func=cmd_paper_coloring)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--min", type=int)
    p.add_argument("--max", type=int)
    p.add_argument("--pair", action="append", help="a,b for the thm4 suites (repeatable)")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=20240501)
    p.add_argument("--format", choices=["tsv", "jsonl"], default="tsv")
    p.add_argument("--out")
    p.add_argument("--stats", action="store_true")
    _add_budget(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-violation", help="look for srvc(G) > srvc(G - x)")
    p.add_argument("--variant", required=True, choices=[v.value for v in Variant])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    _add_budget(p)
    p.set_defaults(func=cmd_search_violation)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, RainbowError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
