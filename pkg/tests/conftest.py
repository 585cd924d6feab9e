import itertools
import sys

from hypothesis import strategies as st

from rainbowvc.graph import Graph


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    """Random spanning tree plus random extra edges, so always connected."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    rest = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    if rest:
        edges |= set(draw(st.lists(st.sampled_from(rest), unique=True, max_size=len(rest))))
    return Graph.from_edges(n, edges)


@st.composite
def colored_graphs(draw, min_n=2, max_n=7, max_k=4):
    g = draw(connected_graphs(min_n, max_n))
    k = draw(st.integers(1, max_k))
    colors = draw(st.lists(st.integers(1, k), min_size=g.order, max_size=g.order))
    return g, k, colors


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.LINES:
        terminalreporter.write_line(line)
