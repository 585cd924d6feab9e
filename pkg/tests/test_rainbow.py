import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowvc.errors import ColoringError, GuardExceeded, PaletteTooLarge, ParseError
from rainbowvc.families import complete, cycle, path, wheel2
from rainbowvc.paper.colorings import wheel2_c1, wheel2_c2
from rainbowvc.rainbow import (
    Mode, VertexColoring, check_coloring, exists_rainbow_geodesic, exists_rainbow_path, format_coloring,
    is_valid, oracle_rainbow_path, parse_coloring,
)
from rainbowvc.solver import enumerate_connected_graphs

from conftest import colored_graphs, connected_graphs


def vc(*colors):
    return VertexColoring.of(colors)


def test_adjacent_pair_always_rainbow():
    g = wheel2(5)
    c = VertexColoring(1, (1,) * g.order)
    for u, v in g.edges():
        assert exists_rainbow_path(g, c, u, v)
        assert exists_rainbow_geodesic(g, c, u, v)


def test_p4_repeat_blocks_pair():
    g = path(4)
    assert not exists_rainbow_path(g, vc(1, 1, 1, 1), 0, 3)
    assert not exists_rainbow_geodesic(g, vc(2, 1, 1, 2), 0, 3)
    assert exists_rainbow_geodesic(g, vc(1, 1, 2, 1), 0, 3)


def test_wheel2_c2_all_pairs():
    g = wheel2(7)
    c = VertexColoring.of(wheel2_c2(7), 3)
    assert all(exists_rainbow_path(g, c, u, v) for u in range(g.order) for v in range(u + 1, g.order))


def test_empty_coloring_on_complete():
    for mode in Mode:
        rep = check_coloring(complete(5), VertexColoring.empty(), mode)
        assert rep.valid and rep.failing_pair is None


def test_empty_coloring_fails_non_adjacent():
    assert not exists_rainbow_path(path(3), VertexColoring.empty(), 0, 2)
    assert check_coloring(path(3), VertexColoring.empty(), Mode.RVC).failing_pair == (0, 2)


def test_wheel2_c1_both_modes():
    g = wheel2(4)
    c = VertexColoring.of(wheel2_c1(4), 2)
    assert check_coloring(g, c, Mode.RVC).valid
    assert check_coloring(g, c, Mode.SRVC).valid


def test_failing_pair_is_lexicographic():
    g = path(5)
    rep = check_coloring(g, vc(1, 1, 1, 1, 1), "srvc")
    assert rep.failing_pair == (0, 3)
    assert not rep.valid


def test_geodesic_stricter_than_path():
    # C6 with 0-3 geodesics 0-1-2-3 and 0-5-4-3; only the long way is rainbow
    g = cycle(6)
    c = vc(1, 1, 1, 1, 2, 1)
    assert exists_rainbow_path(g, c, 0, 3)
    assert exists_rainbow_geodesic(g, c, 0, 3)
    c = vc(1, 1, 1, 1, 1, 1)
    assert not exists_rainbow_geodesic(g, c, 0, 3)
    # 0-2 has only the short geodesic 0-1-2 but a long path too
    g = cycle(5)
    c = vc(1, 1, 1, 2, 2)
    assert exists_rainbow_path(g, c, 0, 2)


def test_oracle_examples():
    assert oracle_rainbow_path(path(3), vc(1, 1, 1), 0, 2)
    assert oracle_rainbow_path(cycle(5), vc(1, 1, 1, 1, 1), 0, 2)
    with pytest.raises(GuardExceeded):
        oracle_rainbow_path(path(13), VertexColoring(1, (1,) * 13), 0, 2)


def test_coloring_validation():
    with pytest.raises(ColoringError):
        VertexColoring(2, (1, 3))
    with pytest.raises(ColoringError):
        VertexColoring(0, (1,))
    with pytest.raises(PaletteTooLarge):
        VertexColoring(65, (1,))
    with pytest.raises(ColoringError):
        check_coloring(path(3), vc(1, 1), Mode.RVC)


def test_coloring_format_roundtrip():
    c = VertexColoring(3, (1, 3, 2, 1))
    text = format_coloring(c, comment="demo")
    assert text == "# demo\n4 3\n0 1\n1 3\n2 2\n3 1\n"
    assert parse_coloring(text) == c
    assert parse_coloring("5 0\n") == VertexColoring.empty()


@pytest.mark.parametrize("text,kind", [
    ("2 2\n0 1\n0 2\n", "duplicate"),
    ("2 2\n0 1\n2 2\n", "range"),
    ("2 2\n0 1\n1 3\n", "color"),
    ("2 2\n0 1\n", "count"),
    ("2 65\n0 1\n1 1\n", "color"),
    ("2\n", "malformed"),
])
def test_parse_coloring_errors(text, kind):
    with pytest.raises(ParseError) as exc:
        parse_coloring(text)
    assert exc.value.kind == kind


def test_oracle_random_small():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(2, 8)
        graphs = list(enumerate_connected_graphs(n)) if n <= 4 else None
        if graphs:
            g = rng.choice(graphs)
        else:
            edges = {(rng.randrange(v), v) for v in range(1, n)}
            edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3}
            from rainbowvc.graph import Graph
            g = Graph.from_edges(n, edges)
        k = rng.randint(1, 3)
        c = VertexColoring(k, tuple(rng.randint(1, k) for _ in range(n)))
        u, v = rng.sample(range(n), 2)
        assert exists_rainbow_path(g, c, u, v) == oracle_rainbow_path(g, c, u, v)
        assert exists_rainbow_geodesic(g, c, u, v) == oracle_rainbow_path(g, c, u, v, geodesic=True)


def _pairs(g):
    return [(u, v) for u in range(g.order) for v in range(u + 1, g.order)]


@settings(max_examples=200, deadline=None)
@given(colored_graphs(max_n=7), st.data())
def test_endpoint_colors_irrelevant(gkc, data):
    g, k, colors = gkc
    c = VertexColoring(k, tuple(colors))
    for u, v in _pairs(g):
        recolored = list(colors)
        recolored[u] = data.draw(st.integers(1, k))
        recolored[v] = data.draw(st.integers(1, k))
        c2 = VertexColoring(k, tuple(recolored))
        assert exists_rainbow_path(g, c, u, v) == exists_rainbow_path(g, c2, u, v)
        assert exists_rainbow_geodesic(g, c, u, v) == exists_rainbow_geodesic(g, c2, u, v)


@settings(max_examples=200, deadline=None)
@given(colored_graphs(max_n=7), st.randoms(use_true_random=False))
def test_color_permutation_invariance(gkc, rnd):
    g, k, colors = gkc
    c = VertexColoring(k, tuple(colors))
    image = list(range(1, k + 1))
    rnd.shuffle(image)
    c2 = c.relabel(dict(zip(range(1, k + 1), image)))
    for mode in Mode:
        assert check_coloring(g, c, mode).valid == check_coloring(g, c2, mode).valid
    for u, v in _pairs(g):
        assert exists_rainbow_path(g, c, u, v) == exists_rainbow_path(g, c2, u, v)


@settings(max_examples=300, deadline=None)
@given(colored_graphs(max_n=8))
def test_mode_monotonicity(gkc):
    g, k, colors = gkc
    c = VertexColoring(k, tuple(colors))
    if is_valid(g, c, Mode.SRVC):
        assert is_valid(g, c, Mode.RVC)
    for u, v in _pairs(g):
        if exists_rainbow_geodesic(g, c, u, v):
            assert exists_rainbow_path(g, c, u, v)


@settings(max_examples=200, deadline=None)
@given(colored_graphs(max_n=7))
def test_checker_matches_oracle(gkc):
    g, k, colors = gkc
    c = VertexColoring(k, tuple(colors))
    for u, v in _pairs(g):
        assert exists_rainbow_path(g, c, u, v) == oracle_rainbow_path(g, c, u, v)
        assert exists_rainbow_geodesic(g, c, u, v) == oracle_rainbow_path(g, c, u, v, geodesic=True)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=8))
def test_check_report_consistent(g):
    c = VertexColoring(1, (1,) * g.order)
    for mode in Mode:
        rep = check_coloring(g, c, mode)
        assert rep.valid == (rep.failing_pair is None)
        if rep.failing_pair:
            u, v = rep.failing_pair
            pred = exists_rainbow_path if mode is Mode.RVC else exists_rainbow_geodesic
            assert not pred(g, c, u, v)
