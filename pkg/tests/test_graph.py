import pytest
from hypothesis import given, settings

from rainbowvc.errors import GraphError, ParseError
from rainbowvc.families import complete, complete_bipartite, cycle, path, thm4_graph, thm4_path_ids, wheel2
from rainbowvc.graph import (
    Graph, all_pairs_distances, bfs_distances, classify_graph, count_geodesics, cut_vertices, diameter,
    eccentricity, enumerate_paths, format_edge_list, internal_pair_on_geodesic, is_connected, lex_geodesic,
    parse_edge_list,
)
from rainbowvc.solver import enumerate_connected_graphs

from conftest import connected_graphs


def test_parse_path():
    g = parse_edge_list("3 2\n0 1\n1 2\n")
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_parse_complete():
    text = "4 6\n" + "\n".join(f"{u} {v}" for u in range(4) for v in range(u + 1, 4))
    assert parse_edge_list(text) == complete(4)


def test_parse_skips_comments_and_blanks():
    assert parse_edge_list("# a path\n\n3 2\n0 1\n# mid\n1 2\n") == path(3)


@pytest.mark.parametrize("text,kind", [
    ("3 1\n0 3\n", "range"),
    ("3 1\n1 1\n", "loop"),
    ("3 2\n0 1\n1 0\n", "duplicate"),
    ("3 2\n0 1\n", "count"),
    ("3 1\n0 x\n", "malformed"),
    ("", "malformed"),
])
def test_parse_errors(text, kind):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.kind == kind


def test_format_roundtrip():
    g = wheel2(5)
    assert parse_edge_list(format_edge_list(g, comment="wheel2 n=5")) == g


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, ((1,), ()))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])


def test_distances_examples():
    assert all_pairs_distances(path(4))[0, 3] == 3
    d = all_pairs_distances(complete(4))
    assert all(d[u, v] == 1 for u in range(4) for v in range(4) if u != v)
    # v_1 = 9, v_5 = 13 in W2_8
    assert all_pairs_distances(wheel2(8))[9, 13] == 4


@pytest.mark.parametrize("n", range(1, 9))
def test_path_diameter(n):
    assert diameter(path(n)) == n - 1


@pytest.mark.parametrize("n,expected", [(3, 2), (5, 3), (6, 3), (7, 3), (8, 4), (9, 4), (10, 4), (11, 4)])
def test_wheel2_diameter(n, expected):
    assert diameter(wheel2(n)) == expected


def test_disconnected_rejected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not is_connected(g)
    assert classify_graph(g).connected is False
    with pytest.raises(GraphError):
        diameter(g)


def test_cut_vertices_examples():
    assert cut_vertices(path(4)) == {1, 2}
    assert cut_vertices(complete(4)) == set()
    s = thm4_path_ids(5, 6)
    assert cut_vertices(thm4_graph(5, 6)) == {s[1], s[2], s[3]}


def test_cut_vertices_bruteforce():
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            brute = {x for x in range(n) if n > 2 and not g.remove_vertex(x).is_connected()}
            assert cut_vertices(g) == brute


def test_classify_examples():
    k1 = classify_graph(Graph(1, ((),)))
    assert k1.connected and k1.complete and k1.path_graph and k1.min_degree == 0
    c4 = classify_graph(cycle(4))
    assert (c4.complete, c4.path_graph, c4.min_degree) == (False, False, 2)
    star = classify_graph(complete_bipartite(1, 3))
    assert (star.complete, star.path_graph, star.min_degree, star.cut_vertex_count) == (False, False, 1, 1)


def test_internal_pair_examples():
    p5 = path(5)
    assert internal_pair_on_geodesic(p5, 1, 3)
    assert not internal_pair_on_geodesic(p5, 0, 4)
    c5 = cycle(5)
    assert not any(internal_pair_on_geodesic(c5, x, (x + 2) % 5) for x in range(5))


def test_count_geodesics_examples():
    assert count_geodesics(path(4), 0, 3) == 1
    assert count_geodesics(cycle(4), 0, 2) == 2
    n = 11
    assert count_geodesics(wheel2(n), n + 1, n + 7) == 1
    assert lex_geodesic(wheel2(n), n + 1, n + 7) == [n + 1, 1, 0, 7, n + 7]


def test_enumerate_paths_examples():
    assert enumerate_paths(path(3), 0, 2, max_len=2).paths == [[0, 1, 2]]
    assert len(enumerate_paths(cycle(4), 0, 2, max_len=4)) == 2
    g = thm4_graph(5, 6)
    s = thm4_path_ids(5, 6)
    assert enumerate_paths(g, s[0], 1, max_len=4).paths == [[s[0], s[1], s[2], 0, 1]]


def test_enumerate_paths_cap():
    res = enumerate_paths(complete(7), 0, 1, cap=10)
    assert res.truncated and len(res) == 10


def _far_pairs_never_share_a_geodesic(g):
    diam = diameter(g)
    d = g.distances
    for x in range(g.order):
        for y in range(x + 1, g.order):
            if d[x, y] >= diam - 1:
                assert not internal_pair_on_geodesic(g, x, y)


def test_far_pairs_exhaustive():
    for n in range(2, 7):
        for g in enumerate_connected_graphs(n):
            _far_pairs_never_share_a_geodesic(g)


@settings(max_examples=300, deadline=None)
@given(connected_graphs(min_n=7, max_n=7))
def test_far_pairs_order_seven(g):
    _far_pairs_never_share_a_geodesic(g)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=7))
def test_count_geodesics_matches_enumeration(g):
    d = g.distances
    for u in range(g.order):
        for v in range(u + 1, g.order):
            listed = enumerate_paths(g, u, v, max_len=d[u, v]).paths
            assert count_geodesics(g, u, v) == len([p for p in listed if len(p) - 1 == d[u, v]])


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=8))
def test_distance_matrix_axioms(g):
    d = g.distances
    n = g.order
    for u in range(n):
        assert list(d.row(u)) == bfs_distances(g, u)
        assert d[u, u] == 0
        for v in range(n):
            assert d[u, v] == d[v, u]
            for w in range(n):
                assert d[u, w] <= d[u, v] + d[v, w]
    assert d.max_entry() == diameter(g)
    assert all(eccentricity(g, v) <= diameter(g) for v in range(n))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=8))
def test_adjacency_invariants(g):
    for u, nbrs in enumerate(g.adjacency):
        assert list(nbrs) == sorted(set(nbrs))
        assert u not in nbrs
        assert all(u in g.adjacency[v] for v in nbrs)
    assert parse_edge_list(format_edge_list(g)) == g
