import pytest

from rainbowvc.errors import FamilyError
from rainbowvc.families import (
    FamilySpec, Kind, complete, complete_multipartite, generate, generate_text, paper_label, thm4_graph,
    thm4_order, thm4_path_ids, wheel, wheel2,
)
from rainbowvc.graph import count_geodesics, cut_vertices, diameter, parse_edge_list


def test_wheel2_small():
    g = wheel2(3)
    assert (g.order, g.size) == (7, 12)


def test_multipartite_singletons_is_triangle():
    assert complete_multipartite([1, 1, 1]) == complete(3)


def test_multipartite_parts_sorted():
    a = generate(FamilySpec(Kind.MULTIPARTITE, parts=(3, 1, 2)))
    b = generate(FamilySpec(Kind.MULTIPARTITE, parts=(1, 2, 3)))
    assert a == b


def test_wheel_small():
    g = wheel(4)
    assert (g.order, g.size) == (5, 8)
    assert g.degree(4) == 4


@pytest.mark.parametrize("n", range(3, 31))
def test_wheel2_degrees(n):
    g = wheel2(n)
    assert g.degree(0) == n
    assert all(g.degree(i) == 4 for i in range(1, n + 1))
    assert all(g.degree(n + i) == 3 for i in range(1, n + 1))


@pytest.mark.parametrize("a,b,n,order,size", [(5, 6, 15, 34, 63), (5, 7, 20, 44, 83), (6, 8, 20, 45, 84)])
def test_thm4_counts(a, b, n, order, size):
    assert thm4_order(a, b) == n
    g = thm4_graph(a, b)
    assert (g.order, g.size) == (order, size)


@pytest.mark.parametrize("a,b", [(5, 5), (4, 9), (6, 6)])
def test_thm4_bad_params(a, b):
    with pytest.raises(FamilyError):
        thm4_graph(a, b)
    with pytest.raises(FamilyError):
        FamilySpec(Kind.THM4, a=a, b=b)


@pytest.mark.parametrize("a,b", [(5, 6), (5, 7), (6, 8)])
def test_thm4_structure(a, b):
    g = thm4_graph(a, b)
    n = thm4_order(a, b)
    s = thm4_path_ids(a, b)
    assert g.degree(s[0]) == 1
    assert cut_vertices(g) == set(s[1:])
    d = g.distances
    for j in range(1, n + 1):
        assert d[s[0], n + j] == a
        assert count_geodesics(g, s[0], n + j) == 1
    assert diameter(g) == a


@pytest.mark.parametrize("kw", [
    dict(kind=Kind.PATH), dict(kind=Kind.PATH, n=3, s=2), dict(kind=Kind.BIPARTITE, s=2),
    dict(kind=Kind.CYCLE, n=2), dict(kind=Kind.WHEEL2, n=2), dict(kind=Kind.PATH, n=0),
    dict(kind=Kind.MULTIPARTITE, parts=()), dict(kind=Kind.MULTIPARTITE, parts=(0, 2)),
])
def test_spec_validation(kw):
    with pytest.raises(FamilyError):
        FamilySpec(**kw)


SPECS = [
    FamilySpec(Kind.PATH, n=6), FamilySpec(Kind.CYCLE, n=5), FamilySpec(Kind.COMPLETE, n=4),
    FamilySpec(Kind.BIPARTITE, s=2, t=3), FamilySpec(Kind.MULTIPARTITE, parts=(2, 2, 1)),
    FamilySpec(Kind.WHEEL, n=6), FamilySpec(Kind.WHEEL2, n=9), FamilySpec(Kind.THM4, a=5, b=6),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.describe())
def test_generate_text_roundtrip(spec):
    text = generate_text(spec)
    assert text.startswith(f"# {spec.describe()}\n")
    assert parse_edge_list(text) == generate(spec)
    assert generate_text(spec) == text


def test_describe():
    assert FamilySpec(Kind.WHEEL2, n=9).describe() == "wheel2 n=9"
    assert FamilySpec(Kind.MULTIPARTITE, parts=(3, 1)).describe() == "multipartite parts=1,3"


def test_paper_labels():
    assert [paper_label(4, v) for v in (0, 1, 4, 5, 8)] == ["w", "u_1", "u_4", "v_1", "v_4"]
    spec = FamilySpec(Kind.THM4, a=5, b=6)
    assert [paper_label(spec, v) for v in thm4_path_ids(5, 6)] == ["s_0", "s_1", "s_2", "w"]
