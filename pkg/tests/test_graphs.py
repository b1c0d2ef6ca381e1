import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgame.families import (
    Complete,
    CompleteBipartite,
    CompleteSplit,
    Cycle,
    FamilyError,
    FamilySyntaxError,
    Path,
    SizeBoundError,
    Star,
    Union,
    build,
    parse_colors,
    parse_family,
)
from domgame.graphs import (
    Color,
    ColoredGraph,
    DuplicateEdgeError,
    DuplicateVertexError,
    SelfLoopError,
    UndeclaredVertexError,
    UnknownColorError,
    colors_of,
    components,
    disjoint_union,
    format_graph,
    parse_graph,
)

A, B, C = Color.A, Color.B, Color.C


def test_build_star_is_path_shaped():
    g = build(Star(C, 0, 0, 2))
    assert len(g) == 3
    assert g.colors == (C, C, C)
    assert sorted(g.edges()) == [(0, 1), (0, 2)]
    assert g.labels[0] == "u"


def test_build_split():
    g = build(CompleteSplit((A, B), (C, C, C)))
    assert len(g) == 5
    assert (0, 1) in g.edges()
    for k in (0, 1):
        for s in (2, 3, 4):
            assert (k, s) in g.edges()
    assert not any(u >= 2 and v >= 2 for u, v in g.edges())


def test_build_bipartite():
    g = build(CompleteBipartite((A, A), (A, A, A)))
    assert len(g) == 5 and len(g.edges()) == 6
    assert set(g.colors) == {A}
    assert g.labels == ("s1", "s2", "t1", "t2", "t3")


def test_build_path_cycle_complete():
    assert build(Path(4, colors_of("CCCC"))).edges() == [(0, 1), (1, 2), (2, 3)]
    assert len(build(Cycle(5, colors_of("ABCAB"))).edges()) == 5
    assert len(build(Complete(colors_of("AAAA"))).edges()) == 6


def test_build_union_records_blocks():
    g = build(Union((Star(C, 2, 0, 0), CompleteBipartite((A, A), (B, C)))))
    assert g.blocks == ((0, 3), (3, 7))
    assert g.labels[0] == "1.u" and g.labels[3] == "2.s1"
    assert len(components(g)) == 2


def test_size_errors():
    with pytest.raises(FamilyError):
        build(Cycle(2, colors_of("CC")))
    with pytest.raises(FamilyError):
        build(Path(3, colors_of("CC")))
    with pytest.raises(FamilyError):
        build(Star(A, -1, 0, 0))
    with pytest.raises(SizeBoundError):
        build(Star(A, 5000, 0, 0))


def test_parse_graph():
    g = parse_graph("v 1 A\nv 2 B\ne 1 2")
    assert g.colors == (A, B) and g.edges() == [(0, 1)]
    assert g.labels == ("1", "2")


def test_parse_graph_comments_and_blanks():
    g = parse_graph("# header\n\nv x C  # center\nv y C\n\ne x y\n")
    assert len(g) == 2 and g.edges() == [(0, 1)]


@pytest.mark.parametrize(
    "text,exc,line",
    [
        ("v 1 A\ne 1 1", SelfLoopError, 2),
        ("v 1 A\nv 1 B", DuplicateVertexError, 2),
        ("v 1 D", UnknownColorError, 1),
        ("v 1 A\ne 1 2", UndeclaredVertexError, 2),
        ("v 1 A\nv 2 A\ne 1 2\ne 2 1", DuplicateEdgeError, 4),
    ],
)
def test_parse_graph_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_family_examples():
    assert parse_family("star(center=A,a=1,b=3,c=0)") == Star(A, 1, 3, 0)
    u = parse_family("union(star(center=C,a=2,b=0,c=0), kst(S=AA,T=BC))")
    assert u == Union((Star(C, 2, 0, 0), CompleteBipartite((A, A), (B, C))))
    assert parse_family("cycle(n=7,colors=C*7)") == Cycle(7, (C,) * 7)


def test_parse_family_forms():
    assert parse_family("split(K=AB,S=C*3)") == CompleteSplit((A, B), (C, C, C))
    assert parse_family("complete(colors=A*2B)") == Complete((A, A, B))
    assert parse_family("path(n=8,colors=C)") == Path(8, (C,) * 8)
    assert parse_family("path(colors=ABC)") == Path(3, (A, B, C))
    assert parse_family("star(center=B)") == Star(B, 0, 0, 0)
    assert parse_colors("A*2BC*3") == (A, A, B, C, C, C)


@pytest.mark.parametrize(
    "bad",
    [
        "star(center=A,a=1",
        "star(center=D,a=1)",
        "blob(n=2)",
        "star(center=A,q=1)",
        "kst(S=AX,T=A)",
        "star(center=A,a=x)",
        "path(n=3,colors=AB)",
        "star(center=A,a=1,a=2)",
        "union()",
        "star(center=A) extra",
    ],
)
def test_parse_family_errors(bad):
    with pytest.raises(FamilyError):
        parse_family(bad)


def test_parse_family_count_overflow():
    with pytest.raises(SizeBoundError):
        parse_family("star(center=A,a=999999999)")
    with pytest.raises(SizeBoundError):
        parse_family("complete(colors=C*99999)")


def test_dsl_round_trip():
    for text in [
        "star(center=A,a=1,b=3,c=0)",
        "union(star(center=C,a=2,b=0,c=0),kst(S=AA,T=BC))",
        "cycle(n=7,colors=CCCCCCC)",
        "split(K=AB,S=CCC)",
    ]:
        assert str(parse_family(text)) == text


def test_components():
    k2 = ColoredGraph.from_edges("AB", [(0, 1)])
    assert components(k2) == [k2]
    two = disjoint_union([k2, k2])
    parts = components(two)
    assert len(parts) == 2 and all(len(p) == 2 and p.edges() == [(0, 1)] for p in parts)
    assert components(ColoredGraph((), ())) == []


def test_graph_invariants():
    with pytest.raises(ValueError):
        ColoredGraph((0b10, 0b00), (A, A))  # asymmetric
    with pytest.raises(ValueError):
        ColoredGraph((0b1,), (A,))  # self-loop
    with pytest.raises(ValueError):
        ColoredGraph.from_edges("A", [(0, 0)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    colors = draw(st.lists(st.sampled_from("ABC"), min_size=n, max_size=n))
    return ColoredGraph.from_edges(colors, edges)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_format_parse_round_trip(g):
    assert parse_graph(format_graph(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_components_partition_vertices(g):
    parts = components(g)
    assert sum(len(p) for p in parts) == len(g)
    assert sum(len(p.edges()) for p in parts) == len(g.edges())
    labels = [x for p in parts for x in p.labels]
    assert sorted(labels) == sorted(g.labels)


stars = st.builds(
    Star,
    st.sampled_from(list(Color)),
    st.integers(0, 4),
    st.integers(0, 4),
    st.integers(0, 4),
)


@settings(max_examples=100, deadline=None)
@given(st.lists(stars, min_size=1, max_size=4))
def test_union_components_match_parts(parts):
    g = build(Union(tuple(parts)))
    comps = components(g)
    assert len(comps) == len(parts)
    for comp, spec in zip(comps, parts):
        piece = build(spec)
        assert comp.colors == piece.colors
        assert comp.adjacency == piece.adjacency
