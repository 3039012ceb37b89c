import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from stablecore.graph import (
    Graph,
    GraphFormatError,
    bipartition,
    closed_neighborhood,
    emit_edge_list,
    emit_graph6,
    induced_subgraph,
    is_bipartite,
    isolated_vertices,
    neighborhood,
    non_edges,
    odd_cycle,
    parse_edge_list,
    parse_graph6,
    with_edge,
)
from stablecore.generators import named, standard


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_rows(2, [0b10, 0b00])  # asymmetric


def test_graph_basic_accessors():
    g = standard("path", 3)
    assert g.n == 3 and g.m == 2
    assert g.neighbors(1) == {0, 2}
    assert g.degree(1) == 2 and g.degree(0) == 1
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g == Graph(3, [(1, 2), (0, 1)])
    assert hash(g) == hash(Graph(3, [(0, 1), (1, 2)]))


def test_neighborhood_path_endpoints():
    p3 = standard("path", 3)
    assert neighborhood(p3, {0, 2}) == {1}
    assert neighborhood(p3, set()) == set()


def test_neighborhood_may_intersect_input():
    p3 = standard("path", 3)
    assert neighborhood(p3, {0, 1}) == {0, 1, 2}


def test_neighborhood_fig2_g1():
    g1 = named("fig2_G1")
    ab = g1.vertex_set("a", "b")
    assert neighborhood(g1.graph, ab) == g1.vertex_set("c")
    assert closed_neighborhood(g1.graph, ab) == g1.vertex_set("a", "b", "c")


def test_neighborhood_rejects_out_of_range():
    with pytest.raises(ValueError):
        neighborhood(standard("path", 3), {5})
    with pytest.raises(ValueError):
        closed_neighborhood(standard("path", 3), {-1})


def test_closed_neighborhood_center_of_path():
    p3 = standard("path", 3)
    assert closed_neighborhood(p3, {1}) == {0, 1, 2}
    assert closed_neighborhood(p3, set()) == set()


def test_isolated_vertices():
    assert isolated_vertices(Graph(1)) == {0}
    assert isolated_vertices(standard("cycle", 4)) == set()
    assert isolated_vertices(standard("k1_plus_c4")) == {0}


def test_induced_subgraph_identity_and_triple():
    c4 = standard("cycle", 4)
    whole, relabel = induced_subgraph(c4, range(4))
    assert whole == c4
    assert relabel == {v: v for v in range(4)}
    path, _ = induced_subgraph(c4, {0, 1, 2})
    assert path.m == 2  # three consecutive cycle vertices give a path
    split, _ = induced_subgraph(c4, {0, 1, 3})
    assert split.m == 2 and split.degree(0) == 2


def test_induced_subgraph_fig2_g1_outside_core_closure():
    g1 = named("fig2_G1")
    keep = set(range(5)) - closed_neighborhood(g1.graph, g1.vertex_set("a", "b"))
    sub, relabel = induced_subgraph(g1.graph, keep)
    assert sub.n == 2 and sub.m == 1
    assert set(relabel) == g1.vertex_set("d", "e")


@settings(max_examples=150)
@given(graphs(max_n=8), st.data())
def test_neighborhood_monotone_and_closed_contains(g, data):
    sub = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    sup = sub | (
        data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n)) if g.n else set()
    )
    assert neighborhood(g, sub) <= neighborhood(g, sup)
    assert sub <= closed_neighborhood(g, sub)


def test_bipartition_c4():
    sides = bipartition(standard("cycle", 4))
    assert sides is not None
    assert sides.left == {0, 2} and sides.right == {1, 3}
    assert odd_cycle(standard("cycle", 4)) is None


def test_bipartition_k3_witness():
    k3 = standard("complete", 3)
    assert bipartition(k3) is None
    cycle = odd_cycle(k3)
    assert cycle is not None and len(cycle) == 3
    for i, u in enumerate(cycle):
        assert k3.has_edge(u, cycle[(i + 1) % len(cycle)])


def test_bipartition_isolated_vertices_go_left():
    sides = bipartition(standard("k1_plus_c4"))
    assert 0 in sides.left


def test_fig77_contains_triangle():
    # the tail vertex next to the last clique pendant closes a triangle,
    # so the family is never bipartite
    from stablecore.generators import fig77

    lg = fig77(2)
    assert not is_bipartite(lg.graph)
    cycle = odd_cycle(lg.graph)
    assert cycle is not None and len(cycle) % 2 == 1
    for i, u in enumerate(cycle):
        assert lg.graph.has_edge(u, cycle[(i + 1) % len(cycle)])


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_odd_cycle_witness_is_valid(g):
    cycle = odd_cycle(g)
    if cycle is None:
        assert bipartition(g) is not None
    else:
        assert len(cycle) % 2 == 1 and len(set(cycle)) == len(cycle)
        for i, u in enumerate(cycle):
            assert g.has_edge(u, cycle[(i + 1) % len(cycle)])


def test_graph6_k4_and_c4():
    k4 = standard("complete", 4)
    assert emit_graph6(k4) == "C~"
    assert parse_graph6("C~") == k4
    c4 = standard("cycle", 4)
    assert emit_graph6(c4) == "Cl"
    assert parse_graph6("Cl") == c4


def test_graph6_empty_and_single():
    assert parse_graph6("?").n == 0
    assert emit_graph6(Graph(0)) == "?"
    assert parse_graph6("@") == Graph(1)


def test_graph6_rejects_malformed():
    with pytest.raises(GraphFormatError):
        parse_graph6("C")  # truncated body
    with pytest.raises(GraphFormatError):
        parse_graph6("C~~")  # overlong body
    with pytest.raises(GraphFormatError):
        parse_graph6("B!")  # character out of range
    with pytest.raises(GraphFormatError):
        parse_graph6("A_")  # nonzero trailing bits for n=2


def test_graph6_long_form_round_trip():
    g = standard("path", 70)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@settings(max_examples=250)
@given(graphs(max_n=9))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_parse_edge_list_basic():
    assert parse_edge_list("3\n0 1\n1 2") == standard("path", 3)
    assert parse_edge_list("2\n0 1\n1 0\n") == Graph(2, [(0, 1)])
    assert parse_edge_list("1\n") == Graph(1)
    assert parse_edge_list("# header\n3  # n\n0 1\n# done\n1 2") == standard("path", 3)


def test_parse_edge_list_errors():
    with pytest.raises(GraphFormatError):
        parse_edge_list("2\n1 1\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("2\n0 2\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("")
    with pytest.raises(GraphFormatError):
        parse_edge_list("2\n0\n")
    err = None
    try:
        parse_edge_list("3\n0 1\n0 0\n")
    except GraphFormatError as exc:
        err = exc
    assert err is not None and err.line == 3


@settings(max_examples=100)
@given(graphs(max_n=9))
def test_edge_list_round_trip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


def test_with_edge_and_non_edges():
    p3 = standard("path", 3)
    closed = with_edge(p3, 0, 2)
    assert closed == standard("cycle", 3)
    assert with_edge(p3, 0, 1) == p3
    assert list(non_edges(p3)) == [(0, 2)]
    with pytest.raises(ValueError):
        with_edge(p3, 1, 1)
